#include "kron/galois.hpp"
#include "kron/poly_algorithms.hpp"

#include <algorithm>
#include <numeric>

namespace kron {

namespace {

std::vector<std::string> root_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

SplittingAlgebra::SplittingAlgebra(const UniPoly& f) : f_(f), n_(f.degree()) {
  if (n_ < 1) throw MathError("splitting algebra needs degree >= 1");
  if (n_ > 5) throw MathError("degree > 5 (dimension 120 cap)");
  if (!f.is_monic()) throw MathError("splitting algebra needs a monic polynomial");

  // h_k in [0, n-k] for k = 1..n-1, x1 varying fastest
  std::size_t dim = 1;
  for (int k = 1; k < n_; ++k) dim *= static_cast<std::size_t>(n_ - k + 1);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<unsigned> h(n_ - 1);
    std::size_t rest = idx;
    for (int k = 1; k < n_; ++k) {
      const std::size_t radix = n_ - k + 1;
      h[k - 1] = static_cast<unsigned>(rest % radix);
      rest /= radix;
    }
    basis_.push_back(h);
  }

  std::vector<Element> f1;
  for (int i = 0; i <= n_; ++i) f1.push_back(constant(f.coeff(i)));
  cascade_.push_back(f1);

  // x_k^e * a for elements whose x_k exponents stay within range
  auto shift = [&](const Element& a, int k, unsigned e) {
    Element out = zero();
    for (std::size_t b = 0; b < a.size(); ++b) {
      if (a[b] == 0) continue;
      std::vector<unsigned> h = basis_[b];
      h[k - 1] += e;
      out[index_of(h)] += a[b];
    }
    return out;
  };

  for (int j = 1; j < n_; ++j) {
    const std::vector<Element>& fj = cascade_[j - 1];
    const unsigned top = static_cast<unsigned>(n_ - j + 1);
    // x_j^top = -(lower coefficients of f_j at x_j)
    Element overflow = zero();
    for (unsigned i = 0; i < top; ++i) overflow = add(overflow, scale(shift(fj[i], j, i), Rational(-1)));

    RatMatrix t(dimension(), std::vector<Rational>(dimension(), Rational(0)));
    for (std::size_t b = 0; b < dimension(); ++b) {
      std::vector<unsigned> h = basis_[b];
      Element col;
      if (h[j - 1] + 1 < top) {
        col = zero();
        ++h[j - 1];
        col[index_of(h)] = 1;
      } else {
        col = overflow;
        for (int k = 1; k < n_; ++k) {
          if (k == j) continue;
          if (k > j) {
            col = shift(col, k, h[k - 1]);
          } else {
            for (unsigned e = 0; e < h[k - 1]; ++e) col = multiply_by_root(k, col);
          }
        }
      }
      for (std::size_t r = 0; r < dimension(); ++r) t[r][b] = col[r];
    }
    root_matrices_.push_back(std::move(t));

    // synthetic division of f_j by (x - x_j)
    std::vector<Element> q(top);
    q[top - 1] = fj[top];
    for (unsigned i = top - 1; i >= 1; --i) q[i - 1] = add(fj[i], multiply_by_root(j, q[i]));
    cascade_.push_back(q);
  }
}

std::size_t SplittingAlgebra::index_of(const std::vector<unsigned>& h) const {
  std::size_t idx = 0, w = 1;
  for (int k = 1; k < n_; ++k) {
    const std::size_t radix = n_ - k + 1;
    if (h[k - 1] >= radix) throw std::logic_error("exponent outside the monomial basis");
    idx += h[k - 1] * w;
    w *= radix;
  }
  return idx;
}

std::string SplittingAlgebra::basis_monomial(std::size_t k) const {
  std::vector<std::string> names = root_names(n_ - 1);
  MultiPoly m(names);
  m.add_term(Monomial(basis_[k].begin(), basis_[k].end()), Rational(1));
  return m.to_string();
}

SplittingAlgebra::Element SplittingAlgebra::constant(const Rational& c) const {
  Element e = zero();
  e[0] = c;
  return e;
}

SplittingAlgebra::Element SplittingAlgebra::root(int j) const {
  if (j < 1 || j > n_) throw MathError("root index out of range");
  if (j == n_) return scale(cascade_[n_ - 1][0], Rational(-1));
  std::vector<unsigned> h(n_ - 1, 0);
  h[j - 1] = 1;
  Element e = zero();
  e[index_of(h)] = 1;
  return e;
}

SplittingAlgebra::Element SplittingAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

SplittingAlgebra::Element SplittingAlgebra::scale(const Element& a, const Rational& c) const {
  Element out = a;
  for (auto& v : out) v *= c;
  return out;
}

SplittingAlgebra::Element SplittingAlgebra::multiply_by_root(int j, const Element& a) const {
  return root_matrices_[j - 1] * a;
}

SplittingAlgebra::Element SplittingAlgebra::multiply(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    Element t = b;
    for (int j = 1; j < n_; ++j)
      for (unsigned e = 0; e < basis_[k][j - 1]; ++e) t = multiply_by_root(j, t);
    out = add(out, scale(t, a[k]));
  }
  return out;
}

RatMatrix SplittingAlgebra::multiplication_matrix(const Element& a) const {
  RatMatrix m(dimension(), std::vector<Rational>(dimension(), Rational(0)));
  for (std::size_t b = 0; b < dimension(); ++b) {
    Element e = zero();
    e[b] = 1;
    const Element col = multiply(a, e);
    for (std::size_t r = 0; r < dimension(); ++r) m[r][b] = col[r];
  }
  return m;
}

SplittingAlgebra::Element SplittingAlgebra::evaluate(const MultiPoly& p,
                                                     const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != n_) throw MathError("expected one name per root");
  const MultiPoly q = p.with_vars(merge_vars(names, p.vars()));
  if (q.nvars() != names.size()) throw MathError("polynomial involves variables other than the roots");
  std::vector<std::vector<Element>> powers(n_);
  for (int j = 0; j < n_; ++j) powers[j].push_back(constant(Rational(1)));
  Element out = zero();
  for (const auto& [m, c] : q.terms()) {
    Element t = constant(c);
    for (int j = 0; j < n_; ++j) {
      while (powers[j].size() <= m[j]) powers[j].push_back(multiply(powers[j].back(), root(j + 1)));
      if (m[j]) t = multiply(t, powers[j][m[j]]);
    }
    out = add(out, t);
  }
  return out;
}

std::optional<Rational> SplittingAlgebra::as_constant(const Element& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return std::nullopt;
  return a[0];
}

SplittingAlgebra::Element SplittingAlgebra::elementary_symmetric(int k) const {
  // coefficient extraction from prod (1 + x_j t)
  std::vector<Element> e{constant(Rational(1))};
  for (int j = 1; j <= n_; ++j) {
    const Element x = root(j);
    std::vector<Element> next(e.size() + 1, zero());
    for (std::size_t i = 0; i < e.size(); ++i) {
      next[i] = add(next[i], e[i]);
      next[i + 1] = add(next[i + 1], multiply(e[i], x));
    }
    e = std::move(next);
  }
  if (k < 0 || k > n_) return zero();
  return e[k];
}

UniPoly resolvent_total_symmetric(const UniPoly& f, const std::vector<Integer>& u) {
  const SplittingAlgebra a(f);
  const int n = a.degree();
  if (static_cast<int>(u.size()) != n) throw MathError("expected " + std::to_string(n) + " multipliers");
  // x_n = e_1 - x_1 - ... - x_{n-1}
  const Rational e1 = -f.coeff(n - 1);
  RatMatrix m = identity_matrix(a.dimension());
  for (auto& row : m)
    for (auto& v : row) v *= Rational(u[n - 1]) * e1;
  for (int j = 1; j < n; ++j) {
    const RatMatrix t = a.multiplication_matrix(a.root(j));
    const Rational c = Rational(u[j - 1] - u[n - 1]);
    if (c == 0) continue;
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t s = 0; s < m.size(); ++s) m[r][s] += c * t[r][s];
  }
  return characteristic_polynomial(m, "X");
}

GenusDiscIdentity genus_disc_identity(int n) {
  if (n != 2 && n != 3) throw MathError("genus_disc_identity supports n = 2 and n = 3");
  const auto names = root_names(n);
  const SplittingAlgebra shape(UniPoly::from_integers(std::vector<Integer>(n + 1, Integer(1))));
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<MultiPoly>> rows;
  do {
    std::vector<MultiPoly> row;
    for (const auto& h : shape.basis()) {
      MultiPoly e(names, Rational(1));
      for (int k = 0; k + 1 < n; ++k) e *= MultiPoly::variable(names, sigma[k]).pow(h[k]);
      row.push_back(e);
    }
    rows.push_back(row);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  const MultiPoly det = determinant(rows).with_vars(names);
  MultiPoly disc(names, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiPoly d = MultiPoly::variable(names, i) - MultiPoly::variable(names, j);
      disc *= d * d;
    }
  GenusDiscIdentity out;
  out.lhs = det * det;
  out.rhs = disc.pow(static_cast<unsigned>(rows.size() / 2));
  out.equal = out.lhs == out.rhs;
  return out;
}

Rational specialize_symmetric(const MultiPoly& p, const UniPoly& f) {
  const SplittingAlgebra a(f);
  const auto value = a.as_constant(a.evaluate(p, root_names(a.degree())));
  if (!value) throw MathError("polynomial is not symmetric modulo the relations of f");
  return *value;
}

}  // namespace kron
