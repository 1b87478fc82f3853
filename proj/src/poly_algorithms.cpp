#include "kron/poly_algorithms.hpp"

#include <algorithm>
#include <map>

namespace kron {

std::pair<Integer, MultiPoly> clear_denominators(const MultiPoly& p) {
  const Integer l = p.denominator_lcm();
  return {l, p * Rational(l)};
}

ContentPrimitive content_primitive(const MultiPoly& p) {
  if (!p.all_integer_coefficients()) throw MathError("content requires integer coefficients");
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) {
    g = gcd(g, c.get_num());
    if (g == 1) break;
  }
  if (g == 0) return {0, p};
  return {g, p * make_rational(1, g)};
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  auto [scale, q] = clear_denominators(p);
  auto cp = content_primitive(q);
  if (cp.primitive.leading_coefficient() < 0) return -cp.primitive;
  return cp.primitive;
}

namespace {

MultiPoly exact(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("expected exact division failed");
  return *r;
}

std::string first_shared_var(const MultiPoly& p, const MultiPoly& q) {
  for (const auto& v : p.vars())
    if (p.degree(v) > 0 && q.degree(v) > 0) return v;
  return {};
}

}  // namespace

MultiPoly content_in(const MultiPoly& p, const std::string& var) {
  MultiPoly g(p.vars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly content_in(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::vector<bool> main(p.nvars(), false);
  for (const auto& v : vars)
    if (auto i = p.index_of(v)) main[*i] = true;
  std::map<Monomial, MultiPoly> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial key(m.size(), 0), rest = m;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (main[i]) {
        key[i] = m[i];
        rest[i] = 0;
      }
    auto it = groups.try_emplace(key, MultiPoly(p.vars())).first;
    it->second.add_term(rest, c);
  }
  MultiPoly g(p.vars());
  for (const auto& [k, c] : groups) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const auto dq = q.degree(var);
  const auto dp = p.degree(var);
  if (q.is_zero()) throw MathError("pseudo-remainder by zero");
  if (dp < dq || p.is_zero()) return p;
  const auto qc = q.coefficients_in(var);
  const MultiPoly lc = qc[dq];
  const auto vars = merge_vars(p.vars(), q.vars());
  const MultiPoly v = MultiPoly::variable(vars, *MultiPoly(vars).index_of(var));
  MultiPoly r = p.with_vars(vars);
  unsigned steps = 0;
  while (!r.is_zero() && r.degree(var) >= dq) {
    const auto dr = r.degree(var);
    const MultiPoly lr = r.coefficients_in(var)[dr];
    r = lc * r - lr * v.pow(dr - dq) * q;
    ++steps;
  }
  const unsigned total = dp - dq + 1;
  if (steps < total) r *= lc.pow(total - steps);
  return r;
}

MultiPoly gcd(const MultiPoly& p0, const MultiPoly& q0) {
  const auto vars = merge_vars(p0.vars(), q0.vars());
  const MultiPoly p = p0.with_vars(vars), q = q0.with_vars(vars);
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return MultiPoly(vars, Rational(1));
  // A variable occurring in only one argument cannot occur in the gcd.
  for (const auto& v : vars) {
    const bool inp = p.degree(v) > 0, inq = q.degree(v) > 0;
    if (inp && !inq) return gcd(content_in(p, v), q);
    if (inq && !inp) return gcd(p, content_in(q, v));
  }
  const std::string v = first_shared_var(p, q);
  const MultiPoly cp = content_in(p, v), cq = content_in(q, v);
  const MultiPoly c = gcd(cp, cq);
  MultiPoly a = exact(p, cp), b = exact(q, cq);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  MultiPoly g(vars, Rational(1));
  for (;;) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree(v) == 0) break;
    a = std::move(b);
    b = exact(r, content_in(r, v));
  }
  if (g.degree(v) > 0) g = exact(g, content_in(g, v));
  return normalize(c * g);
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(m[0][0].vars());
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? t * (1 / prev.constant_term()) : exact(t, prev);
      }
      m[i][k] = MultiPoly(m[i][k].vars());
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& p, const MultiPoly& q,
                                                     const std::string& var) {
  const auto vars = merge_vars(p.vars(), q.vars());
  const auto pc = p.with_vars(vars).coefficients_in(var);
  const auto qc = q.with_vars(vars).coefficients_in(var);
  const std::size_t dp = pc.size() - 1, dq = qc.size() - 1, n = dp + dq;
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (std::size_t i = 0; i < dq; ++i)
    for (std::size_t k = 0; k <= dp; ++k) s[i][i + dp - k] = pc[k].with_vars(vars);
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t k = 0; k <= dq; ++k) s[dq + i][i + dq - k] = qc[k].with_vars(vars);
  return s;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const auto dp = p.degree(var), dq = q.degree(var);
  const auto vars = merge_vars(p.vars(), q.vars());
  if (dp == 0 && dq == 0) throw MathError("no elimination variable");
  if (p.is_zero() || q.is_zero()) return MultiPoly(vars);
  if (dp == 0) return p.with_vars(vars).pow(dq);
  if (dq == 0) return q.with_vars(vars).pow(dp);
  return determinant(sylvester_matrix(p, q, var)).with_vars(vars);
}

MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
  const auto m = p.degree(var);
  if (m == 0) throw MathError("discriminant needs positive degree in " + var);
  const MultiPoly lc = p.coefficients_in(var)[m];
  MultiPoly res = resultant(p, p.derivative(var), var);
  MultiPoly d = exact(res, lc);
  if ((static_cast<unsigned long>(m) * (m - 1) / 2) % 2 == 1) d = -d;
  return d;
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly rest = p;
  MultiPoly result(p.vars(), Rational(1));
  for (const auto& v : p.vars()) {
    if (rest.degree(v) == 0) continue;
    const MultiPoly g = gcd(rest, rest.derivative(v));
    result *= exact(rest, g);
    rest = content_in(rest, v);
  }
  return normalize(result);
}

std::pair<UniPoly, KroneckerCodec> kronecker_substitute(const MultiPoly& p, std::uint64_t g) {
  if (g < 2) throw MathError("substitution base must be at least 2");
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree(i) >= g)
      throw MathError("substitution base " + std::to_string(g) + " too small for degree " +
                      std::to_string(p.degree(i)) + " in " + p.vars()[i]);
  KroneckerCodec codec{g, p.vars()};
  std::map<std::uint64_t, Rational> image;
  const std::uint64_t limit = 1u << 20;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t e = 0, w = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      e += m[i] * w;
      if (e > limit) throw MathError("Kronecker substitution exponent too large");
      if (i + 1 < m.size()) {
        if (w > limit / g + 1) w = limit + 1;
        else w *= g;
      }
    }
    image[e] += c;
  }
  std::vector<Rational> coeffs(image.empty() ? 0 : image.rbegin()->first + 1);
  for (const auto& [e, c] : image) coeffs[e] = c;
  const std::string name = p.vars().empty() ? "x" : p.vars()[0];
  return {UniPoly(std::move(coeffs), name), codec};
}

MultiPoly kronecker_inverse(const UniPoly& u, const KroneckerCodec& codec) {
  MultiPoly out(codec.vars);
  for (std::size_t e = 0; e < u.coeffs().size(); ++e) {
    if (u.coeffs()[e] == 0) continue;
    Monomial m(codec.vars.size(), 0);
    std::uint64_t rest = e;
    for (std::size_t i = 0; i < m.size() && rest; ++i) {
      m[i] = static_cast<std::uint32_t>(rest % codec.base);
      rest /= codec.base;
    }
    if (rest) throw MathError("exponent " + std::to_string(e) + " outside the codec range");
    out.add_term(m, u.coeffs()[e]);
  }
  return out;
}

}  // namespace kron
