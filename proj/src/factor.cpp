#include "kron/factor.hpp"

#include "kron/poly_algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace kron {

MultiPoly Factorization::expand() const {
  MultiPoly out = MultiPoly::constant(unit);
  for (const auto& [f, m] : factors) out *= f.pow(m);
  return out;
}

std::size_t Factorization::count_with_multiplicity() const {
  std::size_t n = 0;
  for (const auto& fm : factors) n += fm.second;
  return n;
}

bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const GrlexGreater greater;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms().size() < b.terms().size();
}

UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c.get_num() * (den / c.get_den()));
  Rational scale = make_rational(den, g);
  if (f.leading() < 0) scale = -scale;
  return scale * f;
}

namespace {

std::optional<UniPoly> divide_univariate(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = UniPoly::divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

// Yun's squarefree decomposition over Q; parts are primitive.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  const UniPoly fp = f.derivative();
  UniPoly c = UniPoly::gcd(f, fp);
  UniPoly w = UniPoly::divmod(f, c).first;
  UniPoly y = UniPoly::divmod(fp, c).first;
  UniPoly z = y - w.derivative();
  for (unsigned i = 1; w.degree() > 0; ++i) {
    const UniPoly g = UniPoly::gcd(w, z);
    if (g.degree() > 0) out.emplace_back(primitive_part(g), i);
    w = UniPoly::divmod(w, g).first;
    y = UniPoly::divmod(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

// Integer points 0, 1, -1, 2, -2, ...
Integer point(std::size_t i) {
  const long k = static_cast<long>((i + 1) / 2);
  return i % 2 ? Integer(k) : Integer(-k);
}

// Search for a factor of degree d by interpolation through divisors of the
// values of a at d + 1 integer points.  The first accepted candidate in
// divisor-tuple order is returned, made primitive.
std::optional<UniPoly> find_factor(const UniPoly& a, int d) {
  std::vector<Rational> r, v;
  for (std::size_t i = 0; static_cast<int>(r.size()) <= d; ++i) {
    const Integer x = point(i);
    const Rational val = a.evaluate(x);
    if (val == 0) return UniPoly({-Rational(x), 1}, a.var());
    r.emplace_back(x);
    v.push_back(val);
  }
  std::vector<std::vector<Integer>> choices(d + 1);
  for (int i = 0; i <= d; ++i) {
    for (const auto& t : positive_divisors(v[i].get_num())) {
      choices[i].push_back(t);
      if (i > 0) choices[i].push_back(-t);
    }
  }
  const Integer lc = a.leading().get_num();
  // dd[k][j]: divided difference over points k-j..k
  std::vector<std::vector<Rational>> dd(d + 1);
  std::optional<UniPoly> found;

  std::function<bool(int)> search = [&](int k) -> bool {
    for (const auto& w : choices[k]) {
      dd[k].assign(k + 1, Rational(0));
      dd[k][0] = w;
      bool ok = true;
      for (int j = 1; j <= k && ok; ++j) {
        dd[k][j] = (dd[k][j - 1] - dd[k - 1][j - 1]) / (r[k] - r[k - j]);
        ok = is_integer(dd[k][j]);
      }
      if (!ok) continue;
      if (k < d) {
        if (search(k + 1)) return true;
        continue;
      }
      const Rational& top = dd[d][d];
      if (top == 0 || lc % top.get_num() != 0) continue;
      UniPoly g({top}, a.var());
      for (int i = d - 1; i >= 0; --i) g = g * UniPoly({-r[i], 1}, a.var()) + UniPoly({dd[i][i]}, a.var());
      if (divide_univariate(a, g)) {
        found = primitive_part(g);
        return true;
      }
    }
    return false;
  };
  search(0);
  return found;
}

std::vector<UniPoly> split_squarefree(UniPoly a) {
  std::vector<UniPoly> out;
  while (a.degree() >= 2) {
    auto g = find_factor(a, 1);
    if (!g) break;
    out.push_back(*g);
    a = *divide_univariate(a, *g);
  }
  if (a.degree() > kMaxInterpolationDegree)
    throw MathError("interpolation search is limited to degree " +
                    std::to_string(kMaxInterpolationDegree) + ", got degree " +
                    std::to_string(a.degree()));
  for (int d = 2; 2 * d <= a.degree();) {
    if (auto g = find_factor(a, d)) {
      out.push_back(*g);
      a = *divide_univariate(a, *g);
    } else {
      ++d;
    }
  }
  if (a.degree() >= 1) out.push_back(primitive_part(a));
  return out;
}

void sort_factors(Factorization& f) {
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
}

}  // namespace

Factorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  Factorization out;
  const UniPoly p = primitive_part(f);
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (const auto& g : split_squarefree(part)) out.factors.emplace_back(g.to_multipoly(), mult);
  Rational denom = 1;
  for (const auto& [g, m] : out.factors) denom *= pow(g.leading_coefficient(), m);
  out.unit = f.leading() / denom;
  sort_factors(out);
  return out;
}

namespace {

// Irreducible factors of a squarefree primitive polynomial in >= 2 variables.
std::vector<MultiPoly> kronecker_split(const MultiPoly& s) {
  std::uint32_t maxdeg = 0;
  for (std::size_t i = 0; i < s.nvars(); ++i) maxdeg = std::max(maxdeg, s.degree(i));
  auto [image, codec] = kronecker_substitute(s, maxdeg + 1);
  std::vector<UniPoly> pool;
  for (const auto& [g, m] : factor_univariate(image).factors)
    for (unsigned k = 0; k < m; ++k) pool.push_back(UniPoly::from_multipoly(g, g.vars()[0]));
  if (pool.size() > kMaxImageFactors)
    throw MathError("Kronecker image has " + std::to_string(pool.size()) +
                    " factors; recombination is limited to " + std::to_string(kMaxImageFactors));

  std::vector<MultiPoly> out;
  MultiPoly rest = s;
  while (!pool.empty()) {
    bool found = false;
    for (std::size_t size = 1; size < pool.size() && !found; ++size) {
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      for (;;) {
        UniPoly h({1}, pool[0].var());
        for (auto i : idx) h = h * pool[i];
        const MultiPoly cand = kronecker_inverse(h, codec);
        if (!cand.is_constant()) {
          if (auto q = divide_exact(rest, cand)) {
            out.push_back(normalize(cand));
            rest = *q;
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
            found = true;
            break;
          }
        }
        // next combination
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!found) {
      out.push_back(normalize(rest));
      pool.clear();
    }
  }
  return out;
}

}  // namespace

Factorization factor_multivariate(const MultiPoly& f) {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  const auto support = f.support();
  Factorization out;
  if (support.empty()) {
    out.unit = f.constant_term();
    return out;
  }
  if (support.size() == 1) {
    Factorization u = factor_univariate(UniPoly::from_multipoly(f, support[0]));
    for (auto& [g, m] : u.factors) g = g.with_vars(f.vars());
    return u;
  }
  MultiPoly p = normalize(f);
  std::vector<MultiPoly> irreducible;
  // monomial content
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    std::uint32_t e = p.degree(v);
    for (const auto& [m, c] : p.terms()) e = std::min(e, m[v]);
    if (e == 0) continue;
    const MultiPoly x = MultiPoly::variable(p.vars(), v);
    irreducible.push_back(x);
    p = *divide_exact(p, x.pow(e));
  }
  const MultiPoly s = squarefree_part(p);
  if (!s.is_constant()) {
    if (s.support().size() == 1) {
      for (const auto& [g, m] : factor_univariate(UniPoly::from_multipoly(s, s.support()[0])).factors)
        irreducible.push_back(g.with_vars(f.vars()));
    } else {
      for (const auto& g : kronecker_split(s)) irreducible.push_back(g.with_vars(f.vars()));
    }
  }
  MultiPoly rest = normalize(f);
  Rational lc_product = 1;
  for (const auto& q : irreducible) {
    unsigned m = 0;
    while (auto d = divide_exact(rest, q)) {
      rest = *d;
      ++m;
    }
    out.factors.emplace_back(q, m);
    lc_product *= pow(q.leading_coefficient(), m);
  }
  // leading monomials multiply, so the unit is a ratio of leading coefficients
  out.unit = f.leading_coefficient() / lc_product;
  sort_factors(out);
  return out;
}

namespace {

using ModPoly = std::vector<long>;  // low to high, reduced, no trailing zeros

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

// Remainder of a by b (b nonzero); quotient returned through q when given.
ModPoly mod_rem(ModPoly a, const ModPoly& b, long p, ModPoly* q = nullptr) {
  const std::size_t db = b.size() - 1;
  const long inv = inv_mod(b.back(), p);
  if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const long c = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

// base^e mod m
ModPoly mod_pow(ModPoly base, long e, const ModPoly& m, long p) {
  ModPoly r{1};
  base = mod_rem(base, m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = mod_rem(mod_mul(r, base, p), m, p);
    base = mod_rem(mod_mul(base, base, p), m, p);
  }
  return r;
}

UniPoly to_unipoly(const ModPoly& a, const std::string& var) {
  std::vector<Rational> c(a.begin(), a.end());
  return UniPoly(std::move(c), var);
}

// Monic degree-d divisors of g, in lexicographic order of (c_{d-1}, ..., c_0),
// until their product accounts for all of g.
std::vector<ModPoly> split_equal_degree(ModPoly g, std::size_t d, long p) {
  std::vector<ModPoly> out;
  constexpr double kBudget = 2e7;
  if (std::pow(static_cast<double>(p), static_cast<double>(d)) > kBudget)
    throw MathError("mod-p trial division search too large");
  ModPoly cand(d + 1, 0);
  cand[d] = 1;
  while (g.size() - 1 > d) {
    ModPoly q;
    if (mod_rem(g, cand, p, &q).empty()) {
      out.push_back(cand);
      g = q;
      trim(g);
    }
    // advance: increment the lowest coefficient first so that the
    // enumeration runs in lexicographic order from the top coefficient
    std::size_t i = 0;
    while (i < d && ++cand[i] == p) cand[i++] = 0;
    if (i == d) throw std::logic_error("equal-degree enumeration exhausted");
  }
  out.push_back(g);
  return out;
}

}  // namespace

ModPFactorization factor_mod_p(const UniPoly& f, const Integer& p_in) {
  if (!is_prime(p_in)) throw MathError(p_in.get_str() + " is not prime");
  if (p_in > 997) throw MathError("factorization mod p requires p <= 997");
  if (!f.has_integer_coefficients()) throw MathError("factorization mod p needs integer coefficients");
  if (f.degree() > 8) throw MathError("factorization mod p is limited to degree 8");
  const long p = static_cast<long>(p_in.get_si());
  if (f.is_zero() || mod(f.leading().get_num(), p_in) == 0)
    throw MathError("leading coefficient vanishes mod p");
  ModPoly a;
  for (const auto& c : f.coeffs()) a.push_back(mod(c.get_num(), p_in).get_si());
  const long inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;

  ModPFactorization out{p_in, {}};
  auto take = [&](ModPoly g) {
    unsigned m = 0;
    for (;;) {
      ModPoly q;
      if (!mod_rem(a, g, p, &q).empty()) break;
      trim(q);
      a = q;
      ++m;
    }
    out.factors.emplace_back(to_unipoly(g, f.var()), m);
  };
  const ModPoly x{0, 1};
  ModPoly frob = x;  // x^(p^d) mod a, recomputed as a shrinks
  for (std::size_t d = 1; 2 * d <= a.size() - 1; ++d) {
    frob = mod_pow(x, p, a, p);
    for (std::size_t k = 1; k < d; ++k) frob = mod_pow(frob, p, a, p);
    ModPoly diff = frob;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] - 1 + p) % p;
    trim(diff);
    ModPoly g = mod_gcd(a, diff, p);
    if (g.size() <= 1) continue;
    for (const auto& h : split_equal_degree(g, d, p)) take(h);
  }
  if (a.size() > 1) take(a);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& u, const auto& v) {
    if (u.first.degree() != v.first.degree()) return u.first.degree() < v.first.degree();
    for (int i = u.first.degree(); i >= 0; --i)
      if (u.first.coeff(i) != v.first.coeff(i)) return u.first.coeff(i) < v.first.coeff(i);
    return false;
  });
  return out;
}

}  // namespace kron
