#include "kron/factor.hpp"
#include "kron/galois.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <set>

namespace kron {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned bits) : saved(Real::default_precision()) {
    Real::default_precision(bits * 301 / 1000 + 2);
  }
  ~PrecisionScope() { Real::default_precision(saved); }
};

struct Complex {
  Real re = 0, im = 0;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator*(const Real& c, const Complex& a) { return {c * a.re, c * a.im}; }
Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Integer& z) { return Real(z.get_str()); }

// Aberth iteration from a fixed circle of starting points.
std::vector<Complex> aberth(const std::vector<Integer>& coeffs, unsigned bits) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  Real bound = 1;
  for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + abs(to_real(coeffs[i])));
  std::vector<Complex> z(n);
  const Real pi = acos(Real(-1));
  for (int k = 0; k < n; ++k) {
    const Real angle = 2 * pi * k / n + Real("0.4");
    z[k] = {bound / 2 * cos(angle), bound / 2 * sin(angle)};
  }
  const Real tol = pow(Real(2), -static_cast<int>(bits) + 8);
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex p{to_real(coeffs[n]), 0}, dp{0, 0};
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + Complex{to_real(coeffs[i]), 0};
      }
      if (abs(p) == 0) continue;
      const Complex w = p / dp;
      Complex s{0, 0};
      for (int j = 0; j < n; ++j)
        if (j != k) s = s + Complex{1, 0} / (z[k] - z[j]);
      const Complex corr = w / (Complex{1, 0} - w * s);
      z[k] = z[k] - corr;
      worst = std::max(worst, abs(corr) / (1 + abs(z[k])));
    }
    if (worst < tol) break;
  }
  return z;
}

struct Isolated {
  std::vector<Complex> centre;
  std::vector<Real> radius;
};

Complex horner(const std::vector<Integer>& coeffs, const Complex& x) {
  Complex p{0, 0};
  for (std::size_t i = coeffs.size(); i-- > 0;) p = p * x + Complex{to_real(coeffs[i]), 0};
  return p;
}

// Discs D(z_k, 2n|f(z_k)| / |prod (z_k - z_j)|) plus rounding slack; when
// pairwise disjoint each holds exactly one root.
std::optional<Isolated> isolate_roots(const std::vector<Integer>& coeffs, unsigned bits) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  const auto z = aberth(coeffs, bits);
  const Real slack = pow(Real(2), -static_cast<int>(bits) + 20);
  Isolated out;
  for (int k = 0; k < n; ++k) {
    Complex d{1, 0};
    for (int j = 0; j < n; ++j)
      if (j != k) d = d * (z[k] - z[j]);
    const Real ad = abs(d);
    if (ad == 0) return std::nullopt;
    out.centre.push_back(z[k]);
    out.radius.push_back(2 * n * abs(horner(coeffs, z[k])) / ad + slack * (1 + abs(z[k])));
  }
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j)
      if (abs(z[k] - z[j]) <= out.radius[k] + out.radius[j]) return std::nullopt;

  // Label by real part, then imaginary part.  A disc meeting its own mirror
  // image holds a real root; otherwise the mirror image meets exactly the
  // disc of the conjugate root.
  std::vector<int> conj(n, -1);
  for (int k = 0; k < n; ++k) {
    const Complex mirror{z[k].re, -z[k].im};
    int hits = 0;
    for (int j = 0; j < n; ++j)
      if (abs(mirror - z[j]) <= out.radius[k] + out.radius[j]) {
        conj[k] = j;
        ++hits;
      }
    if (hits != 1) return std::nullopt;
  }
  for (int k = 0; k < n; ++k)
    if (conj[k] == k) out.centre[k].im = 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j)
      if (conj[k] != j && abs(z[k].re - z[j].re) <= out.radius[k] + out.radius[j]) return std::nullopt;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (conj[a] == b) return out.centre[a].im < out.centre[b].im;
    return out.centre[a].re < out.centre[b].re;
  });
  Isolated sorted;
  for (int k : order) {
    sorted.centre.push_back(out.centre[k]);
    sorted.radius.push_back(out.radius[k]);
  }
  return sorted;
}

using Group = std::vector<int>;  // sorted permutation indices

struct SymmetricGroup {
  int n;
  std::vector<std::vector<int>> perms;  // 0-based images, lexicographic
  std::vector<std::vector<int>> compose;  // compose[a][b] = a o b

  explicit SymmetricGroup(int n_) : n(n_) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    compose.assign(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
        compose[a][b] = index[c];
      }
  }

  Group closure(const std::vector<int>& gens) const {
    std::bitset<120> seen;
    std::vector<int> queue{0};
    seen.set(0);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int g : gens) {
        const int c = compose[queue[q]][g];
        if (!seen.test(c)) {
          seen.set(c);
          queue.push_back(c);
        }
      }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  bool transitive(const Group& g) const {
    std::vector<bool> hit(n, false);
    for (int e : g) hit[perms[e][0]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  // Every subgroup of S_n, n <= 5, is generated by two elements.
  std::vector<Group> transitive_subgroups() const {
    std::set<Group> found;
    const int m = static_cast<int>(perms.size());
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        Group g = closure({a, b});
        if (transitive(g)) found.insert(std::move(g));
      }
    std::vector<Group> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Group& x, const Group& y) { return x.size() < y.size(); });
    return out;
  }
};

enum class Verdict { yes, no, unknown };

struct LinearForms {
  std::vector<Complex> value;
  std::vector<Real> radius;
};

// prod (X - theta) over the chosen indices, coefficients low to high, with
// an entrywise error bound.
struct ProductBound {
  std::vector<Complex> coeff;
  std::vector<Real> error;
};

ProductBound product(const LinearForms& t, const std::vector<int>& idx, unsigned bits) {
  std::vector<Complex> c{{1, 0}};
  std::vector<Real> lo{1}, hi{1};
  for (int i : idx) {
    std::vector<Complex> nc(c.size() + 1);
    std::vector<Real> nlo(c.size() + 1, Real(0)), nhi(c.size() + 1, Real(0));
    const Real a = abs(t.value[i]), b = a + t.radius[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      nc[k + 1] = nc[k + 1] + c[k];
      nc[k] = nc[k] - c[k] * t.value[i];
      nlo[k + 1] += lo[k];
      nlo[k] += lo[k] * a;
      nhi[k + 1] += hi[k];
      nhi[k] += hi[k] * b;
    }
    c = std::move(nc);
    lo = std::move(nlo);
    hi = std::move(nhi);
  }
  const Real slack = pow(Real(2), -static_cast<int>(bits) + 30);
  ProductBound out{c, {}};
  for (std::size_t k = 0; k < c.size(); ++k) out.error.push_back(hi[k] - lo[k] + slack * hi[k]);
  return out;
}

Verdict round_product(const ProductBound& p, std::vector<Integer>& out) {
  out.clear();
  for (std::size_t k = 0; k < p.coeff.size(); ++k) {
    const Real& e = p.error[k];
    if (abs(p.coeff[k].im) > e) return Verdict::no;
    const Real r = round(p.coeff[k].re);
    if (abs(p.coeff[k].re - r) > e) return Verdict::no;
    if (e >= Real("0.25")) return Verdict::unknown;
    Integer z;
    mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    out.push_back(z);
  }
  return Verdict::yes;
}

UniPoly integer_poly(const std::vector<Integer>& c) { return UniPoly::from_integers(c, "X"); }

bool divides(const UniPoly& q, const UniPoly& r) { return UniPoly::divmod(r, q).second.is_zero(); }

// Q has integer coefficients and divides R; each theta_sigma, sigma in idx,
// is shown to be a root of Q because |Q(theta)| is below the least value a
// nonzero product of root differences can take.
Verdict certify_roots(const std::vector<Integer>& q, const LinearForms& t, const std::vector<int>& idx,
                      unsigned bits) {
  const std::size_t deg = q.size() - 1;
  const Real slack = pow(Real(2), -static_cast<int>(bits) + 30);
  for (int i : idx) {
    Real sep = -1;
    for (std::size_t j = 0; j < t.value.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      const Real d = abs(t.value[i] - t.value[j]) - t.radius[i] - t.radius[j];
      if (sep < 0 || d < sep) sep = d;
    }
    if (sep <= 0) return Verdict::unknown;
    const Real m = abs(t.value[i]) + t.radius[i];
    Real deriv = 0, size = 0;
    for (std::size_t k = 0; k <= deg; ++k) {
      const Real a = abs(to_real(q[k]));
      size += a * pow(m, static_cast<int>(k));
      if (k > 0) deriv += k * a * pow(m, static_cast<int>(k - 1));
    }
    const Real upper = abs(horner(q, t.value[i])) + t.radius[i] * deriv + slack * size;
    if (!(upper < pow(sep, static_cast<int>(deg)))) return Verdict::unknown;
  }
  return Verdict::yes;
}

struct Attempt {
  bool done = false;
  Group group;
  std::vector<std::vector<Integer>> factors;
};

Attempt identify(const std::vector<Integer>& g, const std::vector<Integer>& u, const UniPoly& resolvent,
                 const SymmetricGroup& sym, const std::vector<Group>& candidates, unsigned bits) {
  PrecisionScope scope(bits);
  Attempt out;
  const auto roots = isolate_roots(g, bits);
  if (!roots) return out;
  LinearForms t;
  for (const auto& p : sym.perms) {
    Complex v{0, 0};
    Real r = 0;
    for (int i = 0; i < sym.n; ++i) {
      const Real ui = to_real(u[i]);
      v = v + ui * roots->centre[p[i]];
      r += abs(ui) * roots->radius[p[i]];
    }
    t.value.push_back(v);
    t.radius.push_back(r);
  }
  for (std::size_t a = 0; a < t.value.size(); ++a)
    for (std::size_t b = a + 1; b < t.value.size(); ++b)
      if (abs(t.value[a] - t.value[b]) <= t.radius[a] + t.radius[b]) return out;

  for (const Group& h : candidates) {
    std::vector<Integer> q;
    const Verdict v = round_product(product(t, h, bits), q);
    if (v == Verdict::unknown) return out;
    if (v == Verdict::no) continue;
    if (!divides(integer_poly(q), resolvent)) continue;
    if (certify_roots(q, t, h, bits) != Verdict::yes) return out;
    out.group = h;
    break;
  }
  if (out.group.empty()) return out;

  // the irreducible factors are the products over the right cosets G sigma
  std::vector<bool> used(sym.perms.size(), false);
  UniPoly check = integer_poly({1});
  for (std::size_t s = 0; s < sym.perms.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> coset;
    for (int p : out.group) coset.push_back(sym.compose[p][s]);
    for (int c : coset) used[c] = true;
    std::vector<Integer> q;
    const Verdict v = round_product(product(t, coset, bits), q);
    if (v == Verdict::unknown) return out;
    if (v == Verdict::no) throw std::logic_error("coset product is not integral");
    out.factors.push_back(q);
    check = check * integer_poly(q);
  }
  if (!(check == resolvent)) throw std::logic_error("coset products do not multiply to the resolvent");
  out.done = true;
  return out;
}

// D^{-deg} p(D X)
UniPoly unscale(const UniPoly& p, const Integer& d) {
  std::vector<Rational> c;
  const int deg = p.degree();
  for (int k = 0; k <= deg; ++k) c.push_back(p.coeff(k) / Rational(pow(d, deg - k)));
  return UniPoly(c, "X");
}

}  // namespace

bool is_group(const std::vector<Permutation>& perms) {
  if (perms.empty()) return false;
  const std::size_t n = perms[0].size();
  std::set<Permutation> s(perms.begin(), perms.end());
  Permutation id(n);
  std::iota(id.begin(), id.end(), 1);
  if (!s.count(id)) return false;
  for (const auto& a : perms) {
    if (a.size() != n) return false;
    Permutation inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[a[i] - 1] = static_cast<int>(i) + 1;
    if (!s.count(inv)) return false;
    for (const auto& b : perms) {
      Permutation c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i] - 1];
      if (!s.count(c)) return false;
    }
  }
  return true;
}

bool is_transitive(const std::vector<Permutation>& perms, int n) {
  std::vector<bool> hit(n, false);
  for (const auto& p : perms) hit[p[0] - 1] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GaloisResult galois_group(const UniPoly& f, std::vector<Integer> u, const GaloisOptions& options) {
  const int n = f.degree();
  if (n < 1) throw MathError("galois_group needs degree >= 1");
  if (n > 5) throw MathError("degree > 5 (dimension 120 cap)");
  if (!f.is_monic()) throw MathError("galois_group needs a monic polynomial");
  if (factor_univariate(f).count_with_multiplicity() != 1) throw MathError("polynomial is reducible");
  if (u.empty())
    for (int i = 0; i < n; ++i) u.push_back(i);
  if (static_cast<int>(u.size()) != n) throw MathError("expected " + std::to_string(n) + " multipliers");

  // integral model g(y) = D^n f(y / D)
  Integer d = 1;
  for (const auto& c : f.coeffs()) d = lcm(d, c.get_den());
  std::vector<Integer> g;
  for (int i = 0; i <= n; ++i) g.push_back(Rational(f.coeff(i) * Rational(pow(d, n - i))).get_num());
  const UniPoly gpoly = UniPoly::from_integers(g);

  const SymmetricGroup sym(n);
  const std::vector<Group> candidates = sym.transitive_subgroups();

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Integer> ua = u;
    for (int i = 0; i < n; ++i) ua[i] += Integer(attempt) * (i + 1) * (i + 1);
    const UniPoly r = resolvent_total_symmetric(gpoly, ua);
    if (UniPoly::gcd(r, r.derivative()).degree() > 0) continue;
    for (unsigned bits = options.min_precision; bits <= options.max_precision; bits *= 2) {
      const Attempt a = identify(g, ua, r, sym, candidates, bits);
      if (!a.done) continue;
      GaloisResult out;
      for (int e : a.group) {
        Permutation p;
        for (int i : sym.perms[e]) p.push_back(i + 1);
        out.group.push_back(p);
      }
      out.order = out.group.size();
      out.resolvent = unscale(r, d);
      for (const auto& q : a.factors) out.factors.push_back(unscale(integer_poly(q), d));
      std::sort(out.factors.begin(), out.factors.end(), [](const UniPoly& x, const UniPoly& y) {
        return canonical_less(x.to_multipoly(), y.to_multipoly());
      });
      for (const auto& q : out.factors) out.factor_pattern.push_back(q.degree());
      out.u = ua;
      out.attempts = attempt + 1;
      out.precision = bits;
      if (!is_group(out.group)) throw MathError("closure verification failed");
      return out;
    }
    throw MathError("closure verification failed at maximum precision");
  }
  throw MathError("no separating multipliers after " + std::to_string(options.max_attempts) + " attempts");
}

}  // namespace kron
