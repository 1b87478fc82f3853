// Acceptance runner: one PASS/FAIL line per criterion, with its time limit.

#include "divisor_properties.hpp"
#include "golden_corpus.hpp"
#include "test_support.hpp"

#include "kron/class_group.hpp"
#include "kron/elimination.hpp"
#include "kron/factor.hpp"
#include "kron/galois.hpp"
#include "kron/linalg.hpp"
#include "kron/residue.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kron;
using kron::testing::P;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::vector<MultiPoly> gens(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, vars));
  return out;
}

void criterion1(Check& c) {
  const MultiPoly d = discriminant(P("x^3 - x - 1"), "x");
  c.expect(d == MultiPoly::constant(-23).with_vars(d.vars()), "disc = -23");
  const GenusDiscIdentity id = genus_disc_identity(3);
  const UniPoly f = UniPoly::from_integers({-1, -1, 0, 1});
  const Rational lhs = specialize_symmetric(id.lhs, f), rhs = specialize_symmetric(id.rhs, f);
  c.expect(lhs == pow(Rational(-23), 3), "det^2 specializes to (-23)^3");
  c.expect(rhs == pow(Rational(-23), 3), "D^3 specializes to (-23)^3");
  c.expect(abs(lhs) == 12167, "|D^3| = 23^3");
}

void criterion2(Check& c) {
  for (int n : {2, 3}) {
    const GenusDiscIdentity id = genus_disc_identity(n);
    c.expect(id.equal && id.lhs == id.rhs, "det^2 = D^(n!/2) for n = " + std::to_string(n));
  }
}

void criterion3(Check& c) {
  const FieldRef k = nf_new(UniPoly::from_integers({6, -1, 1}));
  const PrimeDecomposition d = decompose_prime(k, 2);
  c.expect(d.divisors.size() == 2, "two prime divisors");
  for (const auto& pd : d.divisors) {
    c.expect(pd.f == 1, "residue degree 1");
    c.expect(pd.certified, "certified");
  }
  c.expect(d.product_equivalent, "product certificate");
  c.expect(d.pairwise_units, "coprimality certificate");
  c.expect(!d.bezout.empty(), "bezout witness present");
  for (const auto& b : d.bezout) {
    const UniPoly& fi = d.divisors[b.i].local_factor;
    const UniPoly& fj = d.divisors[b.j].local_factor;
    const UniPoly lhs = b.a * fi + b.b * fj;
    const UniPoly rhs = UniPoly({Rational(1)}, lhs.var()) + Rational(2) * b.e;
    c.expect(lhs.with_var("x").coeffs() == rhs.with_var("x").coeffs(), "a f_i + b f_j = 1 + p e");
  }
}

void criterion4(Check& c) {
  const ClassGroupResult r = class_number_imag_quadratic(-23);
  c.expect(r.h == 3, "h = 3");
  const QuadraticOrder o(-23);
  const QuadIdeal p2 = o.ideal({{2, 0}, {0, 1}});  // (2, theta)
  int order = 0;
  for (const auto& cl : r.classes)
    if (o.equivalent(cl.ideal, p2)) order = cl.order;
  c.expect(order == 3, "divisor above 2 has order 3");
  c.expect(!o.principal_generator(p2).has_value(), "divisor above 2 not principal");
  const auto g = o.principal_generator(o.multiply(o.multiply(p2, p2), p2));
  c.expect(g.has_value(), "cube principal");
  if (g) {
    c.expect(o.norm(*g) == 8, "generator of norm 8");
    // (3 + sqrt(-23))/2 = 1 + theta, or its conjugate, up to sign
    const QuadElement a{1, 1}, b = o.conjugate(a);
    c.expect(*g == a || *g == b || *g == QuadElement{-a.a, -a.b} || *g == QuadElement{-b.a, -b.b},
             "generator is (3 + sqrt(-23))/2 up to units and conjugation");
  }
}

void criterion5(Check& c) {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<int> deg(2, 8), coeff(-9, 9);
  int done = 0;
  while (done < 100) {
    const int m = deg(rng);
    std::vector<Integer> co(m + 1);
    for (int i = 0; i < m; ++i) co[i] = coeff(rng);
    co[m] = 1;
    const UniPoly f = UniPoly::from_integers(co);
    if (UniPoly::gcd(f, f.derivative()).degree() > 0) continue;
    ++done;
    for (int i = 0; i <= m - 1; ++i) {
      const Rational t = euler_trace(f, i);
      c.expect(t == (i == m - 1 ? 1 : 0), "Euler trace for " + f.to_string() + ", i = " + std::to_string(i));
    }
  }
}

void criterion6(Check& c) {
  const std::vector<std::string> v{"x", "y"};
  std::vector<std::vector<Rational>> pts;
  for (int a : {1, -1})
    for (int b : {1, -1}) pts.push_back({a, b});
  const PointSet ps = make_point_set(gens({"x^2 - 1", "y^2 - 1"}, v), v, pts);
  for (const char* mono : {"1", "x", "y"})
    c.expect(jacobi_sum(ps, P(mono, v)).value == 0, std::string("sum vanishes for ") + mono);
  const MultiPoly j = jacobian_determinant(ps.system, v);
  c.expect(jacobi_sum(ps, j).value == 4, "F = J gives 4");
}

// x = M y
std::vector<Rational> to_original(const VarietyDecomposition& d, const std::vector<Rational>& y) {
  RatMatrix m;
  for (const auto& row : d.coordinate_change) m.emplace_back(row.begin(), row.end());
  return m * y;
}

std::optional<std::vector<Rational>> point_on(const ComponentParam& comp, const std::vector<std::string>& vars,
                                              std::vector<Rational> y) {
  y.resize(vars.size(), Rational(0));
  for (const auto& p : comp.params) {
    const Rational den = p.den.with_vars(vars).evaluate(y);
    if (den == 0) return std::nullopt;
    y[*MultiPoly(vars).index_of(p.var)] = p.num.with_vars(vars).evaluate(y) / den;
  }
  return y;
}

void criterion7(Check& c) {
  const std::vector<std::string> v{"x", "y", "z"};
  const VarietyDecomposition d = decompose_variety(gens({"x*z", "y*z"}, v), v);
  int codim1 = 0, codim2 = 0;
  for (const auto& part : d.parts) {
    if (part.codim == 1) {
      ++codim1;
      c.expect(part.resolvent == P("z", v), "codim-1 resolvent z");
    }
    if (part.codim == 2) {
      ++codim2;
      c.expect(part.components.size() == 1, "one codim-2 component");
      for (const auto& comp : part.components)
        for (int t = -3; t <= 3; ++t) {
          const auto y = point_on(comp, v, {t});
          if (!y) continue;
          const auto x = to_original(d, *y);
          c.expect(x[0] == 0 && x[1] == 0, "codim-2 points lie on x = y = 0");
        }
    }
  }
  c.expect(codim1 == 1 && codim2 == 1, "one codim-1 and one codim-2 part");
  c.expect(d.residual == gens({"x", "y"}, v), "residual generators x, y");

  const std::vector<std::string> w{"x", "y"};
  const VarietyDecomposition e = decompose_variety(gens({"x^2 + y^2 - 1", "y"}, w), w);
  c.expect(e.parts.size() == 1 && e.parts[0].codim == 2, "single codim-2 part");
  if (!e.parts.empty())
    c.expect(e.parts[0].factors == gens({"x - 1", "x + 1"}, w), "factors (x - 1)(x + 1)");
}

bool double_transposition(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i + 1) || p[p[i] - 1] != static_cast<int>(i + 1)) return false;
  return true;
}

void criterion8(Check& c) {
  const struct {
    std::vector<Integer> f;
    std::size_t order;
  } cases[] = {{{-1, -1, 0, 1}, 6}, {{-1, -3, 0, 1}, 3}, {{1, 0, 0, 0, 1}, 4}};
  for (const auto& [co, order] : cases) {
    const UniPoly f = UniPoly::from_integers(co);
    const GaloisResult g = galois_group(f);
    c.expect(g.order == order && g.group.size() == order, "order of " + f.to_string());
    c.expect(is_group(g.group), "closure for " + f.to_string());
    c.expect(is_transitive(g.group, f.degree()), "transitivity for " + f.to_string());
    if (f.degree() == 4) {
      int dt = 0;
      for (const auto& p : g.group) dt += double_transposition(p);
      c.expect(dt == 3, "three double transpositions");
    }
  }
}

void criterion9(Check& c) {
  const Factorization a = factor_multivariate(P("x^4 + x^2 + 1"));
  c.expect(a.factors.size() == 2 && a.factors[0].first == P("x^2 - x + 1") &&
               a.factors[1].first == P("x^2 + x + 1"),
           "x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1)");
  const std::vector<std::string> xy{"x", "y"};
  const Factorization b = factor_multivariate(P("x^2 - y^2", xy));
  c.expect(b.factors.size() == 2 && b.factors[0].first == P("x - y", xy) && b.factors[1].first == P("x + y", xy),
           "x^2 - y^2 = (x - y)(x + y)");
  const Factorization d = factor_univariate(UniPoly::from_integers({-1, -1, 0, 1}));
  c.expect(d.factors.size() == 1 && d.factors[0].second == 1 && d.unit == 1, "x^3 - x - 1 irreducible");
}

void criterion10(Check& c) {
  std::mt19937 rng(7010);
  const std::vector<std::string> vars{"x", "y", "z"};
  int gauss = 0;
  while (gauss < 200) {
    const MultiPoly p = testing::random_poly(rng, vars, 3, 4, 12), q = testing::random_poly(rng, vars, 3, 4, 12);
    if (p.is_zero() || q.is_zero()) continue;
    ++gauss;
    c.expect(content_primitive(p * q).content == content_primitive(p).content * content_primitive(q).content,
             "Gauss content multiplicativity");
  }
  const auto report = [&](const testing::SuiteResult& r, const std::string& name) {
    c.expect(r.cases >= 200, name + ": at least 200 cases");
    c.expect(r.ok(), name + ": no failures");
    c.notes << " " << name << " " << r.cases << "/" << r.premises;
  };
  report(testing::first_fundamental_theorem(7011, 200), "fft");
  report(testing::gauss_lemma(7012, 200), "gauss-lemma");
  report(testing::criteria_agreement(7013, 200), "criteria");
  report(testing::residue_counts(7014, 200), "residue-classes");
}

void criterion11(Check& c) {
  const std::filesystem::path dir = KRON_GOLDEN_DIR;
  const auto cases = testing::load_golden_cases(dir);
  c.expect(cases.size() >= 25, "at least 25 invocations");
  std::vector<std::string> first, second;
  for (const auto& g : cases) first.push_back(testing::render_golden(dir, g));
  for (const auto& g : cases) second.push_back(testing::render_golden(dir, g));
  c.expect(first == second, "two runs byte-identical");
  for (std::size_t i = 0; i < cases.size(); ++i)
    c.expect(testing::read_text(dir / (cases[i].name + ".out")) == first[i], "golden file " + cases[i].name);
  c.notes << " " << cases.size() << " invocations";
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* title;
    double limit;
    std::function<void(Check&)> run;
  } criteria[] = {
      {1, "disc(x^3 - x - 1) = -23, genus identity gives (-23)^3", 1, criterion1},
      {2, "det^2 = D^(n!/2) for n = 2, 3", 10, criterion2},
      {3, "two degree-1 prime divisors above 2 in Q(sqrt(-23))", 1, criterion3},
      {4, "class group of Q(sqrt(-23)) is Z/3", 5, criterion4},
      {5, "Euler trace formulas on 100 random polynomials", 30, criterion5},
      {6, "Jacobi vanishing on x^2 - 1, y^2 - 1", 1, criterion6},
      {7, "variety decompositions of {xz, yz} and {x^2 + y^2 - 1, y}", 5, criterion7},
      {8, "Galois groups of x^3 - x - 1, x^3 - 3x - 1, x^4 + 1", 60, criterion8},
      {9, "factorization benchmarks", 5, criterion9},
      {10, "property suites", 300, criterion10},
      {11, "CLI golden corpus determinism", 120, criterion11},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit) c.expect(false, "time limit");
    failed += !c.ok;
    std::printf("%s %2d  %-62s %8.3f s (limit %g s)%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, secs, cr.limit,
                c.notes.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
