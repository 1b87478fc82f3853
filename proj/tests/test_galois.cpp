#include "doctest.h"
#include "test_support.hpp"

#include "kron/factor.hpp"
#include "kron/galois.hpp"
#include "kron/poly_algorithms.hpp"

#include <algorithm>
#include <set>

using namespace kron;
using kron::testing::P;

namespace {

UniPoly U(const std::string& s) { return UniPoly::from_multipoly(P(s), P(s).vars().empty() ? "x" : P(s).vars()[0]); }

std::vector<std::string> xs(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// prod over sigma of (X - sum u_i x_sigma(i)) by iterated resultants through
// the divided differences f_1 = f, f_{j+1}(x_1..x_j, x) = (f_j(.., x) - f_j(.., x_j)) / (x - x_j).
UniPoly resultant_resolvent(const UniPoly& f, const std::vector<Integer>& u) {
  const int n = f.degree();
  std::vector<std::string> vars = xs(n);
  vars.push_back("t");
  vars.push_back("X");
  auto var = [&](const std::string& v) { return MultiPoly::variable(vars, std::find(vars.begin(), vars.end(), v) - vars.begin()); };
  std::vector<MultiPoly> cascade;
  MultiPoly cur = f.to_multipoly().substitute(f.var(), var("t"));
  for (int j = 1; j <= n; ++j) {
    const std::string xj = "x" + std::to_string(j);
    cascade.push_back(cur.substitute("t", var(xj)));
    const MultiPoly diff = cur - cur.substitute("t", var(xj));
    cur = *divide_exact(diff, var("t") - var(xj));
  }
  MultiPoly acc = var("X");
  for (int j = 0; j < n; ++j) acc -= var("x" + std::to_string(j + 1)) * Rational(u[j]);
  for (int j = n; j >= 1; --j) acc = resultant(cascade[j - 1], acc, "x" + std::to_string(j));
  return UniPoly::from_multipoly(acc, "X");
}

UniPoly random_monic(std::mt19937& rng, int n, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::vector<Integer> coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(c(rng));
  coeffs.push_back(1);
  return UniPoly::from_integers(coeffs);
}

bool irreducible(const UniPoly& f) { return factor_univariate(f).count_with_multiplicity() == 1; }

}  // namespace

TEST_CASE("splitting algebra: degree 2") {
  // x^2 - c1 x + c2 with c1 = 3, c2 = 5
  const SplittingAlgebra a(U("x^2 - 3*x + 5"));
  CHECK(a.dimension() == 2);
  CHECK(a.basis_monomial(0) == "1");
  CHECK(a.basis_monomial(1) == "x1");
  const auto x1 = a.root(1);
  CHECK(a.multiply(x1, x1) == a.add(a.scale(x1, Rational(3)), a.constant(Rational(-5))));
  CHECK(a.as_constant(a.add(a.root(1), a.root(2))) == Rational(3));
}

TEST_CASE("splitting algebra: degree 3 basis") {
  const SplittingAlgebra a(U("x^3 - x - 1"));
  CHECK(a.dimension() == 6);
  std::set<std::vector<unsigned>> expected;
  for (unsigned h1 = 0; h1 <= 2; ++h1)
    for (unsigned h2 = 0; h2 <= 1; ++h2) expected.insert({h1, h2});
  CHECK(std::set<std::vector<unsigned>>(a.basis().begin(), a.basis().end()) == expected);
  // x1 + x2 + x3 = c1 = 0
  CHECK(a.as_constant(a.add(a.add(a.root(1), a.root(2)), a.root(3))) == Rational(0));
  CHECK(a.cascade(3).size() == 2);
  CHECK_THROWS_AS(SplittingAlgebra(U("x^6 + 1")), MathError);
  CHECK_THROWS_AS(SplittingAlgebra(U("2*x^2 + 1")), MathError);
}

TEST_CASE("property: elementary symmetric functions reproduce f") {
  std::mt19937 rng(3101);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 4;
    UniPoly f = random_monic(rng, n, 6);
    if (i % 5 == 0) f = f + UniPoly({make_rational(1, 3)});
    const SplittingAlgebra a(f);
    for (int k = 1; k <= n; ++k) {
      // e_k = (-1)^k a_{n-k}
      const Rational want = (k % 2 ? -1 : 1) * f.coeff(n - k);
      CHECK(a.as_constant(a.elementary_symmetric(k)) == want);
    }
  }
}

TEST_CASE("property: multiplication is associative and commutative") {
  std::mt19937 rng(3102);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 3;
    const SplittingAlgebra a(random_monic(rng, n, 4));
    auto rand_elem = [&] {
      auto e = a.zero();
      for (auto& v : e) v = c(rng);
      return e;
    };
    const auto p = rand_elem(), q = rand_elem(), r = rand_elem();
    CHECK(a.multiply(a.multiply(p, q), r) == a.multiply(p, a.multiply(q, r)));
    CHECK(a.multiply(p, q) == a.multiply(q, p));
  }
}

TEST_CASE("resolvent examples") {
  const UniPoly f = U("x^2 - 3*x + 5");
  CHECK(resolvent_total_symmetric(f, {1, 0}) == f.with_var("X"));
  // x1 + x2 = c1 identically
  CHECK(resolvent_total_symmetric(f, {1, 1}) == U("(X - 3)^2").with_var("X"));
  const UniPoly r = resolvent_total_symmetric(U("x^3 - 3*x - 1"), {0, 1, 2});
  CHECK(r.degree() == 6);
  const Factorization fr = factor_univariate(r);
  REQUIRE(fr.factors.size() == 2);
  CHECK(fr.factors[0].first.total_degree() == 3);
  CHECK(fr.factors[1].first.total_degree() == 3);
}

TEST_CASE("property: resolvent matches iterated resultants") {
  std::mt19937 rng(3103);
  std::uniform_int_distribution<int> uc(-3, 3);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 2;
    const UniPoly f = random_monic(rng, n, 5);
    std::vector<Integer> u;
    for (int j = 0; j < n; ++j) u.push_back(uc(rng));
    CHECK(resolvent_total_symmetric(f, u) == resultant_resolvent(f, u));
  }
}

TEST_CASE("property: resolvent is invariant under permuting u") {
  std::mt19937 rng(3104);
  std::uniform_int_distribution<int> uc(-4, 4);
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 2;
    const UniPoly f = random_monic(rng, n, 4);
    std::vector<Integer> u;
    for (int j = 0; j < n; ++j) u.push_back(uc(rng));
    const UniPoly r = resolvent_total_symmetric(f, u);
    CHECK(r.degree() == (n == 3 ? 6 : 24));
    std::shuffle(u.begin(), u.end(), rng);
    CHECK(resolvent_total_symmetric(f, u) == r);
  }
}

TEST_CASE("galois group benchmarks") {
  const GaloisResult q = galois_group(U("x^2 - 2"));
  CHECK(q.order == 2);
  CHECK(q.group == std::vector<Permutation>{{1, 2}, {2, 1}});

  const GaloisResult c3 = galois_group(U("x^3 - 3*x - 1"));
  CHECK(c3.order == 3);
  CHECK(c3.factor_pattern == std::vector<int>{3, 3});
  // cyclic: generated by either 3-cycle
  CHECK(std::count(c3.group.begin(), c3.group.end(), Permutation{2, 3, 1}) == 1);

  const GaloisResult s3 = galois_group(U("x^3 - x - 1"));
  CHECK(s3.order == 6);
  CHECK(s3.factor_pattern == std::vector<int>{6});
  CHECK(factor_univariate(s3.resolvent).count_with_multiplicity() == 1);

  const GaloisResult v4 = galois_group(U("x^4 + 1"));
  CHECK(v4.order == 4);
  int double_transpositions = 0;
  for (const auto& p : v4.group) {
    int moved = 0, fixed2 = 0;
    for (int i = 0; i < 4; ++i) {
      if (p[i] != i + 1) ++moved;
      if (p[i] != i + 1 && p[p[i] - 1] == i + 1) ++fixed2;
    }
    if (moved == 4 && fixed2 == 4) ++double_transpositions;
  }
  CHECK(double_transpositions == 3);

  for (const auto* r : {&q, &c3, &s3, &v4}) {
    CHECK(is_group(r->group));
    CHECK(is_transitive(r->group, static_cast<int>(r->group[0].size())));
  }
}

TEST_CASE("galois group errors") {
  CHECK_THROWS_AS(galois_group(U("x^2 - 1")), MathError);
  CHECK_THROWS_AS(galois_group(U("x^6 + x + 1")), MathError);
  CHECK_THROWS_AS(galois_group(U("2*x^2 + 1")), MathError);
}

TEST_CASE("property: cubic groups follow the discriminant") {
  // oracle: for an irreducible cubic the group is A3 iff the discriminant is a square
  std::mt19937 rng(3105);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 40; ++i) {
    const UniPoly f = random_monic(rng, 3, 9);
    if (!irreducible(f)) continue;
    const Rational d = discriminant(f.to_multipoly(), "x").constant_term();
    const bool square = d > 0 && is_perfect_square(d.get_num());
    const GaloisResult g = galois_group(f);
    CHECK(g.order == (square ? 3u : 6u));
    ++checked;
  }
  CHECK(checked == 40);
  // square discriminant 49
  CHECK(galois_group(U("x^3 - 7*x + 7")).order == 3);
}

TEST_CASE("property: group order and resolvent factors") {
  std::mt19937 rng(3106);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 25; ++i) {
    const int n = 2 + i % 3;
    const UniPoly f = random_monic(rng, n, 5);
    if (!irreducible(f)) continue;
    const GaloisResult g = galois_group(f);
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(fact % g.order == 0);
    CHECK(g.order * g.factor_pattern.size() == fact);
    for (int d : g.factor_pattern) CHECK(static_cast<std::size_t>(d) == g.order);
    UniPoly prod = UniPoly::from_integers({1}, "X");
    for (const auto& q : g.factors) prod = prod * q;
    CHECK(prod == g.resolvent);
    CHECK(g.resolvent == resolvent_total_symmetric(f, g.u));
    CHECK(is_group(g.group));
    CHECK(is_transitive(g.group, n));
    ++checked;
  }
  CHECK(checked == 25);
}

TEST_CASE("genus discriminant identity") {
  const GenusDiscIdentity two = genus_disc_identity(2);
  CHECK(two.equal);
  CHECK(two.lhs == P("(x2 - x1)^2", xs(2)));
  const GenusDiscIdentity three = genus_disc_identity(3);
  CHECK(three.equal);
  CHECK(three.lhs.total_degree() == 18);
  CHECK_THROWS_AS(genus_disc_identity(4), MathError);

  const UniPoly f = U("x^3 - x - 1");
  const Rational disc = discriminant(f.to_multipoly(), "x").constant_term();
  CHECK(disc == -23);
  CHECK(specialize_symmetric(three.rhs, f) == -23 * -23 * -23);
  CHECK(specialize_symmetric(three.lhs, f) == -23 * -23 * -23);
  CHECK_THROWS_AS(specialize_symmetric(P("x1", xs(3)), f), MathError);
}
