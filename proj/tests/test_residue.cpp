#include "doctest.h"
#include "test_support.hpp"

#include "kron/residue.hpp"

#include <set>

using namespace kron;
using kron::testing::P;

namespace {

const std::vector<std::string> kXY{"x", "y"};

UniPoly from_roots(const std::vector<int>& roots) {
  UniPoly f = UniPoly::from_integers({1});
  for (int r : roots) f = f * UniPoly::from_integers({-r, 1});
  return f;
}

PointSet grid() {
  return make_point_set({P("x^2 - 1", kXY), P("y^2 - 1", kXY)}, kXY, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

std::vector<MultiPoly> monomials_below(const std::vector<std::string>& vars, unsigned degree) {
  std::vector<MultiPoly> out;
  std::vector<Monomial> frontier{Monomial(vars.size(), 0)};
  std::set<Monomial> seen(frontier.begin(), frontier.end());
  for (std::size_t q = 0; q < frontier.size(); ++q) {
    MultiPoly m(vars);
    m.add_term(frontier[q], Rational(1));
    out.push_back(m);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Monomial next = frontier[q];
      ++next[i];
      unsigned total = 0;
      for (auto e : next) total += e;
      if (total < degree && seen.insert(next).second) frontier.push_back(next);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euler trace examples") {
  const UniPoly f = from_roots({1, 2});
  // 1/f'(1) + 2/f'(2) = -1 + 2
  CHECK(euler_trace(f, 1) == 1);
  CHECK(euler_trace(f, 0) == 0);
  CHECK_THROWS_AS(euler_trace(from_roots({1, 1}), 0), MathError);
  CHECK_THROWS_AS(euler_trace(UniPoly::from_integers({1, 2}), 0), MathError);
}

TEST_CASE("property: Euler formulas") {
  std::mt19937 rng(4101);
  std::uniform_int_distribution<int> c(-9, 9);
  int checked = 0;
  while (checked < 100) {
    const int m = 2 + checked % 7;
    std::vector<Integer> coeffs;
    for (int i = 0; i < m; ++i) coeffs.push_back(c(rng));
    coeffs.push_back(1);
    const UniPoly f = UniPoly::from_integers(coeffs);
    if (UniPoly::gcd(f, f.derivative()).degree() > 0) continue;
    for (int i = 0; i <= m - 2; ++i) CHECK(euler_trace(f, i) == 0);
    CHECK(euler_trace(f, m - 1) == 1);
    ++checked;
  }
}

TEST_CASE("property: traces against evaluation at rational roots") {
  // oracle: sum over the roots r of r^i / f'(r)
  std::mt19937 rng(4102);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < 40; ++t) {
    std::set<int> roots;
    const std::size_t m = 1 + t % 5;
    while (roots.size() < m) roots.insert(c(rng));
    const std::vector<int> rs(roots.begin(), roots.end());
    const UniPoly f = from_roots(rs);
    const UniPoly df = f.derivative();
    for (int i = 0; i <= 2 * static_cast<int>(m) - 2; ++i) {
      Rational direct = 0;
      for (int r : rs) direct += pow(Rational(r), i) / df.evaluate(Rational(r));
      CHECK(euler_trace(f, i) == direct);
    }
  }
}

TEST_CASE("point set validation") {
  CHECK_THROWS_AS(make_point_set({P("x^2 - 1", kXY), P("y^2 - 1", kXY)}, kXY, {{1, 1}}), MathError);
  CHECK_THROWS_AS(make_point_set({P("x^2 - 1", kXY), P("y^2 - 1", kXY)}, kXY, {{1, 2}}), MathError);
  CHECK_THROWS_AS(make_point_set({P("x^2", kXY), P("y - 1", kXY)}, kXY, {{0, 1}}), MathError);
  CHECK_THROWS_AS(make_point_set({P("x^2 - 1", kXY)}, kXY, {{1, 0}}), MathError);
}

TEST_CASE("Jacobi sums on the grid") {
  const PointSet ps = grid();
  CHECK(jacobian_determinant(ps.system, kXY) == P("4*x*y", kXY));
  for (const auto& m : monomials_below(kXY, 2)) CHECK(jacobi_sum(ps, m).value == 0);
  const JacobiSum full = jacobi_sum(ps, P("4*x*y", kXY));
  CHECK(full.value == 4);
  CHECK(full.warnings.empty());
}

TEST_CASE("Jacobi sum of a univariate system is the Euler trace") {
  const std::vector<std::string> x{"x"};
  const UniPoly f = from_roots({-2, 1, 3});
  const PointSet ps = make_point_set({f.to_multipoly()}, x, {{-2}, {1}, {3}});
  for (int i = 0; i < 6; ++i)
    CHECK(jacobi_sum(ps, P("x", x).pow(i)).value == euler_trace(f, i));
}

TEST_CASE("Jacobi sum on a non-product system") {
  const PointSet ps =
      make_point_set({P("x^2 + y^2 - 5", kXY), P("x*y - 2", kXY)}, kXY, {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}});
  for (const auto& m : monomials_below(kXY, 2)) CHECK(jacobi_sum(ps, m).value == 0);
}

TEST_CASE("Jacobian degree mismatch is a warning") {
  const PointSet ps = make_point_set({P("x^2 - 1", kXY), P("x^2 + y - 1", kXY)}, kXY, {{1, 0}, {-1, 0}});
  const JacobiSum s = jacobi_sum(ps, P("1", kXY));
  CHECK(s.generic_degree == 2);
  CHECK(s.jacobian_degree == 1);
  CHECK(s.warnings.size() == 1);
}

TEST_CASE("property: Jacobi vanishing on product systems") {
  std::mt19937 rng(4103);
  std::uniform_int_distribution<int> c(-5, 5), deg(1, 4);
  const std::vector<std::string> xyz{"x", "y", "z"};
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 2;
    const std::vector<std::string> vars(xyz.begin(), xyz.begin() + n);
    std::vector<MultiPoly> system;
    std::vector<std::vector<int>> roots(n);
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::set<int> rs;
      const int d = deg(rng);
      while (static_cast<int>(rs.size()) < d) rs.insert(c(rng));
      roots[i].assign(rs.begin(), rs.end());
      MultiPoly f(vars, Rational(1));
      for (int r : rs) f *= MultiPoly::variable(vars, i) - MultiPoly(vars, Rational(r));
      system.push_back(f);
      total += d;
    }
    std::vector<std::vector<Rational>> points{{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::vector<Rational>> next;
      for (const auto& p : points)
        for (int r : roots[i]) {
          auto q = p;
          q.push_back(r);
          next.push_back(q);
        }
      points = next;
    }
    const PointSet ps = make_point_set(system, vars, points);
    const int dj = total - static_cast<int>(n);
    for (const auto& m : monomials_below(vars, static_cast<unsigned>(dj))) CHECK(jacobi_sum(ps, m).value == 0);
  }
}

TEST_CASE("interpolation examples") {
  const std::vector<std::string> x{"x"};
  const PointSet one = make_point_set({P("x - 3", x)}, x, {{3}});
  CHECK(interpolate_zero_dim(one, {make_rational(7, 2)}) == P("7/2", x));

  // Lagrange: 5 (x - 2)/(1 - 2) + 7 (x - 1)/(2 - 1)
  const PointSet two = make_point_set({P("x^2 - 3*x + 2", x)}, x, {{1}, {2}});
  CHECK(interpolate_zero_dim(two, {5, 7}) == P("2*x + 3", x));

  const PointSet ps = grid();
  const MultiPoly g = interpolate_zero_dim(ps, {1, 2, 3, 4});
  CHECK(g.degree("x") <= 1);
  CHECK(g.degree("y") <= 1);
  for (std::size_t k = 0; k < 4; ++k) CHECK(g.evaluate(ps.points[k]) == Rational(k + 1));
}

TEST_CASE("dominant form on the grid") {
  const PointSet ps = grid();
  // values of F = x: deg F < deg J, so the xy coefficient sum F/J vanishes
  std::vector<Rational> vx, vxy;
  for (const auto& p : ps.points) {
    vx.push_back(p[0]);
    vxy.push_back(p[0] * p[1]);
  }
  const MultiPoly gx = interpolate_zero_dim(ps, vx);
  CHECK(gx.total_degree() < 2);
  CHECK(gx == P("x", kXY));
  const MultiPoly gxy = interpolate_zero_dim(ps, vxy);
  CHECK(gxy.coefficient({1, 1}) == jacobi_sum(ps, P("4*x*y", kXY)).value / 4);
}

TEST_CASE("property: interpolation reproduces values modulo the ideal") {
  std::mt19937 rng(4104);
  std::uniform_int_distribution<int> c(-20, 20);
  const PointSet a = grid();
  const PointSet b =
      make_point_set({P("x^2 + y^2 - 5", kXY), P("x*y - 2", kXY)}, kXY, {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}});
  for (int t = 0; t < 40; ++t) {
    const PointSet& ps = t % 2 ? a : b;
    std::vector<Rational> values;
    for (std::size_t k = 0; k < ps.points.size(); ++k) values.push_back(make_rational(c(rng), 1 + t % 3));
    const MultiPoly g = interpolate_zero_dim(ps, values);
    const MultiPoly h = g + kron::testing::random_poly(rng, kXY, 2, 3) * ps.system[0] +
                        kron::testing::random_poly(rng, kXY, 2, 3) * ps.system[1];
    for (std::size_t k = 0; k < ps.points.size(); ++k) {
      CHECK(g.evaluate(ps.points[k]) == values[k]);
      CHECK(h.evaluate(ps.points[k]) == values[k]);
    }
  }
}
