#include "kron/residue.hpp"
#include "kron/linalg.hpp"
#include "kron/poly_algorithms.hpp"

#include <numeric>
#include <set>

namespace kron {

namespace {

std::size_t univariate_in(const MultiPoly& p) {
  std::size_t found = p.nvars();
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree(i) > 0) {
      if (found != p.nvars()) return p.nvars();
      found = i;
    }
  return found;
}

}  // namespace

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars) {
  std::vector<std::vector<MultiPoly>> m;
  for (const auto& f : system) {
    std::vector<MultiPoly> row;
    for (const auto& v : vars) row.push_back(f.with_vars(vars).derivative(v));
    m.push_back(row);
  }
  return determinant(m).with_vars(vars);
}

PointSet make_point_set(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                        const std::vector<std::vector<Rational>>& points) {
  if (system.size() != vars.size()) throw MathError("the system needs as many equations as variables");
  PointSet ps{vars, {}, points};
  for (const auto& f : system) {
    for (const auto& v : f.support())
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw MathError("equation involves undeclared variable '" + v + "'");
    ps.system.push_back(f.with_vars(vars));
  }
  const MultiPoly j = jacobian_determinant(ps.system, vars);
  std::set<std::vector<Rational>> seen;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& x = points[k];
    if (x.size() != vars.size()) throw MathError("point " + std::to_string(k + 1) + " has the wrong dimension");
    for (const auto& f : ps.system)
      if (f.evaluate(x) != 0) throw MathError("point " + std::to_string(k + 1) + " is not a solution");
    if (j.evaluate(x) == 0) throw MathError("point " + std::to_string(k + 1) + " is not a simple solution");
    if (!seen.insert(x).second) throw MathError("point " + std::to_string(k + 1) + " is repeated");
  }
  // product of univariate equations in distinct variables: Bezout count is exact
  std::set<std::size_t> used;
  std::size_t expected = 1;
  bool product = true;
  for (const auto& f : ps.system) {
    const std::size_t i = univariate_in(f);
    if (i == f.nvars() || !used.insert(i).second) {
      product = false;
      break;
    }
    expected *= f.degree(i);
  }
  if (product && expected != points.size())
    throw MathError("expected " + std::to_string(expected) + " points, got " + std::to_string(points.size()));
  return ps;
}

Rational euler_trace(const UniPoly& f, int i) {
  if (!f.is_monic() || f.degree() < 1) throw MathError("euler_trace needs a monic polynomial of positive degree");
  if (i < 0) throw MathError("exponent must be nonnegative");
  const auto [g, s, t] = UniPoly::ext_gcd(f.derivative(), f);
  if (g.degree() != 0) throw MathError("f is not squarefree: f' is not invertible modulo f");
  std::vector<Rational> xi(static_cast<std::size_t>(i) + 1, Rational(0));
  xi.back() = 1;
  const UniPoly e = UniPoly::divmod(UniPoly(xi, f.var()) * s, f).second;
  // trace of b -> e*b on the basis 1, x, ..., x^(m-1)
  const int m = f.degree();
  Rational trace = 0;
  UniPoly col = e;
  std::vector<Rational> x1{Rational(0), Rational(1)};
  for (int k = 0; k < m; ++k) {
    trace += col.coeff(k);
    col = UniPoly::divmod(col * UniPoly(x1, f.var()), f).second;
  }
  return trace;
}

JacobiSum jacobi_sum(const PointSet& ps, const MultiPoly& numerator) {
  const MultiPoly j = jacobian_determinant(ps.system, ps.vars);
  const MultiPoly num = numerator.with_vars(merge_vars(ps.vars, numerator.vars()));
  if (num.nvars() != ps.vars.size()) throw MathError("numerator involves variables outside the system");
  JacobiSum out;
  out.generic_degree = -static_cast<int>(ps.vars.size());
  for (const auto& f : ps.system) out.generic_degree += static_cast<int>(f.total_degree());
  out.jacobian_degree = j.is_zero() ? -1 : static_cast<int>(j.total_degree());
  if (out.jacobian_degree != out.generic_degree)
    out.warnings.push_back("Jacobian has degree " + std::to_string(out.jacobian_degree) + ", generic value is " +
                           std::to_string(out.generic_degree));
  out.value = 0;
  for (const auto& x : ps.points) {
    const Rational jx = j.evaluate(x);
    if (jx == 0) throw MathError("Jacobian vanishes at a point");
    out.value += num.evaluate(x) / jx;
  }
  return out;
}

std::vector<std::vector<MultiPoly>> taylor_matrix(const PointSet& ps, std::size_t k) {
  const auto& xi = ps.points.at(k);
  const std::size_t n = ps.vars.size();
  std::vector<std::vector<MultiPoly>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly cur = ps.system[i];
    for (std::size_t j = 0; j < n; ++j) {
      const MultiPoly next = cur.substitute(ps.vars[j], xi[j]).with_vars(ps.vars);
      const MultiPoly lin = MultiPoly::variable(ps.vars, j) - MultiPoly(ps.vars, xi[j]);
      const auto q = divide_exact(cur - next, lin);
      if (!q) throw std::logic_error("Taylor step is not exact");
      m[i].push_back(q->with_vars(ps.vars));
      cur = next;
    }
    if (!cur.is_zero()) throw MathError("point is not a solution");
  }
  return m;
}

MultiPoly interpolate_zero_dim(const PointSet& ps, const std::vector<Rational>& values) {
  if (values.size() != ps.points.size()) throw MathError("expected one value per point");
  MultiPoly out(ps.vars);
  for (std::size_t k = 0; k < ps.points.size(); ++k) {
    const MultiPoly d = determinant(taylor_matrix(ps, k)).with_vars(ps.vars);
    const Rational dk = d.evaluate(ps.points[k]);
    if (dk == 0) throw MathError("D_k vanishes at its point: the solution is not simple");
    out += d * (values[k] / dk);
  }
  return out;
}

}  // namespace kron
