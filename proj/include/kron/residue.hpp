#pragma once

#include "kron/polynomial.hpp"

#include <string>
#include <vector>

namespace kron {

/// n polynomials in n variables with exact simple solution points.
struct PointSet {
  std::vector<std::string> vars;
  std::vector<MultiPoly> system;
  std::vector<std::vector<Rational>> points;
};

/// Validates the point set: square system, every point a zero of every
/// polynomial, Jacobian nonzero at every point, points distinct.  When each
/// polynomial is univariate in a distinct variable the point count must be
/// the product of the degrees.
PointSet make_point_set(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars,
                        const std::vector<std::vector<Rational>>& points);

/// det(dF_i / dx_j).
MultiPoly jacobian_determinant(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars);

/// Tr_{Q[x]/f}(x^i / f'(x)) for monic squarefree f.
Rational euler_trace(const UniPoly& f, int i);

struct JacobiSum {
  Rational value;
  int generic_degree = 0;   // sum deg F_i - n
  int jacobian_degree = 0;  // actual total degree of J
  std::vector<std::string> warnings;
};

/// sum_k F(xi_k) / J(xi_k).
JacobiSum jacobi_sum(const PointSet& ps, const MultiPoly& numerator);

/// F_i = sum_j (x_j - xi_j) F_ji, by exact division one coordinate at a
/// time.  Entry [i][j] is F_ji.
std::vector<std::vector<MultiPoly>> taylor_matrix(const PointSet& ps, std::size_t k);

/// sum_k values_k D_k(x) / D_k(xi_k),  D_k = det(taylor_matrix(ps, k)).
MultiPoly interpolate_zero_dim(const PointSet& ps, const std::vector<Rational>& values);

}  // namespace kron
