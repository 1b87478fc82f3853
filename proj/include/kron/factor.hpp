#pragma once

#include "kron/polynomial.hpp"

#include <utility>
#include <vector>

namespace kron {

/// unit * prod(factor^multiplicity).  Factors are primitive integer
/// polynomials with positive leading coefficient, irreducible over Q, sorted
/// by degree and then coefficients.
struct Factorization {
  Rational unit = 1;
  std::vector<std::pair<MultiPoly, unsigned>> factors;

  MultiPoly expand() const;
  std::size_t count_with_multiplicity() const;
};

/// Monic factors over Z/p with coefficients in [0, p).
struct ModPFactorization {
  Integer p;
  std::vector<std::pair<UniPoly, unsigned>> factors;
};

/// Largest degree handed to the interpolation search (after rational roots
/// have been split off).
inline constexpr int kMaxInterpolationDegree = 12;
/// Largest number of univariate image factors tried in recombination.
inline constexpr std::size_t kMaxImageFactors = 16;

/// Kronecker's interpolation search over Z.  Throws MathError on the zero
/// polynomial or when a factor of degree > kMaxInterpolationDegree remains
/// to be split.
Factorization factor_univariate(const UniPoly& f);

/// Multivariate factorization by Kronecker substitution; univariate and
/// constant inputs are handled directly.
Factorization factor_multivariate(const MultiPoly& f);

/// Exhaustive search over Z/p.  Requires p prime, p <= 997, deg <= 8 and
/// p not dividing the leading coefficient.
ModPFactorization factor_mod_p(const UniPoly& f, const Integer& p);

/// Primitive integer polynomial with positive leading coefficient.
UniPoly primitive_part(const UniPoly& f);

/// Canonical ordering used for factor lists.
bool canonical_less(const MultiPoly& a, const MultiPoly& b);

}  // namespace kron
