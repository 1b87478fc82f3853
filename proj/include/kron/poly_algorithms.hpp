#pragma once

#include "kron/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kron {

struct ContentPrimitive {
  Integer content;
  MultiPoly primitive;
};

/// Integer content and primitive part of an integer-coefficient polynomial.
/// content >= 0 and content * primitive == p; the zero polynomial maps to
/// (0, 0).  Throws MathError on non-integer coefficients (clear denominators
/// with `clear_denominators` first).
ContentPrimitive content_primitive(const MultiPoly& p);

/// Multiply by the least common denominator; returns (scale, scaled poly).
std::pair<Integer, MultiPoly> clear_denominators(const MultiPoly& p);

/// Primitive integer representative with positive leading coefficient
/// (grlex).  The zero polynomial is returned unchanged.
MultiPoly normalize(const MultiPoly& p);

/// Greatest common divisor over Q, normalized as above.  gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& p, const std::string& var);

/// gcd of the coefficients of p viewed as a polynomial in `vars`
/// (the remaining variables form the coefficient ring).
MultiPoly content_in(const MultiPoly& p, const std::vector<std::string>& vars);

/// Pseudo-remainder of p by q in `var`: lc(q)^(dp-dq+1) p mod q.
MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, const std::string& var);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester matrix of p and q in `var` (degrees as given by the polynomials).
std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& p, const MultiPoly& q,
                                                     const std::string& var);

/// Res_var(p, q).  When exactly one argument is constant in var the result
/// is that constant raised to the other's degree; both constant throws
/// MathError("no elimination variable").
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

/// (-1)^(m(m-1)/2) Res_var(p, dp/dvar) / lc_var(p),  m = deg_var p >= 1.
MultiPoly discriminant(const MultiPoly& p, const std::string& var);

/// p / gcd(p, dp/dv) over all variables: the product of the distinct
/// irreducible factors, normalized.
MultiPoly squarefree_part(const MultiPoly& p);

/// Record needed to invert a Kronecker substitution.
struct KroneckerCodec {
  std::uint64_t base = 0;
  std::vector<std::string> vars;
};

/// p(x, x^g, x^(g^2), ...) as a univariate polynomial in the first variable's
/// name.  Requires g > deg_v p for every variable v.
std::pair<UniPoly, KroneckerCodec> kronecker_substitute(const MultiPoly& p, std::uint64_t g);

/// Inverse map: base-g digit expansion of each exponent.  Throws MathError
/// if a digit position exceeds the codec's variable count.
MultiPoly kronecker_inverse(const UniPoly& u, const KroneckerCodec& codec);

}  // namespace kron
