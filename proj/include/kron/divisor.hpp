#pragma once

#include "kron/factor.hpp"
#include "kron/number_field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kron {

/// Name of the field generator inside a form's polynomial representation.
inline const std::string kTheta = "theta";

/// A form in indeterminates u... with coefficients in a number field.
///
/// Stored as a polynomial in theta and the indeterminates, reduced modulo the
/// minimal polynomial in theta.  Indeterminate names must start with 'u'.
class DivisorForm {
 public:
  DivisorForm() = default;
  /// `p` may involve kTheta and indeterminates starting with 'u'.
  DivisorForm(FieldRef field, const MultiPoly& p);
  static DivisorForm constant(const AlgNum& a);
  /// sum a_i * names_i
  static DivisorForm linear(const std::vector<AlgNum>& coeffs, const std::vector<std::string>& names);

  const FieldRef& field() const { return field_; }
  const MultiPoly& poly() const { return poly_; }
  /// Indeterminates in declaration order (theta excluded).
  std::vector<std::string> indeterminates() const;
  /// Coefficients keyed by exponent vectors over `indeterminates()`.
  std::map<Monomial, AlgNum, GrlexGreater> coefficients() const;

  bool is_zero() const { return poly_.is_zero(); }
  bool is_integral() const;

  friend DivisorForm operator+(const DivisorForm& a, const DivisorForm& b);
  friend DivisorForm operator-(const DivisorForm& a, const DivisorForm& b);
  friend DivisorForm operator*(const DivisorForm& a, const DivisorForm& b);

  /// Text such as "2*u1 + (theta + 1)*u2".
  std::string to_string() const;

 private:
  FieldRef field_;
  MultiPoly poly_;
};

struct FormNorm {
  MultiPoly norm;      // in the indeterminates
  Integer content;
  MultiPoly fm;        // norm / content
};

/// Nm = Res_theta(minpoly, D); requires integral coefficients.
FormNorm form_norm_content_fm(const DivisorForm& d);

struct DivisibilityReport {
  bool coefficient_test = false;      // quotient coefficients integral
  bool characteristic_test = false;   // Nm(X D - G Fm(D)) / Nm(D) integral
  DivisorForm quotient;               // G * Fm(D) / D
  bool divides() const { return coefficient_test; }
};

/// Both criteria for D | G.  Throws std::logic_error if they disagree and
/// MathError on non-integral input.
DivisibilityReport divisibility(const DivisorForm& d, const DivisorForm& g);
bool divides(const DivisorForm& d, const DivisorForm& g);

/// x_1 u_first + ... + x_k u_{first+k-1}.
DivisorForm gcd_divisor(const std::vector<AlgNum>& elements, int first_index = 1);

bool is_unit(const DivisorForm& d);
bool absolute_equiv(const DivisorForm& a, const DivisorForm& b);

struct BezoutWitness {
  std::size_t i = 0, j = 0;
  UniPoly a, b, e;  // a f_i + b f_j = 1 + p e over Z
};

struct PrimeDivisor {
  Integer p;
  UniPoly local_factor;  // monic lift with coefficients in [0, p)
  int f = 0;
  DivisorForm form;      // p + u_k * local_factor(theta)
  bool certified = false;
};

struct PrimeDecomposition {
  std::vector<PrimeDivisor> divisors;
  std::vector<BezoutWitness> bezout;
  bool product_equivalent = false;  // prod D_i and p divide each other
  bool pairwise_units = false;      // p + u f_i + v f_j are units
};

/// Splits an unramified prime p following the factorization of the minimal
/// polynomial mod p.  Errors when p is not prime or divides the discriminant.
PrimeDecomposition decompose_prime(const FieldRef& field, const Integer& p);

/// Prime divisors of |disc(minpoly)|.
std::vector<Integer> ramified_primes(const FieldRef& field);

}  // namespace kron
