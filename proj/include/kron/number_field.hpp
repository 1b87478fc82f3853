#pragma once

#include "kron/linalg.hpp"
#include "kron/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kron {

/// Q(theta) = Q[x]/(minpoly) with minpoly monic, integral and irreducible.
struct NumberField {
  UniPoly minpoly;
  int degree = 0;
  Integer disc;
};

using FieldRef = std::shared_ptr<const NumberField>;

/// Validates and builds a field.  Errors: non-monic or non-integral
/// minpoly, degree < 1, reducible ("not a genus-defining equation").
FieldRef nf_new(const UniPoly& minpoly);

/// Element of a number field in the power basis 1, theta, ..., theta^(n-1).
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(FieldRef field, std::vector<Rational> coords);
  static AlgNum from_rational(FieldRef field, const Rational& r);
  static AlgNum theta(FieldRef field);
  /// Reduce an arbitrary polynomial in theta modulo the minimal polynomial.
  static AlgNum from_poly(FieldRef field, const UniPoly& p);

  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const Rational& c, const AlgNum& a);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
  AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
  AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
  AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }

  /// Throws MathError("division by zero") on zero.
  AlgNum inverse() const;
  AlgNum pow(unsigned e) const;

  /// Matrix of multiplication by this element; column j holds a*theta^j.
  RatMatrix multiplication_matrix() const;
  UniPoly charpoly(const std::string& var = "X") const;
  Rational norm() const;
  Rational trace() const;
  /// The minimal polynomial over Q (monic).
  UniPoly minpoly(const std::string& var = "X") const;
  bool is_integral() const;

  UniPoly to_poly(const std::string& var = "theta") const;
  std::string to_string(const std::string& var = "theta") const;

 private:
  FieldRef field_;
  std::vector<Rational> coords_;
};

struct NormTraceMinpoly {
  Rational norm;
  Rational trace;
  UniPoly minpoly;
};

NormTraceMinpoly norm_trace_minpoly(const AlgNum& a);

/// det(Tr(x_g x_h)), the square of the conjugate determinant.
Rational discriminant_of_quantities(const FieldRef& field, const std::vector<AlgNum>& xs);

/// Throws MathError("field mismatch") unless both elements live in the same field.
void check_same_field(const AlgNum& a, const AlgNum& b);

}  // namespace kron
