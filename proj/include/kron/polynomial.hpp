#pragma once

#include "kron/arith.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace kron {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);

/// Graded lexicographic order, "greater first": higher total degree first,
/// ties broken lexicographically by the declared variable order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class UniPoly;

/// Sparse multivariate polynomial with rational coefficients.
///
/// The variable list is part of the value; binary operations on polynomials
/// with different variable lists first extend the left operand's list by the
/// right operand's new names (in their order).  Terms are kept in graded
/// lexicographic order, leading term first, and zero coefficients are never
/// stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const Rational& constant);

  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  static MultiPoly variable(const std::string& name);
  static MultiPoly constant(const Rational& c);
  static MultiPoly monomial(std::vector<std::string> vars, Monomial m, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (0 if absent).
  Rational constant_term() const;
  /// Leading term in grlex order.  Precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::uint32_t degree(const std::string& name) const;
  std::uint32_t degree(std::size_t index) const;
  std::uint64_t total_degree() const;
  bool involves(const std::string& name) const { return degree(name) > 0; }
  /// Names of the variables that actually occur.
  std::vector<std::string> support() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Re-express over a superset variable list (order given by `vars`).
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drop variables that do not occur.
  MultiPoly compact() const;

  /// Coefficients with respect to `name`: result[i] multiplies name^i.
  /// The coefficients keep this polynomial's variable list.
  std::vector<MultiPoly> coefficients_in(const std::string& name) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs,
                                     const std::string& name);

  MultiPoly derivative(const std::string& name) const;
  /// Substitute `value` for variable `name`.
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  MultiPoly substitute(const std::string& name, const Rational& value) const;
  /// Evaluate at a full assignment (in this polynomial's variable order).
  Rational evaluate(const std::vector<Rational>& point) const;

  bool all_integer_coefficients() const;
  /// Least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;

  /// Canonical text: graded-lex descending, explicit '*' and '^'.
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Merge two variable lists: `a` followed by names of `b` not in `a`.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Exact division p / q.  Returns nullopt when q does not divide p in
/// Q[vars].  Precondition: q nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Dense univariate polynomial with rational coefficients, low to high.
class UniPoly {
 public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
  static UniPoly from_integers(const std::vector<Integer>& coeffs, std::string var = "x");
  static UniPoly from_multipoly(const MultiPoly& p, const std::string& var);

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coefficients() const;
  std::vector<Integer> integer_coefficients() const;

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly with_var(std::string v) const;

  MultiPoly to_multipoly() const;
  std::string to_string() const { return to_multipoly().to_string(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q; throws MathError on division by zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd over Q (zero if both zero).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
  std::string var_;
};

}  // namespace kron
