#pragma once

#include "kron/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kron {

/// a + b*theta in the maximal order of Q(sqrt d), d < 0 squarefree.
struct QuadElement {
  Integer a, b;
  friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

/// The lattice Z*a + Z*(b + c*theta) in Hermite normal form: c | a, c | b,
/// 0 <= b < a.  Its norm is a*c.
struct QuadIdeal {
  Integer a, b, c;
  Integer norm() const { return a * c; }
  friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;
};

/// Z[theta] with theta^2 + B theta + C = 0: theta = (1 + sqrt d)/2 when
/// d = 1 mod 4, theta = sqrt d otherwise.
class QuadraticOrder {
 public:
  explicit QuadraticOrder(const Integer& d);

  const Integer& d() const { return d_; }
  const Integer& disc() const { return disc_; }
  const Integer& B() const { return b_; }
  const Integer& C() const { return c_; }
  /// Coefficients of the minimal polynomial of theta, low to high.
  std::vector<Integer> minpoly() const { return {c_, b_, 1}; }

  QuadElement multiply(const QuadElement& x, const QuadElement& y) const;
  QuadElement conjugate(const QuadElement& x) const;
  Integer norm(const QuadElement& x) const;
  std::string to_string(const QuadElement& x) const;

  QuadIdeal unit_ideal() const { return {1, 0, 1}; }
  /// Ideal generated (as an O-module) by the given elements.
  QuadIdeal ideal(const std::vector<QuadElement>& gens) const;
  QuadIdeal multiply(const QuadIdeal& i, const QuadIdeal& j) const;
  QuadIdeal conjugate(const QuadIdeal& i) const;
  bool contains(const QuadIdeal& i, const QuadElement& x) const;

  /// Every element of norm n (n > 0), in a fixed search order.
  std::vector<QuadElement> elements_of_norm(const Integer& n) const;
  /// A generator when the ideal is principal.
  std::optional<QuadElement> principal_generator(const QuadIdeal& i) const;

  /// First criterion: I ~ J iff I * conj(J) is principal (conj(J) * J is).
  bool equivalent(const QuadIdeal& i, const QuadIdeal& j) const;
  /// Second criterion: (alpha) I = (beta) J for some nonzero alpha, beta,
  /// searched with alpha a positive integer up to N(J).
  bool equivalent_by_quotient(const QuadIdeal& i, const QuadIdeal& j) const;

 private:
  Integer d_, disc_, b_, c_;
};

struct PrimeIdeal {
  Integer p;
  Integer root;  // ideal (p, theta - root); unused when inert
  int f = 1;     // residue degree
  bool ramified = false;
  QuadIdeal ideal;
  std::string name;
};

struct IdealClass {
  std::string representative;  // product of prime ideal names, "1" for O
  QuadIdeal ideal;
  Integer norm;
  int order = 1;
};

struct ClassGroupResult {
  Integer d, disc, bound;
  int h = 0;
  std::vector<PrimeIdeal> primes;            // all prime ideals of norm <= bound's primes
  std::vector<QuadIdeal> enumerated;         // every ideal of norm <= bound
  std::vector<std::string> enumerated_names;
  std::vector<IdealClass> classes;           // classes[0] is the principal class
  std::vector<std::vector<int>> table;       // class multiplication
  std::vector<std::string> generators;       // prime ideal names generating the group
};

/// Kronecker's finiteness argument with the bound ceil((2/pi) sqrt|disc|):
/// every class holds an ideal of norm at most the bound.  |d| <= 200.
ClassGroupResult class_number_imag_quadratic(const Integer& d);

}  // namespace kron
