#pragma once

#include "kron/linalg.hpp"
#include "kron/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kron {

/// Q[x1..xn] modulo the relations e_k(x) = (-1)^k a_{n-k}, in the monomial
/// basis x1^h1 ... x_{n-1}^h_{n-1}, 0 <= h_k <= n - k.  Elements are dense
/// coordinate vectors of length n!.
class SplittingAlgebra {
 public:
  using Element = std::vector<Rational>;

  /// f monic of degree 1..5 with rational coefficients.
  explicit SplittingAlgebra(const UniPoly& f);

  const UniPoly& polynomial() const { return f_; }
  int degree() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::vector<unsigned>>& basis() const { return basis_; }
  std::string basis_monomial(std::size_t k) const;

  /// Coefficients (low to high) of f_j, j = 1..n, with f_1 = f and
  /// f_{j+1}(x) = (f_j(x) - f_j(x_j)) / (x - x_j).
  const std::vector<Element>& cascade(int j) const { return cascade_[j - 1]; }

  Element zero() const { return Element(dimension(), Rational(0)); }
  Element constant(const Rational& c) const;
  /// The root x_j, 1 <= j <= n.
  Element root(int j) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& c) const;
  Element multiply(const Element& a, const Element& b) const;
  /// Matrix of b -> a*b in the monomial basis (columns are images).
  RatMatrix multiplication_matrix(const Element& a) const;

  /// Image of a polynomial in variables x1..xn (names as given).
  Element evaluate(const MultiPoly& p, const std::vector<std::string>& names) const;
  std::optional<Rational> as_constant(const Element& a) const;

  /// Elementary symmetric function e_k(x1..xn) computed in the algebra.
  Element elementary_symmetric(int k) const;

 private:
  Element multiply_by_root(int j, const Element& a) const;  // j < n
  std::size_t index_of(const std::vector<unsigned>& h) const;

  UniPoly f_;
  int n_;
  std::vector<std::vector<unsigned>> basis_;
  std::vector<std::vector<Element>> cascade_;
  std::vector<RatMatrix> root_matrices_;  // multiplication by x_j, j < n
};

/// Characteristic polynomial (variable "X") of multiplication by
/// u1 x1 + ... + un xn; degree n!.
UniPoly resolvent_total_symmetric(const UniPoly& f, const std::vector<Integer>& u);

/// Images (p(1), ..., p(n)), 1-based.
using Permutation = std::vector<int>;

struct GaloisOptions {
  int max_attempts = 20;
  unsigned min_precision = 128;   // bits
  unsigned max_precision = 16384;
};

struct GaloisResult {
  std::vector<Permutation> group;   // sorted lexicographically
  std::size_t order = 0;
  UniPoly resolvent;                // for the separating u below
  std::vector<UniPoly> factors;     // irreducible, sorted by degree then canonical form
  std::vector<int> factor_pattern;
  std::vector<Integer> u;
  int attempts = 0;
  unsigned precision = 0;
};

/// Galois group of an irreducible monic f of degree <= 5, read off the
/// total resolvent.  Roots are labelled by increasing real part, then
/// increasing imaginary part.  An empty u means (0, 1, ..., n-1); on a
/// non-separating u the attempt-a vector is u_i + a*i^2.
GaloisResult galois_group(const UniPoly& f, std::vector<Integer> u = {},
                          const GaloisOptions& options = {});

/// Identity, inverses and closure under composition.
bool is_group(const std::vector<Permutation>& perms);
bool is_transitive(const std::vector<Permutation>& perms, int n);

struct GenusDiscIdentity {
  MultiPoly lhs;  // det^2 of the n! x n! matrix (x_sigma^h)
  MultiPoly rhs;  // D^(n!/2), D = prod_{i<j} (x_i - x_j)^2
  bool equal = false;
};

/// Symbolic check of det^2 = D^(n!/2) for n in {2, 3}.
GenusDiscIdentity genus_disc_identity(int n);

/// Value of a symmetric polynomial in x1..xn at the roots of f, computed in
/// the splitting algebra.  Throws MathError if the image is not a constant.
Rational specialize_symmetric(const MultiPoly& p, const UniPoly& f);

}  // namespace kron
