#pragma once

#include "kron/polynomial.hpp"

#include <vector>

namespace kron {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);

/// Determinant over Q by Gaussian elimination.
Rational determinant(RatMatrix m);

/// det(X*I - A).  Computed modulo word-size primes (Hessenberg reduction)
/// and recombined by CRT against a Hadamard-type coefficient bound, so the
/// result is exact.
UniPoly characteristic_polynomial(const RatMatrix& a, const std::string& var = "X");

/// Solve A x = b over Q for square nonsingular A; nullopt when singular.
std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b);

}  // namespace kron
