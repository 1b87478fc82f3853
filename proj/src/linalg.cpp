#include "kron/linalg.hpp"

#include <cstdint>

namespace kron {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Coefficients (low to high, monic of degree n) of det(X - H) mod p.
std::vector<u64> charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 inv = invmod(h[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      const u64 u = mulmod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mulmod(u, h[m][c], p)) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + mulmod(u, h[r][i], p)) % p;
    }
  }
  std::vector<std::vector<u64>> q(n + 1);
  q[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const u64 d = h[m - 1][m - 1];
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] = (cur[k + 1] + q[m - 1][k]) % p;
      cur[k] = (cur[k] + p - mulmod(d, q[m - 1][k], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulmod(t, h[m - i][m - i - 1], p);
      const u64 f = mulmod(h[m - i - 1][m - 1], t, p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < q[m - i - 1].size(); ++k)
        cur[k] = (cur[k] + p - mulmod(f, q[m - i - 1][k], p)) % p;
    }
    q[m] = std::move(cur);
  }
  return q[n];
}

// Bound on |coefficient| of the characteristic polynomial of an integer
// matrix with entries bounded by r: sum over principal minors, Hadamard.
Integer charpoly_bound(std::size_t n, const Integer& r) {
  Integer best = 1, binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * Integer(static_cast<unsigned long>(n - k + 1)) / Integer(static_cast<unsigned long>(k));
    const Integer base = Integer(static_cast<unsigned long>(k)) * r * r;
    const Integer sq = pow(base, k);
    const Integer minor = isqrt(sq) + 1;
    const Integer b = binom * minor;
    if (b > best) best = b;
  }
  return best;
}

}  // namespace

UniPoly characteristic_polynomial(const RatMatrix& a, const std::string& var) {
  const std::size_t n = a.size();
  Integer den = 1;
  for (const auto& row : a)
    for (const auto& x : row) den = lcm(den, x.get_den());
  std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n));
  Integer r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = a[i][j].get_num() * (den / a[i][j].get_den());
      if (abs(b[i][j]) > r) r = abs(b[i][j]);
    }
  const Integer bound = 2 * charpoly_bound(n, r) + 1;

  std::vector<Integer> res(n + 1, Integer(0));
  Integer modulus = 1;
  Integer prime = Integer(1) << 30;
  while (modulus <= bound) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h[i][j] = mod(b[i][j], prime).get_ui();
    const auto cp = charpoly_mod(std::move(h), p);
    // CRT: res <- res + modulus * ((c - res) * modulus^-1 mod p)
    const u64 minv = invmod(mod(modulus, prime).get_ui(), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 cur = mod(res[k], prime).get_ui();
      const u64 t = mulmod((cp[k] + p - cur) % p, minv, p);
      res[k] += modulus * Integer(static_cast<unsigned long>(t));
    }
    modulus *= prime;
  }
  const Integer half = modulus / 2;
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (res[k] > half) res[k] -= modulus;
    // charpoly_A(X) = den^-n charpoly_B(den X)
    coeffs[k] = make_rational(res[k], pow(den, n - k));
  }
  return UniPoly(std::move(coeffs), var);
}

}  // namespace kron
