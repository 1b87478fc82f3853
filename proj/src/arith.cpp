#include "kron/arith.hpp"

#include <algorithm>
#include <map>

namespace kron {
namespace {

// Brent's variant of Pollard rho; n composite and odd.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    const unsigned long batch = 64;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mod(q * abs(x - y), n);
        }
        d = gcd(q, n);
        k += batch;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = gcd(abs(x - ys), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<Integer, unsigned> factor_integer(Integer n) {
  std::map<Integer, unsigned> out;
  n = abs(n);
  if (n == 0) throw MathError("cannot factor zero");
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

}  // namespace

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace kron
