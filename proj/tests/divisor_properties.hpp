#pragma once

// Randomized property suites for the divisor module, shared by the unit
// tests and the acceptance runner.

#include "kron/divisor.hpp"
#include "kron/parser.hpp"
#include "kron/poly_algorithms.hpp"

#include <random>
#include <string>
#include <vector>

namespace kron::testing {

struct SuiteResult {
  int cases = 0;        // instances examined
  int premises = 0;     // instances where the implication's hypothesis held
  int failures = 0;
  bool ok() const { return failures == 0; }
};

inline const std::vector<std::string>& divisor_corpus() {
  static const std::vector<std::string> fields{
      "x^2 + 1", "x^2 + 5", "x^2 - x + 6", "x^2 - 2", "x^2 + 2",
      "x^2 - x - 1", "x^2 - 3", "x^2 - x + 2", "x^3 - x - 1", "x^3 - 2"};
  return fields;
}

inline FieldRef corpus_field(const std::string& s) {
  return nf_new(UniPoly::from_multipoly(parse_poly(s), "x"));
}

inline AlgNum random_integral(std::mt19937& rng, const FieldRef& k, int bound = 4) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::vector<Rational> v(k->degree);
  for (auto& x : v) x = c(rng);
  return AlgNum(k, v);
}

inline AlgNum random_nonzero(std::mt19937& rng, const FieldRef& k, int bound = 4) {
  for (;;) {
    AlgNum a = random_integral(rng, k, bound);
    if (!a.is_zero()) return a;
  }
}

/// Linear form with one or two terms in u{first}, u{first+1}.
inline DivisorForm random_form(std::mt19937& rng, const FieldRef& k, int first) {
  std::uniform_int_distribution<int> terms(1, 2);
  const int t = terms(rng);
  std::vector<AlgNum> c;
  std::vector<std::string> names;
  for (int i = 0; i < t; ++i) {
    c.push_back(random_nonzero(rng, k));
    names.push_back("u" + std::to_string(first + i));
  }
  return DivisorForm::linear(c, names);
}

inline DivisorForm constant_form(const AlgNum& a) { return DivisorForm::constant(a); }

// The rational constant term of a form (p for a prime divisor), or 1.
inline Rational constant_or_one(const DivisorForm& d) {
  const Rational c = d.poly().constant_term();
  return c == 0 ? Rational(1) : c;
}

/// A prime divisor above a small unramified prime, or nothing.
inline std::optional<PrimeDivisor> random_prime_divisor(std::mt19937& rng, const FieldRef& k) {
  static const std::vector<int> primes{2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  const Integer p = primes[pick(rng)];
  if (mod(k->disc, p) == 0) return std::nullopt;
  const auto dec = decompose_prime(k, p);
  std::uniform_int_distribution<std::size_t> which(0, dec.divisors.size() - 1);
  return dec.divisors[which(rng)];
}

/// D | E*G with E a unit form implies D | G.
inline SuiteResult first_fundamental_theorem(std::uint32_t seed, int cases) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& corpus = divisor_corpus();
  std::uniform_int_distribution<std::size_t> fpick(0, corpus.size() - 1);
  while (r.cases < cases) {
    const FieldRef k = corpus_field(corpus[fpick(rng)]);
    DivisorForm d = random_form(rng, k, 1);
    if (r.cases % 3 == 1)
      if (auto pd = random_prime_divisor(rng, k)) d = pd->form;
    DivisorForm e = random_form(rng, k, 3);
    if (r.cases % 2 == 0)
      e = e + DivisorForm(k, MultiPoly::variable("u5"));  // coefficient 1 makes it primitive
    if (!is_unit(e)) continue;
    DivisorForm g = constant_form(random_nonzero(rng, k));
    switch (r.cases % 3) {
      case 0: g = d * random_form(rng, k, 6); break;
      case 1: g = g * constant_form(AlgNum::from_rational(k, constant_or_one(d))); break;
      default: g = random_form(rng, k, 6); break;
    }
    ++r.cases;
    if (divides(d, e * g)) {
      ++r.premises;
      if (!divides(d, g)) ++r.failures;
    }
  }
  return r;
}

/// D | A*B with A coprime to D (A u + D v a unit form) implies D | B.
inline SuiteResult gauss_lemma(std::uint32_t seed, int cases) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& corpus = divisor_corpus();
  std::uniform_int_distribution<std::size_t> fpick(0, corpus.size() - 1);
  while (r.cases < cases) {
    const FieldRef k = corpus_field(corpus[fpick(rng)]);
    DivisorForm d = random_form(rng, k, 1);
    if (r.cases % 2 == 0)
      if (auto pd = random_prime_divisor(rng, k)) d = pd->form;
    const DivisorForm a = r.cases % 4 < 2 ? constant_form(random_nonzero(rng, k)) : random_form(rng, k, 3);
    const DivisorForm combined = a * DivisorForm(k, MultiPoly::variable("u7")) +
                                 d * DivisorForm(k, MultiPoly::variable("u8"));
    if (!is_unit(combined)) continue;
    DivisorForm b = constant_form(random_nonzero(rng, k));
    if (r.cases % 3 == 0) b = d * random_form(rng, k, 5);
    else if (r.cases % 3 == 1) b = b * constant_form(AlgNum::from_rational(k, constant_or_one(d)));
    ++r.cases;
    if (divides(d, a * b)) {
      ++r.premises;
      if (!divides(d, b)) ++r.failures;
    }
  }
  return r;
}

/// Runs both divisibility criteria (divisibility() throws if they differ).
inline SuiteResult criteria_agreement(std::uint32_t seed, int cases) {
  std::mt19937 rng(seed);
  SuiteResult r;
  const auto& corpus = divisor_corpus();
  std::uniform_int_distribution<std::size_t> fpick(0, corpus.size() - 1);
  while (r.cases < cases) {
    const FieldRef k = corpus_field(corpus[fpick(rng)]);
    DivisorForm d = random_form(rng, k, 1);
    if (r.cases % 2 == 0)
      if (auto pd = random_prime_divisor(rng, k)) d = pd->form;
    DivisorForm g = r.cases % 3 == 0 ? d * random_form(rng, k, 4) : random_form(rng, k, 4);
    if (r.cases % 3 == 2) g = constant_form(random_nonzero(rng, k));
    ++r.cases;
    try {
      const DivisibilityReport rep = divisibility(d, g);
      if (rep.coefficient_test) ++r.premises;
      if (rep.coefficient_test != rep.characteristic_test) ++r.failures;
    } catch (const std::logic_error&) {
      ++r.failures;
    }
  }
  return r;
}

/// Number of classes of {a + b theta : 0 <= a, b < p} under "D divides x - y".
inline int residue_class_count(const PrimeDivisor& pd) {
  const FieldRef& k = pd.form.field();
  const int p = static_cast<int>(pd.p.get_si());
  std::vector<AlgNum> reps;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      const AlgNum x(k, {a, b});
      bool found = false;
      for (const auto& y : reps)
        if (divides(pd.form, constant_form(x - y))) {
          found = true;
          break;
        }
      if (!found) reps.push_back(x);
    }
  return static_cast<int>(reps.size());
}

/// Random quadratic fields Q(sqrt d) with their maximal orders; every prime
/// divisor above an unramified p <= 7 has p^f residue classes.
inline SuiteResult residue_counts(std::uint32_t seed, int cases) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dd(-60, 60);
  std::uniform_int_distribution<int> ppick(0, 3);
  const int primes[] = {2, 3, 5, 7};
  SuiteResult r;
  while (r.cases < cases) {
    const int d = dd(rng);
    if (d == 0 || d == 1) continue;
    bool squarefree = true;
    for (int q = 2; q * q <= std::abs(d); ++q)
      if (d % (q * q) == 0) squarefree = false;
    if (!squarefree) continue;
    const UniPoly minpoly = ((d % 4) + 4) % 4 == 1
                                ? UniPoly({Rational((1 - d) / 4), -1, 1})
                                : UniPoly({Rational(-d), 0, 1});
    const FieldRef k = nf_new(minpoly);
    const int p = primes[ppick(rng)];
    if (mod(k->disc, p) == 0) continue;
    for (const auto& pd : decompose_prime(k, p).divisors) {
      ++r.cases;
      if (residue_class_count(pd) != static_cast<int>(pow(pd.p, pd.f).get_si())) ++r.failures;
    }
  }
  return r;
}

}  // namespace kron::testing
