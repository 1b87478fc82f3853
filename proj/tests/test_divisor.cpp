#include "doctest.h"
#include "divisor_properties.hpp"
#include "test_support.hpp"

using namespace kron;
using namespace kron::testing;

namespace {

FieldRef F(const std::string& s) { return corpus_field(s); }

DivisorForm form(const FieldRef& k, const std::string& text) { return DivisorForm(k, P(text)); }

}  // namespace

TEST_CASE("norm, content and primitive part") {
  const FieldRef k = F("x^2 + 5");
  const DivisorForm d = form(k, "2*u1 + (1 + theta)*u2");
  const FormNorm n = form_norm_content_fm(d);
  // oracle: (2u + (1 + t)v)(2u + (1 - t)v) with t^2 = -5
  const MultiPoly u = P("u1"), v = P("u2");
  const MultiPoly expected = MultiPoly::constant(4) * u * u + MultiPoly::constant(2 * (1 + 1)) * u * v +
                             MultiPoly::constant(1 - (-5)) * v * v;
  CHECK(n.norm == expected.with_vars(n.norm.vars()));
  CHECK(n.content == 2);
  CHECK(n.fm == P("2*u1^2 + 2*u1*u2 + 3*u2^2").with_vars(n.fm.vars()));

  const FormNorm three = form_norm_content_fm(form(F("x^2 + 1"), "3"));
  CHECK(three.norm == MultiPoly::constant(9).with_vars(three.norm.vars()));
  CHECK(three.content == 9);
  CHECK(three.fm.constant_term() == 1);

  const FormNorm cubic = form_norm_content_fm(form(F("x^3 - x - 1"), "u1"));
  CHECK(cubic.norm == P("u1^3"));
  CHECK(cubic.content == 1);

  CHECK_THROWS_AS(form_norm_content_fm(DivisorForm(k, P("1/2*u1"))), MathError);
  CHECK_THROWS_AS(DivisorForm(k, P("v")), MathError);
}

TEST_CASE("divides examples") {
  const FieldRef k = F("x^2 + 5");
  const DivisorForm d = form(k, "2*u1 + (1 + theta)*u2");
  const DivisibilityReport r2 = divisibility(d, form(k, "2"));
  CHECK(r2.coefficient_test);
  CHECK(r2.characteristic_test);
  CHECK(r2.quotient.poly() == form(k, "2*u1 + (1 - theta)*u2").poly());

  const DivisorForm g = form(k, "1 + theta");
  const DivisibilityReport r = divisibility(d, g);
  CHECK(r.divides());
  // oracle: (1 + theta) Fm(D) = D Q
  const DivisorForm fm(k, form_norm_content_fm(d).fm);
  CHECK((g * fm).poly() == (d * r.quotient).poly().with_vars((g * fm).poly().vars()));

  const AlgNum x = AlgNum(k, {3, 1});
  CHECK(divides(DivisorForm(k, P("(3 + theta)*u1")), DivisorForm::constant(x)));
  CHECK_FALSE(divides(form(k, "2"), form(k, "1 + theta")));
  CHECK_FALSE(divides(form(k, "3"), form(k, "2*u1 + (1 + theta)*u2")));
}

TEST_CASE("gcd divisors") {
  const FieldRef q = F("x");
  const DivisorForm g46 = gcd_divisor({AlgNum::from_rational(q, 4), AlgNum::from_rational(q, 6)});
  CHECK(g46.to_string() == "4*u1 + 6*u2");
  CHECK(absolute_equiv(g46, form(q, "2")));

  const FieldRef k = F("x^2 + 5");
  const DivisorForm g = gcd_divisor({AlgNum::from_rational(k, 2), AlgNum(k, {1, 1})});
  CHECK(form_norm_content_fm(g).content == 2);
  // oracle: a^2 + 5 b^2 = 2 has no integer solution, so no element has norm 2
  int solutions = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -1; b <= 1; ++b) solutions += a * a + 5 * b * b == 2;
  CHECK(solutions == 0);
  for (const auto& e : {AlgNum::from_rational(k, 1), AlgNum::from_rational(k, 2), AlgNum(k, {1, 1})})
    CHECK_FALSE(absolute_equiv(g, DivisorForm::constant(e)));

  const AlgNum x(k, {2, 3});
  CHECK(absolute_equiv(gcd_divisor({x}), DivisorForm::constant(x)));
  CHECK_THROWS_AS(gcd_divisor({AlgNum::from_rational(k, 0)}), MathError);
}

TEST_CASE("units and absolute equivalence") {
  const FieldRef k = F("x^2 + 5");
  CHECK(is_unit(form(k, "1")));
  CHECK_FALSE(is_unit(form(k, "2*u1 + (1 + theta)*u2")));
  const FieldRef q = F("x");
  CHECK(is_unit(form(q, "u1 + u2")));
  CHECK(absolute_equiv(form(k, "2*u1 + (1 + theta)*u2"), form(k, "2*u3 + (1 + theta)*u4")));
  CHECK(absolute_equiv(form(q, "2*u1 + 4*u2"), form(q, "2")));
  CHECK_FALSE(absolute_equiv(form(q, "2"), form(q, "3")));
}

TEST_CASE("prime decomposition examples") {
  const auto a = decompose_prime(F("x^2 + 1"), 5);
  REQUIRE(a.divisors.size() == 2);
  for (const auto& d : a.divisors) {
    CHECK(d.f == 1);
    CHECK(d.certified);
  }
  CHECK(a.divisors[0].local_factor == UniPoly({2, 1}));
  CHECK(a.divisors[1].local_factor == UniPoly({3, 1}));
  CHECK(a.divisors[0].form.to_string() == "(theta + 2)*u1 + 5");

  const auto b = decompose_prime(F("x^2 + 1"), 3);
  REQUIRE(b.divisors.size() == 1);
  CHECK(b.divisors[0].f == 2);
  CHECK(b.divisors[0].certified);

  const auto c = decompose_prime(F("x^2 - x + 6"), 2);
  REQUIRE(c.divisors.size() == 2);
  CHECK(c.divisors[0].f == 1);
  CHECK(c.divisors[1].f == 1);
  CHECK(c.product_equivalent);
  CHECK(c.pairwise_units);
  REQUIRE(c.bezout.size() == 1);
  const auto& w = c.bezout[0];
  // a f_i + b f_j = 1 + p e
  CHECK(w.a * c.divisors[0].local_factor + w.b * c.divisors[1].local_factor ==
        UniPoly({1}) + Rational(2) * w.e);

  CHECK_THROWS_AS(decompose_prime(F("x^2 + 1"), 2), MathError);
  CHECK_THROWS_AS(decompose_prime(F("x^2 + 1"), 9), MathError);
}

TEST_CASE("ramified primes") {
  CHECK(ramified_primes(F("x^2 + 1")) == std::vector<Integer>{2});
  CHECK(ramified_primes(F("x^2 - x + 6")) == std::vector<Integer>{23});
  CHECK(ramified_primes(F("x^3 - x - 1")) == std::vector<Integer>{23});
}

TEST_CASE("property: norm and content multiplicative") {
  std::mt19937 rng(5501);
  const auto& corpus = divisor_corpus();
  for (int i = 0; i < 100; ++i) {
    const FieldRef k = F(corpus[i % corpus.size()]);
    const DivisorForm d = random_form(rng, k, 1), e = random_form(rng, k, 3);
    const FormNorm nd = form_norm_content_fm(d), ne = form_norm_content_fm(e);
    const FormNorm nde = form_norm_content_fm(d * e);
    CHECK(nde.norm == (nd.norm * ne.norm).with_vars(nde.norm.vars()));
    CHECK(nde.content == nd.content * ne.content);
  }
}

TEST_CASE("property: prime decomposition soundness") {
  for (const auto& s : divisor_corpus()) {
    const FieldRef k = F(s);
    for (int p = 2; p <= 50; ++p) {
      if (!is_prime(p) || mod(k->disc, p) == 0) continue;
      const auto dec = decompose_prime(k, p);
      int total = 0;
      MultiPoly norm = MultiPoly::constant(1);
      for (const auto& d : dec.divisors) {
        total += d.f;
        CHECK(d.certified);
        norm *= form_norm_content_fm(d.form).norm;
      }
      CHECK(total == k->degree);
      CHECK(content_primitive(norm).content == pow(Integer(p), k->degree));
    }
  }
}

TEST_CASE("property: first fundamental theorem") {
  const SuiteResult r = first_fundamental_theorem(5502, 200);
  CHECK(r.failures == 0);
  CHECK(r.premises >= 50);
}

TEST_CASE("property: Gauss lemma for divisors") {
  const SuiteResult r = gauss_lemma(5503, 200);
  CHECK(r.failures == 0);
  CHECK(r.premises >= 30);
}

TEST_CASE("property: divisibility criteria agree") {
  const SuiteResult r = criteria_agreement(5504, 200);
  CHECK(r.failures == 0);
  CHECK(r.premises >= 30);
}

TEST_CASE("property: residue class count equals the norm") {
  const SuiteResult r = residue_counts(5505, 200);
  CHECK(r.failures == 0);
  CHECK(r.cases >= 200);
}
