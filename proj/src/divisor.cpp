#include "kron/divisor.hpp"

#include "kron/poly_algorithms.hpp"

#include <stdexcept>

namespace kron {

namespace {

MultiPoly theta_minpoly(const FieldRef& field) {
  return field->minpoly.with_var(kTheta).to_multipoly();
}

std::vector<std::string> with_theta_first(const std::vector<std::string>& vars) {
  std::vector<std::string> out{kTheta};
  for (const auto& v : vars)
    if (v != kTheta) out.push_back(v);
  return out;
}

std::vector<std::string> without_theta(const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars)
    if (v != kTheta) out.push_back(v);
  return out;
}

}  // namespace

DivisorForm::DivisorForm(FieldRef field, const MultiPoly& p) : field_(std::move(field)) {
  for (const auto& v : p.vars())
    if (v != kTheta && v.rfind('u', 0) != 0)
      throw MathError("indeterminate '" + v + "' must start with 'u'");
  MultiPoly q = p.with_vars(with_theta_first(p.vars()));
  if (q.degree(kTheta) >= static_cast<std::uint32_t>(field_->degree))
    q = pseudo_remainder(q, theta_minpoly(field_), kTheta);
  poly_ = q.with_vars(with_theta_first(q.vars()));
}

DivisorForm DivisorForm::constant(const AlgNum& a) {
  return DivisorForm(a.field(), a.to_poly(kTheta).to_multipoly());
}

DivisorForm DivisorForm::linear(const std::vector<AlgNum>& coeffs,
                                const std::vector<std::string>& names) {
  if (coeffs.empty() || coeffs.size() != names.size())
    throw MathError("linear form needs one indeterminate per coefficient");
  std::vector<std::string> vars{kTheta};
  vars.insert(vars.end(), names.begin(), names.end());
  MultiPoly p(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    check_same_field(coeffs[0], coeffs[i]);
    p += coeffs[i].to_poly(kTheta).to_multipoly().with_vars(vars) * MultiPoly::variable(vars, i + 1);
  }
  return DivisorForm(coeffs[0].field(), p);
}

std::vector<std::string> DivisorForm::indeterminates() const { return without_theta(poly_.vars()); }

std::map<Monomial, AlgNum, GrlexGreater> DivisorForm::coefficients() const {
  std::map<Monomial, AlgNum, GrlexGreater> out;
  for (const auto& [m, c] : poly_.terms()) {
    const Monomial rest(m.begin() + 1, m.end());
    auto it = out.find(rest);
    if (it == out.end()) it = out.emplace(rest, AlgNum::from_rational(field_, 0)).first;
    std::vector<Rational> coords = it->second.coords();
    coords[m[0]] += c;
    it->second = AlgNum(field_, coords);
  }
  return out;
}

bool DivisorForm::is_integral() const {
  for (const auto& [m, a] : coefficients())
    if (!a.is_integral()) return false;
  return true;
}

DivisorForm operator+(const DivisorForm& a, const DivisorForm& b) {
  return DivisorForm(a.field_, a.poly_ + b.poly_);
}

DivisorForm operator-(const DivisorForm& a, const DivisorForm& b) {
  return DivisorForm(a.field_, a.poly_ - b.poly_);
}

DivisorForm operator*(const DivisorForm& a, const DivisorForm& b) {
  if (a.field_ != b.field_ && !(a.field_->minpoly == b.field_->minpoly))
    throw MathError("field mismatch");
  return DivisorForm(a.field_, a.poly_ * b.poly_);
}

std::string DivisorForm::to_string() const {
  if (poly_.is_zero()) return "0";
  const auto vars = indeterminates();
  std::string out;
  for (const auto& [m, a] : coefficients()) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coef;
    bool negative = false;
    if (a.is_rational()) {
      Rational c = a.coords()[0];
      negative = c < 0;
      if (negative) c = -c;
      if (c != 1 || mono.empty()) coef = c.get_str();
    } else {
      const MultiPoly ap = a.to_poly(kTheta).to_multipoly();
      coef = ap.size() == 1 && mono.empty() ? ap.to_string() : "(" + ap.to_string() + ")";
    }
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

namespace {

MultiPoly norm_of(const FieldRef& field, const MultiPoly& form) {
  const MultiPoly res = resultant(theta_minpoly(field), form, kTheta);
  return res.with_vars(without_theta(res.vars()));
}

MultiPoly from_coefficients(const FieldRef& field, const std::vector<std::string>& uvars,
                            const std::map<Monomial, AlgNum, GrlexGreater>& coeffs) {
  const auto vars = with_theta_first(uvars);
  MultiPoly p(vars);
  for (const auto& [m, a] : coeffs) {
    Monomial full(vars.size(), 0);
    std::copy(m.begin(), m.end(), full.begin() + 1);
    for (int k = 0; k < field->degree; ++k) {
      if (a.coords()[k] == 0) continue;
      full[0] = static_cast<std::uint32_t>(k);
      p.add_term(full, a.coords()[k]);
    }
  }
  return p;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

FormNorm form_norm_content_fm(const DivisorForm& d) {
  if (d.is_zero()) throw MathError("zero form has no norm");
  if (!d.is_integral()) throw MathError("form has a non-integral coefficient");
  FormNorm out;
  out.norm = norm_of(d.field(), d.poly());
  auto cp = content_primitive(out.norm);
  out.content = cp.content;
  out.fm = cp.primitive;
  return out;
}

DivisibilityReport divisibility(const DivisorForm& d, const DivisorForm& g) {
  if (d.is_zero()) throw MathError("zero divisor form");
  if (!g.is_zero() && !g.is_integral()) throw MathError("form has a non-integral coefficient");
  const FormNorm nd = form_norm_content_fm(d);
  const FieldRef& field = d.field();
  const DivisorForm n = g * DivisorForm(field, nd.fm);
  const auto uvars = merge_vars(d.indeterminates(), n.indeterminates());
  const DivisorForm dd(field, d.poly().with_vars(with_theta_first(uvars)));
  const DivisorForm nn(field, n.poly().with_vars(with_theta_first(uvars)));

  // exact division in K[u] by leading terms
  auto rem = nn.coefficients();
  const auto dc = dd.coefficients();
  const auto& [lm, lc] = *dc.begin();
  const AlgNum lc_inv = lc.inverse();
  std::map<Monomial, AlgNum, GrlexGreater> quot;
  while (!rem.empty()) {
    const auto [m, c] = *rem.begin();
    if (!monomial_divides(lm, m)) throw std::logic_error("form quotient is not a polynomial");
    Monomial shift(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) shift[i] = m[i] - lm[i];
    const AlgNum q = c * lc_inv;
    quot.emplace(shift, q);
    for (const auto& [dm, dcoef] : dc) {
      Monomial t(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) t[i] = dm[i] + shift[i];
      auto it = rem.find(t);
      const AlgNum delta = q * dcoef;
      if (it == rem.end()) rem.emplace(t, -delta);
      else {
        it->second = it->second - delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }

  DivisibilityReport out;
  out.quotient = DivisorForm(field, from_coefficients(field, uvars, quot));
  out.coefficient_test = true;
  for (const auto& [m, a] : quot) out.coefficient_test = out.coefficient_test && a.is_integral();

  // characteristic equation of the quotient: Nm(X D - G Fm(D)) / Nm(D)
  auto vars = with_theta_first(uvars);
  vars.push_back("X");
  const MultiPoly xvar = MultiPoly::variable(vars, vars.size() - 1);
  const MultiPoly t = xvar * dd.poly().with_vars(vars) - nn.poly().with_vars(vars);
  const MultiPoly nt = norm_of(field, t);
  const auto charpoly = divide_exact(nt, nd.norm);
  if (!charpoly) throw std::logic_error("characteristic polynomial of the quotient is not polynomial");
  out.characteristic_test = charpoly->all_integer_coefficients();
  if (out.characteristic_test != out.coefficient_test)
    throw std::logic_error("divisibility criteria disagree");
  return out;
}

bool divides(const DivisorForm& d, const DivisorForm& g) { return divisibility(d, g).divides(); }

DivisorForm gcd_divisor(const std::vector<AlgNum>& elements, int first_index) {
  if (elements.empty()) throw MathError("gcd of an empty list");
  bool all_zero = true;
  for (const auto& x : elements) {
    if (!x.is_integral()) throw MathError("gcd needs integral elements");
    all_zero = all_zero && x.is_zero();
  }
  if (all_zero) throw MathError("gcd of zero elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i)
    names.push_back("u" + std::to_string(first_index + static_cast<int>(i)));
  const DivisorForm d = DivisorForm::linear(elements, names);
  for (const auto& x : elements)
    if (!divides(d, DivisorForm::constant(x))) throw std::logic_error("gcd divisor fails to divide");
  return d;
}

bool is_unit(const DivisorForm& d) { return form_norm_content_fm(d).content == 1; }

bool absolute_equiv(const DivisorForm& a, const DivisorForm& b) {
  return divides(a, b) && divides(b, a);
}

std::vector<Integer> ramified_primes(const FieldRef& field) { return prime_divisors(field->disc); }

namespace {

// Reduce rational coefficients modulo p into [0, p).
UniPoly reduce_mod(const UniPoly& f, const Integer& p) {
  std::vector<Rational> c;
  for (const auto& x : f.coeffs()) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
    c.emplace_back(mod(x.get_num() * inv, p));
  }
  return UniPoly(c, f.var());
}

}  // namespace

PrimeDecomposition decompose_prime(const FieldRef& field, const Integer& p) {
  if (!is_prime(p)) throw MathError(p.get_str() + " is not prime");
  if (mod(field->disc, p) == 0)
    throw MathError("ramified or index case: " + p.get_str() + " divides the discriminant");
  const ModPFactorization fp = factor_mod_p(field->minpoly, p);
  PrimeDecomposition out;
  std::vector<UniPoly> lifts;
  for (std::size_t i = 0; i < fp.factors.size(); ++i) {
    const UniPoly& f = fp.factors[i].first;
    lifts.push_back(f.with_var("x"));
    PrimeDivisor pd;
    pd.p = p;
    pd.local_factor = f.with_var("x");
    pd.f = f.degree();
    const std::vector<std::string> vars{kTheta, "u" + std::to_string(i + 1)};
    pd.form = DivisorForm(field, MultiPoly(vars, Rational(p)) +
                                     f.with_var(kTheta).to_multipoly() * MultiPoly::variable(vars, 1));
    out.divisors.push_back(pd);
  }

  // pairwise coprimality: Bezout identity mod p, lifted to Z
  bool bezout_ok = true;
  out.pairwise_units = true;
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      auto [g, s, t] = UniPoly::ext_gcd(lifts[i], lifts[j]);
      BezoutWitness w{i, j, reduce_mod((1 / g.coeff(0)) * s, p), reduce_mod((1 / g.coeff(0)) * t, p), {}};
      const UniPoly lhs = w.a * lifts[i] + w.b * lifts[j] - UniPoly({1});
      w.e = make_rational(1, p) * lhs;
      bezout_ok = bezout_ok && w.e.has_integer_coefficients();
      out.bezout.push_back(w);
      const DivisorForm common =
          gcd_divisor({AlgNum::from_rational(field, Rational(p)), AlgNum::from_poly(field, lifts[i]),
                       AlgNum::from_poly(field, lifts[j])});
      out.pairwise_units = out.pairwise_units && is_unit(common);
    }

  DivisorForm product = DivisorForm::constant(AlgNum::from_rational(field, 1));
  for (const auto& d : out.divisors) product = product * d.form;
  out.product_equivalent =
      absolute_equiv(product, DivisorForm::constant(AlgNum::from_rational(field, Rational(p))));
  for (auto& d : out.divisors) {
    const Integer content = form_norm_content_fm(d.form).content;
    d.certified = bezout_ok && out.pairwise_units && out.product_equivalent && content == pow(p, d.f);
  }
  return out;
}

}  // namespace kron
