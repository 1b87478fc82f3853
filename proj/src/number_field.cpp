#include "kron/number_field.hpp"

#include "kron/factor.hpp"
#include "kron/poly_algorithms.hpp"

namespace kron {

FieldRef nf_new(const UniPoly& minpoly) {
  if (minpoly.degree() < 1) throw MathError("field polynomial must have degree at least 1");
  if (!minpoly.is_monic()) throw MathError("field polynomial must be monic");
  if (!minpoly.has_integer_coefficients())
    throw MathError("field polynomial must have integer coefficients");
  if (minpoly.degree() > 1) {
    const Factorization f = factor_univariate(minpoly);
    if (f.factors.size() != 1 || f.factors[0].second != 1)
      throw MathError("reducible polynomial: not a genus-defining equation");
  }
  auto nf = std::make_shared<NumberField>();
  nf->minpoly = minpoly.with_var("x");
  nf->degree = minpoly.degree();
  const MultiPoly m = nf->minpoly.to_multipoly();
  nf->disc = minpoly.degree() == 1 ? Integer(1) : discriminant(m, "x").constant_term().get_num();
  return nf;
}

void check_same_field(const AlgNum& a, const AlgNum& b) {
  if (!a.field() || !b.field()) throw MathError("uninitialized algebraic number");
  if (a.field() != b.field() && !(a.field()->minpoly == b.field()->minpoly))
    throw MathError("field mismatch");
}

AlgNum::AlgNum(FieldRef field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree)
    throw MathError("coordinate count does not match the field degree");
}

AlgNum AlgNum::from_rational(FieldRef field, const Rational& r) {
  std::vector<Rational> c(field->degree, Rational(0));
  c[0] = r;
  return AlgNum(std::move(field), std::move(c));
}

AlgNum AlgNum::theta(FieldRef field) { return from_poly(field, UniPoly({0, 1})); }

AlgNum AlgNum::from_poly(FieldRef field, const UniPoly& p) {
  const UniPoly r = UniPoly::divmod(p.with_var("x"), field->minpoly).second;
  std::vector<Rational> c(field->degree, Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
  return AlgNum(std::move(field), std::move(c));
}

bool AlgNum::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  check_same_field(a, b);
  AlgNum r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  check_same_field(a, b);
  AlgNum r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  check_same_field(a, b);
  return AlgNum::from_poly(a.field_, a.to_poly("x") * b.to_poly("x"));
}

AlgNum operator*(const Rational& c, const AlgNum& a) {
  AlgNum r = a;
  for (auto& x : r.coords_) x *= c;
  return r;
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  check_same_field(a, b);
  return a.coords_ == b.coords_;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  auto [g, s, t] = UniPoly::ext_gcd(to_poly("x"), field_->minpoly);
  // g = 1 because the minimal polynomial is irreducible
  return from_poly(field_, (1 / g.coeff(0)) * s);
}

AlgNum AlgNum::pow(unsigned e) const {
  AlgNum r = from_rational(field_, 1), b = *this;
  for (; e; e >>= 1, b = b * b)
    if (e & 1) r = r * b;
  return r;
}

RatMatrix AlgNum::multiplication_matrix() const {
  const int n = field_->degree;
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  AlgNum col = *this;
  const AlgNum th = theta(field_);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.coords_[i];
    col = col * th;
  }
  return m;
}

UniPoly AlgNum::charpoly(const std::string& var) const {
  return characteristic_polynomial(multiplication_matrix(), var);
}

Rational AlgNum::norm() const {
  const UniPoly cp = charpoly();
  return field_->degree % 2 ? -cp.coeff(0) : cp.coeff(0);
}

Rational AlgNum::trace() const {
  Rational t = 0;
  const RatMatrix m = multiplication_matrix();
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

UniPoly AlgNum::minpoly(const std::string& var) const {
  const UniPoly cp = charpoly(var);
  const UniPoly g = UniPoly::gcd(cp, cp.derivative());
  return UniPoly::divmod(cp, g).first.monic();
}

bool AlgNum::is_integral() const {
  const UniPoly m = minpoly();
  return m.is_monic() && m.has_integer_coefficients();
}

UniPoly AlgNum::to_poly(const std::string& var) const { return UniPoly(coords_, var); }

std::string AlgNum::to_string(const std::string& var) const { return to_poly(var).to_string(); }

NormTraceMinpoly norm_trace_minpoly(const AlgNum& a) {
  return {a.norm(), a.trace(), a.minpoly()};
}

Rational discriminant_of_quantities(const FieldRef& field, const std::vector<AlgNum>& xs) {
  const std::size_t n = static_cast<std::size_t>(field->degree);
  if (xs.size() != n)
    throw MathError("expected " + std::to_string(n) + " quantities, got " + std::to_string(xs.size()));
  RatMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = (xs[i] * xs[j]).trace();
  return determinant(g);
}

}  // namespace kron
