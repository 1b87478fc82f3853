#include "kron/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace kron {

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = kron::total_degree(a), db = kron::total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& constant)
    : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace(Monomial(vars_.size(), 0), constant);
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  Monomial m(p.vars_.size(), 0);
  m.at(index) = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) { return variable({name}, 0); }

MultiPoly MultiPoly::constant(const Rational& c) { return MultiPoly({}, c); }

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Monomial m, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (m.size() != p.vars_.size()) throw std::invalid_argument("monomial length mismatch");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && kron::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(vars_.size(), 0)); }

std::optional<std::size_t> MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::uint32_t MultiPoly::degree(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
  return d;
}

std::uint32_t MultiPoly::degree(const std::string& name) const {
  auto i = index_of(name);
  return i ? degree(*i) : 0;
}

std::uint64_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : kron::total_degree(terms_.begin()->first);
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (degree(i) > 0) out.push_back(vars_[i]);
  return out;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree(i) == 0) {
        pos[i] = vars.size();
        continue;
      }
      throw std::invalid_argument("with_vars: variable '" + vars_[i] + "' missing from target");
    }
    pos[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (pos[i] < vars.size()) nm[pos[i]] = m[i];
    out.terms_.emplace(std::move(nm), c);
  }
  return out;
}

MultiPoly MultiPoly::compact() const { return with_vars(support()); }

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) return {*this};
  std::vector<MultiPoly> out(degree(*idx) + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm[*idx] = 0;
    out[m[*idx]].terms_.emplace(std::move(nm), c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs,
                                       const std::string& name) {
  std::vector<std::string> vars{name};
  for (const auto& c : coeffs) vars = merge_vars(vars, c.vars());
  // Keep the coefficients' own ordering when the name is already present.
  if (!coeffs.empty() && coeffs[0].index_of(name)) vars = merge_vars(coeffs[0].vars(), vars);
  MultiPoly out(vars);
  const std::size_t idx = *out.index_of(name);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    MultiPoly c = coeffs[i].with_vars(vars);
    for (const auto& [m, v] : c.terms_) {
      Monomial nm = m;
      nm[idx] += static_cast<std::uint32_t>(i);
      out.add_term(nm, v);
    }
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  MultiPoly out(vars_);
  auto idx = index_of(name);
  if (!idx) return out;
  for (const auto& [m, c] : terms_) {
    if (m[*idx] == 0) continue;
    Monomial nm = m;
    nm[*idx] -= 1;
    out.terms_.emplace(std::move(nm), c * m[*idx]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  auto idx = index_of(name);
  if (!idx) return *this;
  auto coeffs = coefficients_in(name);
  // Horner in the substituted value.
  MultiPoly acc(merge_vars(vars_, value.vars()));
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc *= value;
    acc += coeffs[i];
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rational& value) const {
  auto idx = index_of(name);
  if (!idx) return *this;
  MultiPoly out(vars_);
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[*idx]) powers.push_back(powers.back() * value);
    Monomial nm = m;
    nm[*idx] = 0;
    out.add_term(nm, c * powers[m[*idx]]);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= kron::pow(point[i], m[i]);
    sum += t;
  }
  return sum;
}

bool MultiPoly::all_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

Integer MultiPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [m, c] : terms_) l = lcm(l, c.get_den());
  return l;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    *this = with_vars(vars);
    return *this += o.with_vars(vars);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vars = merge_vars(a.vars_, b.vars_);
    return a.with_vars(vars) * b.with_vars(vars);
  }
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  Monomial m(a.vars_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merge_vars(a.vars_, b.vars_);
  return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (kron::total_degree(m) == 0 || a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw MathError("division by zero polynomial");
  auto vars = merge_vars(p.vars(), q.vars());
  MultiPoly r = p.with_vars(vars);
  const MultiPoly d = q.with_vars(vars);
  MultiPoly quot(vars);
  const Monomial& lm = d.leading_monomial();
  const Rational& lc = d.leading_coefficient();
  Monomial shift(vars.size());
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (rm[i] < lm[i]) return std::nullopt;
      shift[i] = rm[i] - lm[i];
    }
    const Rational c = r.leading_coefficient() / lc;
    quot.add_term(shift, c);
    for (const auto& [m, v] : d.terms()) {
      Monomial nm(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) nm[i] = m[i] + shift[i];
      r.add_term(nm, -c * v);
    }
  }
  return quot;
}

// ------------------------------------------------------------------ UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::from_integers(const std::vector<Integer>& coeffs, std::string var) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return UniPoly(std::move(c), std::move(var));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
  for (const auto& v : p.support())
    if (v != var) throw MathError("polynomial is not univariate in " + var);
  auto coeffs = p.coefficients_in(var);
  std::vector<Rational> c;
  for (const auto& k : coeffs) c.push_back(k.constant_term());
  return UniPoly(std::move(c), var);
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool UniPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

std::vector<Integer> UniPoly::integer_coefficients() const {
  std::vector<Integer> out;
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) throw MathError("polynomial has non-integer coefficients");
    out.push_back(c.get_num());
  }
  return out;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

UniPoly UniPoly::with_var(std::string v) const { return UniPoly(coeffs_, std::move(v)); }

MultiPoly UniPoly::to_multipoly() const {
  MultiPoly p({var_});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p.add_term(Monomial{static_cast<std::uint32_t>(i)}, coeffs_[i]);
  return p;
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c), a.var_);
}

UniPoly operator*(const Rational& k, const UniPoly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& v : c) v *= k;
  return UniPoly(std::move(c), a.var_);
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly({}, a.var_), a};
  std::vector<Rational> q(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = r[i] * inv;
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs_[j];
  }
  return {UniPoly(std::move(q), a.var_), UniPoly(std::move(r), a.var_)};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<UniPoly, UniPoly, UniPoly> UniPoly::ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0({Rational(1)}, a.var_), s1({}, a.var_);
  UniPoly t0({}, a.var_), t1({Rational(1)}, a.var_);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational k = 1 / r0.leading();
  return {k * r0, k * s0, k * t0};
}

}  // namespace kron
