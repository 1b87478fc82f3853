#include "kron/class_group.hpp"
#include "kron/divisor.hpp"
#include "kron/number_field.hpp"

#include <cmath>
#include <map>

namespace kron {

QuadraticOrder::QuadraticOrder(const Integer& d) : d_(d) {
  if (d >= 0) throw MathError("d must be negative");
  for (const auto& p : prime_divisors(-d))
    if (mod(d, p * p) == 0) throw MathError("d must be squarefree");
  if (mod(d, 4) == 1) {
    disc_ = d;
    b_ = -1;
    c_ = (1 - d) / 4;
  } else {
    disc_ = 4 * d;
    b_ = 0;
    c_ = -d;
  }
}

QuadElement QuadraticOrder::multiply(const QuadElement& x, const QuadElement& y) const {
  // theta^2 = -B theta - C
  const Integer t = x.b * y.b;
  return {x.a * y.a - c_ * t, x.a * y.b + x.b * y.a - b_ * t};
}

QuadElement QuadraticOrder::conjugate(const QuadElement& x) const { return {x.a - b_ * x.b, -x.b}; }

Integer QuadraticOrder::norm(const QuadElement& x) const { return x.a * x.a - b_ * x.a * x.b + c_ * x.b * x.b; }

std::string QuadraticOrder::to_string(const QuadElement& x) const {
  if (x.b == 0) return x.a.get_str();
  std::string t = x.b == 1 ? "theta" : x.b == -1 ? "-theta" : x.b.get_str() + "*theta";
  if (x.a == 0) return t;
  return t + (x.a > 0 ? " + " + x.a.get_str() : " - " + Integer(-x.a).get_str());
}

QuadIdeal QuadraticOrder::ideal(const std::vector<QuadElement>& gens) const {
  // Z-span of the generators and their theta multiples, reduced to HNF
  std::vector<QuadElement> vs;
  for (const auto& g : gens) {
    vs.push_back(g);
    vs.push_back(multiply(g, {0, 1}));
  }
  Integer a = 0;
  std::optional<QuadElement> pivot;
  for (const auto& v : vs) {
    if (v.b == 0) {
      a = gcd(a, v.a);
      continue;
    }
    if (!pivot) {
      pivot = v;
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pivot->b.get_mpz_t(), v.b.get_mpz_t());
    const QuadElement next{s * pivot->a + t * v.a, g};
    const Integer u = v.b / g, w = pivot->b / g;
    a = gcd(a, u * pivot->a - w * v.a);
    pivot = next;
  }
  if (!pivot || a == 0) throw MathError("generators do not span a full-rank ideal");
  QuadElement p = *pivot;
  if (p.b < 0) p = {-p.a, -p.b};
  return {abs(a), mod(p.a, abs(a)), p.b};
}

QuadIdeal QuadraticOrder::multiply(const QuadIdeal& i, const QuadIdeal& j) const {
  const QuadElement i1{i.a, 0}, i2{i.b, i.c}, j1{j.a, 0}, j2{j.b, j.c};
  return ideal({multiply(i1, j1), multiply(i1, j2), multiply(i2, j1), multiply(i2, j2)});
}

QuadIdeal QuadraticOrder::conjugate(const QuadIdeal& i) const {
  return ideal({{i.a, 0}, conjugate(QuadElement{i.b, i.c})});
}

bool QuadraticOrder::contains(const QuadIdeal& i, const QuadElement& x) const {
  if (mod(x.b, i.c) != 0) return false;
  const Integer k = x.b / i.c;
  return mod(x.a - k * i.b, i.a) == 0;
}

std::vector<QuadElement> QuadraticOrder::elements_of_norm(const Integer& n) const {
  // 4N = (2x - B y)^2 - disc y^2
  std::vector<QuadElement> out;
  if (n <= 0) return out;
  const Integer neg = -disc_;
  const Integer ymax = isqrt(4 * n / neg);
  for (Integer y = -ymax; y <= ymax; ++y) {
    const Integer s = 4 * n - neg * y * y;
    if (s < 0 || !is_perfect_square(s)) continue;
    const Integer r = isqrt(s);
    for (const Integer& t : {r, Integer(-r)}) {
      const Integer twice = t + b_ * y;
      if (mod(twice, 2) != 0) continue;
      const QuadElement e{twice / 2, y};
      if (out.empty() || !(out.back() == e)) out.push_back(e);
      if (r == 0) break;
    }
  }
  return out;
}

std::optional<QuadElement> QuadraticOrder::principal_generator(const QuadIdeal& i) const {
  for (const auto& e : elements_of_norm(i.norm()))
    if (contains(i, e)) return e;
  return std::nullopt;
}

bool QuadraticOrder::equivalent(const QuadIdeal& i, const QuadIdeal& j) const {
  return principal_generator(multiply(i, conjugate(j))).has_value();
}

bool QuadraticOrder::equivalent_by_quotient(const QuadIdeal& i, const QuadIdeal& j) const {
  for (Integer alpha = 1; alpha <= j.norm(); ++alpha) {
    const Integer num = alpha * alpha * i.norm();
    if (mod(num, j.norm()) != 0) continue;
    const QuadIdeal left = multiply(ideal({{alpha, 0}}), i);
    for (const auto& beta : elements_of_norm(num / j.norm()))
      if (multiply(ideal({beta}), j) == left) return true;
  }
  return false;
}

namespace {

std::string prime_name(const Integer& p, const Integer& r) {
  if (r == 0) return "(" + p.get_str() + ", theta)";
  return "(" + p.get_str() + ", theta - " + r.get_str() + ")";
}

std::string product_name(const std::vector<int>& idx, const std::vector<PrimeIdeal>& primes) {
  if (idx.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t e = k;
    while (e < idx.size() && idx[e] == idx[k]) ++e;
    if (!out.empty()) out += "*";
    out += primes[idx[k]].name;
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  return out;
}

}  // namespace

ClassGroupResult class_number_imag_quadratic(const Integer& d) {
  if (d >= 0 || d < -200) throw MathError("d must satisfy -200 <= d < 0");
  const QuadraticOrder o(d);
  ClassGroupResult out;
  out.d = d;
  out.disc = o.disc();
  const long double root = std::sqrt(static_cast<long double>(Integer(-o.disc()).get_si()));
  out.bound = static_cast<long>(std::ceil(2.0L * root / 3.14159265358979323846264338327950288L));

  const auto mp = o.minpoly();
  const FieldRef field = nf_new(UniPoly::from_integers(mp));
  for (Integer p = 2; p <= out.bound; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (mod(o.disc(), p) == 0) {
      // ramified: the minimal polynomial is a square mod p
      for (Integer r = 0; r < p; ++r)
        if (mod(mp[0] + mp[1] * r + r * r, p) == 0) {
          out.primes.push_back({p, r, 1, true, o.ideal({{p, 0}, {-r, 1}}), prime_name(p, r)});
          break;
        }
      continue;
    }
    for (const auto& pd : decompose_prime(field, p).divisors) {
      if (pd.f == 2) {
        out.primes.push_back({p, 0, 2, false, o.ideal({{p, 0}}), "(" + p.get_str() + ")"});
        continue;
      }
      const Integer r = mod(-pd.local_factor.coeff(0).get_num(), p);
      out.primes.push_back({p, r, 1, false, o.ideal({{p, 0}, {-r, 1}}), prime_name(p, r)});
    }
  }

  // all products of prime ideals with norm <= bound
  std::vector<std::vector<int>> products{{}};
  std::vector<QuadIdeal> ideals{o.unit_ideal()};
  for (std::size_t q = 0; q < products.size(); ++q) {
    const int start = products[q].empty() ? 0 : products[q].back();
    for (int k = start; k < static_cast<int>(out.primes.size()); ++k) {
      const QuadIdeal next = o.multiply(ideals[q], out.primes[k].ideal);
      if (next.norm() > out.bound) continue;
      auto idx = products[q];
      idx.push_back(k);
      products.push_back(idx);
      ideals.push_back(next);
    }
  }
  for (std::size_t q = 0; q < ideals.size(); ++q) {
    out.enumerated.push_back(ideals[q]);
    out.enumerated_names.push_back(product_name(products[q], out.primes));
  }

  auto class_of = [&](const QuadIdeal& i) {
    for (std::size_t c = 0; c < out.classes.size(); ++c)
      if (o.equivalent(i, out.classes[c].ideal)) return static_cast<int>(c);
    return -1;
  };
  for (std::size_t q = 0; q < ideals.size(); ++q)
    if (class_of(ideals[q]) < 0)
      out.classes.push_back({out.enumerated_names[q], ideals[q], ideals[q].norm(), 1});
  out.h = static_cast<int>(out.classes.size());

  out.table.assign(out.h, std::vector<int>(out.h, -1));
  for (int a = 0; a < out.h; ++a)
    for (int b = 0; b < out.h; ++b) {
      out.table[a][b] = class_of(o.multiply(out.classes[a].ideal, out.classes[b].ideal));
      if (out.table[a][b] < 0) throw MathError("a product class has no representative below the bound");
    }
  for (int a = 0; a < out.h; ++a) {
    int x = a, order = 1;
    while (x != 0) {
      x = out.table[x][a];
      ++order;
      if (order > out.h) throw std::logic_error("class order exceeds h");
    }
    out.classes[a].order = order;
  }

  std::vector<bool> reached(out.h, false);
  reached[0] = true;
  for (const auto& pr : out.primes) {
    const int c = class_of(pr.ideal);
    if (reached[c]) continue;
    out.generators.push_back(pr.name);
    // close the reached set under multiplication by the new class
    bool grew = true;
    reached[c] = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < out.h; ++a)
        for (int b = 0; b < out.h; ++b)
          if (reached[a] && reached[b] && !reached[out.table[a][b]]) {
            reached[out.table[a][b]] = true;
            grew = true;
          }
    }
  }
  return out;
}

}  // namespace kron
