#include "kron/elimination.hpp"

#include "kron/poly_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace kron {

namespace {

const std::string kX = "Xres";
std::string u_name(std::size_t i) { return "ures" + std::to_string(i); }

bool reserved(const std::string& v) {
  return v == kX || v.rfind("ures", 0) == 0 || v.rfind("Uelim", 0) == 0 || v.rfind("Velim", 0) == 0;
}

// Same monomials, new variable names.
MultiPoly rename(const MultiPoly& p, const std::vector<std::string>& names) {
  MultiPoly out(names);
  for (const auto& [m, c] : p.terms()) out.add_term(m, c);
  return out;
}

// Simultaneous substitution vars[i] := images[i].
MultiPoly substitute_all(const MultiPoly& p, const std::vector<std::string>& vars,
                         const std::vector<MultiPoly>& images) {
  const MultiPoly q = p.with_vars(vars);
  std::vector<std::string> tmp;
  for (const auto& v : vars) tmp.push_back("@" + v);
  MultiPoly r = rename(q, tmp);
  for (std::size_t i = 0; i < vars.size(); ++i) r = r.substitute(tmp[i], images[i]);
  return r.with_vars(vars);
}

// Coefficients of p with respect to the monomials in `names`.
std::vector<MultiPoly> coefficients_wrt(const MultiPoly& p, const std::vector<std::string>& names,
                                        const std::vector<std::string>& keep) {
  std::vector<bool> sel(p.nvars(), false);
  for (const auto& v : names)
    if (auto i = p.index_of(v)) sel[*i] = true;
  std::map<Monomial, MultiPoly> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial key(m.size(), 0), rest = m;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (sel[i]) {
        key[i] = m[i];
        rest[i] = 0;
      }
    groups.try_emplace(key, MultiPoly(p.vars())).first->second.add_term(rest, c);
  }
  std::vector<MultiPoly> out;
  for (const auto& [k, c] : groups) out.push_back(c.with_vars(keep));
  return out;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("expected exact division failed");
  return *r;
}

}  // namespace

std::vector<MultiPoly> interreduce(const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> list;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const MultiPoly n = normalize(g);
    if (n.is_constant()) return {MultiPoly(g.vars(), Rational(1))};
    if (std::find(list.begin(), list.end(), n) == list.end()) list.push_back(n);
  }
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < list.size() && !redundant; ++j)
      redundant = i != j && list[j].total_degree() < list[i].total_degree() &&
                  divide_exact(list[i], list[j]).has_value();
    if (!redundant) out.push_back(list[i]);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

EliminationStep eliminate_step(const std::vector<MultiPoly>& generators, const std::string& var) {
  EliminationStep out;
  std::vector<std::string> vars;
  for (const auto& g : generators) vars = merge_vars(vars, g.vars());
  out.involved = false;
  for (const auto& g : generators) out.involved = out.involved || g.degree(var) > 0;
  if (!out.involved) {
    out.generators = generators;
    return out;
  }
  if (generators.size() == 1) return out;  // a single equation projects onto everything
  std::vector<std::string> uv;
  MultiPoly a(vars), b(vars);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const std::string un = "Uelim" + std::to_string(i + 1), vn = "Velim" + std::to_string(i + 1);
    uv.push_back(un);
    uv.push_back(vn);
    a += MultiPoly::variable(un) * generators[i];
    b += MultiPoly::variable(vn) * generators[i];
  }
  const MultiPoly r = resultant(a, b, var);
  out.generators = interreduce(coefficients_wrt(r, uv, vars));
  out.unit = out.generators.size() == 1 && out.generators[0].is_constant();
  return out;
}

namespace {

// Remove the factor depending only on the u's: divide by the content with
// respect to the geometric variables.
MultiPoly strip_u_content(const MultiPoly& p, const std::vector<std::string>& geometric) {
  if (p.is_zero()) return p;
  const MultiPoly c = content_in(p, geometric);
  return normalize(exact_div(p, c));
}

bool involves_any(const MultiPoly& p, const std::vector<std::string>& names) {
  for (const auto& v : names)
    if (p.degree(v) > 0) return true;
  return false;
}

// p with u-exponents exactly `target` (indexed by u names), u's removed.
MultiPoly u_coefficient(const MultiPoly& p, const std::map<std::string, std::uint32_t>& target,
                        const std::vector<std::string>& unames, const std::vector<std::string>& keep) {
  std::vector<std::pair<std::size_t, std::uint32_t>> want;
  for (const auto& u : unames) {
    auto it = target.find(u);
    if (auto i = p.index_of(u)) want.emplace_back(*i, it == target.end() ? 0 : it->second);
  }
  MultiPoly out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    bool match = true;
    for (const auto& [i, e] : want) match = match && m[i] == e;
    if (!match) continue;
    Monomial rest = m;
    for (const auto& [i, e] : want) rest[i] = 0;
    out.add_term(rest, c);
  }
  return out.with_vars(keep);
}

// g(x_i = num_i / den for the dependent variables) * den^D, D the largest
// degree of g in the dependent variables jointly.
MultiPoly clear_substitution(const MultiPoly& g, const std::vector<std::string>& vars,
                             const std::vector<Parameter>& params, const MultiPoly& den) {
  std::vector<std::size_t> idx;
  for (const auto& p : params) idx.push_back(*g.with_vars(vars).index_of(p.var));
  const MultiPoly gv = g.with_vars(vars);
  std::uint32_t top = 0;
  for (const auto& [m, c] : gv.terms()) {
    std::uint32_t e = 0;
    for (auto i : idx) e += m[i];
    top = std::max(top, e);
  }
  MultiPoly out(vars);
  for (const auto& [m, c] : gv.terms()) {
    Monomial rest = m;
    std::uint32_t e = 0;
    MultiPoly term(vars, c);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      e += m[idx[k]];
      term *= params[k].num.with_vars(vars).pow(m[idx[k]]);
      rest[idx[k]] = 0;
    }
    term *= MultiPoly::monomial(vars, rest, 1) * den.with_vars(vars).pow(top - e);
    out += term;
  }
  return out;
}

Parameter reduced_parameter(const std::string& var, const MultiPoly& num, const MultiPoly& den) {
  MultiPoly n = num, d = den;
  if (!n.is_zero()) {
    const MultiPoly g = gcd(n, d);
    n = exact_div(n, g);
    d = exact_div(d, g);
  } else {
    d = MultiPoly(d.vars(), Rational(1));
  }
  // integer numerator and denominator without common content, positive
  // leading coefficient in the denominator
  const Integer l = lcm(n.denominator_lcm(), d.denominator_lcm());
  n *= Rational(l);
  d *= Rational(l);
  Integer c = content_primitive(d).content;
  if (!n.is_zero()) c = gcd(c, content_primitive(n).content);
  Rational scale = make_rational(1, c);
  if (d.leading_coefficient() < 0) scale = -scale;
  return {var, n * scale, d * scale};
}

}  // namespace

MultiPoly u_resolvent(const std::vector<MultiPoly>& generators, const std::vector<std::string>& vars,
                      int dimension) {
  const std::size_t n = vars.size(), r = static_cast<std::size_t>(dimension);
  if (r >= n) throw MathError("component dimension must be below the number of variables");
  std::vector<std::string> unames, geometric = vars;
  for (std::size_t i = r; i < n; ++i) unames.push_back(u_name(i));
  geometric.push_back(kX);
  std::vector<std::string> all = geometric;
  all.insert(all.end(), unames.begin(), unames.end());

  // x_r = (X - sum_{i>r} u_i x_i) / u_r, homogenized by u_r
  MultiPoly numer = MultiPoly::variable(kX).with_vars(all);
  for (std::size_t i = r + 1; i < n; ++i)
    numer -= MultiPoly::variable(all, n + 1 + (i - r)) * MultiPoly::variable(all, i);
  const MultiPoly ur = MultiPoly::variable(all, n + 1);

  std::vector<MultiPoly> gens;
  for (const auto& g : generators) {
    const auto coeffs = g.with_vars(all).coefficients_in(vars[r]);
    const std::size_t deg = coeffs.size() - 1;
    MultiPoly h(all);
    for (std::size_t j = 0; j <= deg; ++j) h += coeffs[j] * numer.pow(j) * ur.pow(deg - j);
    gens.push_back(strip_u_content(h, geometric));
  }
  gens = interreduce(gens);
  for (std::size_t j = n - 1; j > r; --j) {
    if (gens.empty() || (gens.size() == 1 && gens[0].is_constant())) return MultiPoly(all, Rational(1));
    MultiPoly f(all);
    for (const auto& g : gens) f = gcd(f, g);
    const MultiPoly fg = strip_u_content(f, geometric);
    if (!fg.is_constant())
      for (auto& g : gens) g = exact_div(g, fg);
    const EliminationStep step = eliminate_step(gens, vars[j]);
    gens.clear();
    for (const auto& g : step.generators) gens.push_back(strip_u_content(g.with_vars(all), geometric));
    gens = interreduce(gens);
  }
  if (gens.empty()) return MultiPoly(all, Rational(1));
  MultiPoly f(all);
  for (const auto& g : gens) f = gcd(f, g);
  const MultiPoly phi = strip_u_content(f, geometric);
  if (phi.is_constant()) return MultiPoly(all, Rational(1));
  return squarefree_part(phi);
}

namespace {

using Factorer = std::function<std::vector<MultiPoly>(const MultiPoly&)>;

std::vector<MultiPoly> plain_factors(const MultiPoly& p) {
  std::vector<MultiPoly> out;
  for (const auto& [q, m] : factor_multivariate(p).factors) out.push_back(q);
  return out;
}

std::vector<ComponentParam> parametrize_with(const std::vector<MultiPoly>& generators,
                                             const std::vector<std::string>& vars, int dimension,
                                             const Factorer& factorer) {
  const MultiPoly big = u_resolvent(generators, vars, dimension);
  std::vector<ComponentParam> out;
  if (big.is_constant()) return out;
  const std::size_t n = vars.size(), r = static_cast<std::size_t>(dimension);
  const std::uint32_t d = big.degree(kX);
  std::vector<std::string> unames;
  for (std::size_t i = r; i < n; ++i) unames.push_back(u_name(i));

  MultiPoly form(big.vars());
  for (std::size_t i = r; i < n; ++i)
    form += MultiPoly::variable(u_name(i)) * MultiPoly::variable(vars[i]);
  const MultiPoly sub = big.substitute(kX, form.with_vars(merge_vars(big.vars(), form.vars())));

  const MultiPoly phi = u_coefficient(sub, {{u_name(r), d}}, unames, vars);
  const MultiPoly phi_prime = phi.derivative(vars[r]);
  std::vector<Parameter> dependent;
  bool consistent = true;
  for (std::size_t i = r + 1; i < n; ++i) {
    const MultiPoly psi = u_coefficient(sub, {{u_name(r), d - 1}, {u_name(i), 1}}, unames, vars);
    const MultiPoly num = MultiPoly::variable(vars, i) * phi_prime - psi;
    for (std::size_t j = r + 1; j < n; ++j) consistent = consistent && num.degree(vars[j]) == 0;
    dependent.push_back({vars[i], num, phi_prime});
  }

  const std::vector<std::string> dep_names(vars.begin() + r + 1, vars.end());
  for (const auto& factor : factorer(phi)) {
    ComponentParam c;
    c.phi = factor;
    c.phi_prime = phi_prime;
    c.degree = static_cast<int>(factor.degree(vars[r]));
    c.immersed = !consistent || c.degree == 0 || divide_exact(phi_prime, factor).has_value();
    if (c.degree == 1) {
      const auto co = factor.coefficients_in(vars[r]);
      c.params.push_back(reduced_parameter(vars[r], -co[0], co[1]));
    }
    for (const auto& p : dependent) c.params.push_back(reduced_parameter(p.var, p.num, p.den));
    if (!c.immersed && !dependent.empty()) {
      for (const auto& g : generators) {
        const MultiPoly h = clear_substitution(g, vars, dependent, phi_prime);
        if (!h.is_zero() && !divide_exact(h, factor)) c.immersed = true;
      }
    } else if (!c.immersed) {
      for (const auto& g : generators)
        if (!g.is_zero() && !divide_exact(g.with_vars(vars), factor)) c.immersed = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<ComponentParam> parametrize_components(const std::vector<MultiPoly>& generators,
                                                   const std::vector<std::string>& vars,
                                                   int dimension) {
  return parametrize_with(generators, vars, dimension, plain_factors);
}

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Unimodular upper-triangular matrix with entries in [-9, 9] above the diagonal.
IntMatrix coordinate_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = static_cast<long>(rng() % 19) - 9;
  }
  return m;
}

IntMatrix inverse_unitriangular(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix inv(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = n; i-- > 0;) {
    inv[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = i + 1; k <= j; ++k) s += m[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

// Images x_i = sum_j m_ij y_j, with the y's named like the x's.
std::vector<MultiPoly> linear_images(const IntMatrix& m, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    MultiPoly e(vars);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0) e += MultiPoly::variable(vars, j) * Rational(m[i][j]);
    out.push_back(e);
  }
  return out;
}

bool monic_in(const MultiPoly& p, const std::string& var) {
  const auto d = p.degree(var);
  return p.coefficients_in(var)[d].is_constant();
}

struct LoopResult {
  std::vector<VarietyPart> parts;
  std::vector<MultiPoly> level_one_residual;  // changed coordinates
  bool unit = false;
  bool degenerate = false;
};

LoopResult run_loop(const std::vector<MultiPoly>& gens, const std::vector<std::string>& vars) {
  LoopResult out;
  const std::size_t n = vars.size();
  std::vector<MultiPoly> current = interreduce(gens);
  for (std::size_t k = n; k-- > 0;) {
    if (current.empty()) break;
    if (current.size() == 1 && current[0].is_constant()) {
      out.unit = true;
      break;
    }
    MultiPoly f(vars);
    for (const auto& g : current) f = gcd(f, g);
    std::vector<MultiPoly> rest;
    for (const auto& g : current) rest.push_back(exact_div(g, f).with_vars(vars));
    if (!f.is_constant()) {
      VarietyPart part;
      part.codim = static_cast<int>(n - k);
      part.resolvent = squarefree_part(f).with_vars(vars);
      out.parts.push_back(std::move(part));
    }
    rest = interreduce(rest);
    if (k == n - 1) out.level_one_residual = rest;
    if (rest.size() == 1 && rest[0].is_constant()) {
      out.unit = true;
      break;
    }
    bool involved = false, monic = false;
    for (const auto& g : rest)
      if (g.degree(vars[k]) > 0) {
        involved = true;
        monic = monic || monic_in(g, vars[k]);
      }
    if (involved && !monic) out.degenerate = true;
    const EliminationStep step = eliminate_step(rest, vars[k]);
    current.clear();
    for (const auto& g : step.generators) current.push_back(g.with_vars(vars));
  }
  current = interreduce(current);
  if (current.size() == 1 && current[0].is_constant()) out.unit = true;
  return out;
}

}  // namespace

VarietyDecomposition decompose_variety(const std::vector<MultiPoly>& generators,
                                       const std::vector<std::string>& vars,
                                       const EliminationConfig& config) {
  if (config.max_vars < 1 || config.max_degree < 1) throw MathError("bounds must be positive");
  if (static_cast<int>(vars.size()) > config.max_vars)
    throw MathError("too many variables: " + std::to_string(vars.size()) + " > " +
                    std::to_string(config.max_vars));
  if (vars.empty()) throw MathError("no variables");
  std::set<std::string> names(vars.begin(), vars.end());
  if (names.size() != vars.size()) throw MathError("duplicate variable names");
  for (const auto& v : vars)
    if (reserved(v)) throw MathError("variable name '" + v + "' is reserved");
  std::vector<MultiPoly> gens;
  for (const auto& g : generators) {
    for (const auto& v : g.support())
      if (!names.count(v)) throw MathError("generator involves undeclared variable '" + v + "'");
    if (static_cast<int>(g.total_degree()) > config.max_degree)
      throw MathError("generator degree " + std::to_string(g.total_degree()) + " exceeds " +
                      std::to_string(config.max_degree));
    gens.push_back(g.with_vars(vars));
  }

  VarietyDecomposition out;
  out.vars = vars;
  const std::size_t n = vars.size();
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.is_zero();
  if (all_zero) {
    out.coordinate_change.assign(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) out.coordinate_change[i][i] = 1;
    VarietyPart whole;
    whole.codim = 0;
    whole.resolvent = MultiPoly(vars);
    out.parts.push_back(whole);
    return out;
  }

  constexpr int kMaxRetries = 8;
  LoopResult loop;
  IntMatrix m;
  std::vector<MultiPoly> changed;
  for (int attempt = 0;; ++attempt) {
    m = coordinate_matrix(n, config.seed + static_cast<std::uint64_t>(attempt));
    changed.clear();
    const auto images = linear_images(m, vars);
    for (const auto& g : gens) changed.push_back(substitute_all(g, vars, images));
    loop = run_loop(changed, vars);
    out.retries = attempt;
    if (!loop.degenerate || attempt == kMaxRetries) break;
  }
  out.coordinate_change = m;
  out.parts = std::move(loop.parts);
  out.empty = out.parts.empty() && loop.unit;

  const auto back = linear_images(inverse_unitriangular(m), vars);
  std::vector<MultiPoly> residual;
  for (const auto& g : loop.level_one_residual) residual.push_back(substitute_all(g, vars, back));
  out.residual = interreduce(residual);

  // Factor in the changed coordinates; when the Kronecker image is too large
  // there, factor the sparser original-coordinate form and map back.
  const auto forward = linear_images(m, vars);
  const Factorer factorer = [&](const MultiPoly& p) {
    try {
      return plain_factors(p);
    } catch (const MathError&) {
      std::vector<MultiPoly> out;
      for (const auto& q : plain_factors(substitute_all(p.with_vars(vars), vars, back)))
        out.push_back(normalize(substitute_all(q, vars, forward)));
      std::sort(out.begin(), out.end(), canonical_less);
      return out;
    }
  };
  for (auto& part : out.parts) {
    part.factors = factorer(part.resolvent);
    const int dim = static_cast<int>(n) - part.codim;
    const std::vector<MultiPoly> source =
        part.codim == 1 ? std::vector<MultiPoly>{part.resolvent} : loop.level_one_residual;
    part.components = parametrize_with(source, vars, dim, factorer);
  }
  return out;
}

MultiPoly total_resolvent(const VarietyDecomposition& d) {
  MultiPoly out(d.vars, Rational(1));
  for (const auto& p : d.parts) out *= p.resolvent;
  return out;
}

}  // namespace kron
