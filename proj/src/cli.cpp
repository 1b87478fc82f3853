#include "kron/cli.hpp"

#include "kron/class_group.hpp"
#include "kron/divisor.hpp"
#include "kron/elimination.hpp"
#include "kron/factor.hpp"
#include "kron/galois.hpp"
#include "kron/parser.hpp"
#include "kron/poly_algorithms.hpp"
#include "kron/residue.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace kron::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int max_degree = 4;
  int max_vars = 3;
  std::string minpoly;
  std::string p;
  long d = 0;
  std::vector<std::string> inputs;
  std::string file;
};

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json int_list(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

MultiPoly poly_arg(const std::string& s) { return parse_poly(s); }

std::vector<std::string> merged_vars(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> vars;
  for (const auto& p : ps)
    for (const auto& v : p.vars())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

UniPoly uni_arg(const std::string& s) {
  const MultiPoly p = parse_poly(s).compact();
  if (p.nvars() > 1) throw UsageError("expected a univariate polynomial: " + s);
  return UniPoly::from_multipoly(p, p.nvars() ? p.vars()[0] : "x");
}

FieldRef field_arg(const Options& o) {
  if (o.minpoly.empty()) throw UsageError("--minpoly is required");
  return nf_new(uni_arg(o.minpoly));
}

AlgNum element_arg(const FieldRef& k, const std::string& s) {
  const MultiPoly p = parse_poly(s).compact();
  for (const auto& v : p.vars())
    if (v != kTheta) throw UsageError("field elements are polynomials in theta: " + s);
  return AlgNum::from_poly(k, UniPoly::from_multipoly(p, kTheta));
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string perm_string(const Permutation& p) {
  std::string s = "[";
  for (int v : p) s += std::to_string(v);
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- polyring

void cmd_factor(const Options& o, std::ostream& out) {
  const MultiPoly p = poly_arg(o.inputs.at(0));
  const Factorization f = factor_multivariate(p);
  if (o.json) {
    Json fs = Json::array();
    for (const auto& [q, m] : f.factors) fs.push_back({{"factor", q.to_string()}, {"multiplicity", m}});
    out << Json{{"input", p.to_string()}, {"unit", f.unit.get_str()}, {"factors", fs}}.dump(2) << "\n";
    return;
  }
  out << p.to_string() << "\n";
  if (f.unit != 1) out << "unit " << f.unit.get_str() << "\n";
  for (const auto& [q, m] : f.factors) out << "  (" << q.to_string() << ")" << (m > 1 ? "^" + std::to_string(m) : "") << "\n";
  if (f.factors.size() == 1 && f.factors[0].second == 1) out << "irreducible\n";
}

void cmd_gcd(const Options& o, std::ostream& out) {
  MultiPoly g = poly_arg(o.inputs.at(0));
  for (std::size_t i = 1; i < o.inputs.size(); ++i) g = gcd(g, poly_arg(o.inputs[i]));
  if (o.json)
    out << Json{{"gcd", g.to_string()}}.dump(2) << "\n";
  else
    out << g.to_string() << "\n";
}

std::string pick_var(const MultiPoly& p, const Options& o, std::size_t index) {
  if (o.inputs.size() > index) return o.inputs[index];
  const MultiPoly c = p.compact();
  if (c.nvars() == 0) throw UsageError("cannot infer the variable");
  return c.vars()[0];
}

void cmd_resultant(const Options& o, std::ostream& out) {
  if (o.inputs.size() < 2) throw UsageError("resultant needs two polynomials");
  const MultiPoly p = poly_arg(o.inputs[0]), q = poly_arg(o.inputs[1]);
  const std::string var = pick_var(p, o, 2);
  const MultiPoly r = resultant(p, q, var).compact();
  if (o.json)
    out << Json{{"var", var}, {"resultant", r.to_string()}}.dump(2) << "\n";
  else
    out << "Res_" << var << " = " << r.to_string() << "\n";
}

void cmd_disc(const Options& o, std::ostream& out) {
  const MultiPoly p = poly_arg(o.inputs.at(0));
  const std::string var = pick_var(p, o, 1);
  const MultiPoly r = discriminant(p, var).compact();
  if (o.json)
    out << Json{{"var", var}, {"disc", r.to_string()}}.dump(2) << "\n";
  else
    out << "disc_" << var << " = " << r.to_string() << "\n";
}

// -------------------------------------------------------------- elimination

VarietyDecomposition run_decompose(const Options& o) {
  std::vector<MultiPoly> gens;
  for (const auto& s : o.inputs) gens.push_back(poly_arg(s));
  auto vars = merged_vars(gens);
  std::sort(vars.begin(), vars.end());
  EliminationConfig config;
  config.seed = o.seed;
  config.max_degree = o.max_degree;
  config.max_vars = o.max_vars;
  return decompose_variety(gens, vars, config);
}

Json matrix_json(const std::vector<std::vector<Integer>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(int_list(row));
  return a;
}

std::vector<std::string> strings(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void cmd_eliminate(const Options& o, std::ostream& out) {
  const VarietyDecomposition d = run_decompose(o);
  if (o.json) {
    Json parts = Json::array();
    for (const auto& part : d.parts)
      parts.push_back({{"codim", part.codim}, {"resolvent", part.resolvent.to_string()},
                       {"factors", strings(part.factors)}});
    out << Json{{"vars", d.vars}, {"coordinate_change", matrix_json(d.coordinate_change)},
                {"empty", d.empty}, {"parts", parts}, {"residual", strings(d.residual)},
                {"total_resolvent", total_resolvent(d).to_string()}}
               .dump(2)
        << "\n";
    return;
  }
  out << "vars " << join(d.vars, ", ") << "\n";
  out << "coordinate change x = M y, M =";
  for (const auto& row : d.coordinate_change) {
    std::vector<std::string> r;
    for (const auto& z : row) r.push_back(z.get_str());
    out << " [" << join(r, " ") << "]";
  }
  out << "\n";
  if (d.empty) {
    out << "empty variety\n";
    return;
  }
  for (const auto& part : d.parts) {
    out << "codim " << part.codim << ": " << part.resolvent.to_string() << "\n";
    for (const auto& f : part.factors) out << "  factor " << f.to_string() << "\n";
  }
  if (!d.residual.empty()) out << "residual " << join(strings(d.residual), ", ") << "\n";
  out << "total resolvent " << total_resolvent(d).to_string() << "\n";
}

Json component_json(const ComponentParam& c) {
  Json params = Json::array();
  for (const auto& p : c.params)
    params.push_back({{"var", p.var}, {"num", p.num.to_string()}, {"den", p.den.to_string()}});
  return {{"degree", c.degree}, {"phi", c.phi.to_string()}, {"phi_prime", c.phi_prime.to_string()},
          {"params", params}, {"immersed", c.immersed}};
}

void cmd_parametrize(const Options& o, std::ostream& out) {
  const VarietyDecomposition d = run_decompose(o);
  if (o.json) {
    Json parts = Json::array();
    for (const auto& part : d.parts) {
      Json cs = Json::array();
      for (const auto& c : part.components) cs.push_back(component_json(c));
      parts.push_back({{"codim", part.codim}, {"components", cs}});
    }
    out << Json{{"vars", d.vars}, {"coordinate_change", matrix_json(d.coordinate_change)},
                {"empty", d.empty}, {"parts", parts}}
               .dump(2)
        << "\n";
    return;
  }
  if (d.empty) {
    out << "empty variety\n";
    return;
  }
  for (const auto& part : d.parts) {
    out << "codim " << part.codim << "\n";
    for (const auto& c : part.components) {
      out << "  component phi = " << c.phi.to_string() << " (degree " << c.degree << ")"
          << (c.immersed ? " immersed" : "") << "\n";
      for (const auto& p : c.params)
        out << "    " << p.var << " = (" << p.num.to_string() << ") / (" << p.den.to_string() << ")\n";
    }
  }
}

// ------------------------------------------------------------------- galois

void cmd_galois(const Options& o, std::ostream& out) {
  const GaloisResult g = galois_group(uni_arg(o.inputs.at(0)));
  if (o.json) {
    Json elems = Json::array();
    for (const auto& p : g.group) elems.push_back(p);
    out << Json{{"order", g.order}, {"elements", elems}, {"factor_pattern", g.factor_pattern}}.dump(2) << "\n";
    return;
  }
  std::vector<std::string> pat, elems, u;
  for (int k : g.factor_pattern) pat.push_back(std::to_string(k));
  for (const auto& p : g.group) elems.push_back(perm_string(p));
  for (const auto& z : g.u) u.push_back(z.get_str());
  out << "order " << g.order << "\n";
  out << "elements " << join(elems, " ") << "\n";
  out << "resolvent factor degrees " << join(pat, " ") << "\n";
  out << "u = (" << join(u, ", ") << ")\n";
}

void cmd_resolvent(const Options& o, std::ostream& out) {
  const UniPoly f = uni_arg(o.inputs.at(0));
  std::vector<Integer> u;
  for (int i = 1; i <= f.degree(); ++i) u.push_back(i);
  const UniPoly r = resolvent_total_symmetric(f, u);
  std::vector<std::string> us;
  for (const auto& z : u) us.push_back(z.get_str());
  if (o.json)
    out << Json{{"u", int_list(u)}, {"resolvent", r.to_string()}}.dump(2) << "\n";
  else
    out << "u = (" << join(us, ", ") << ")\n" << r.to_string() << "\n";
}

void cmd_genus_disc(const Options& o, std::ostream& out) {
  int n = 3;
  if (!o.inputs.empty()) {
    try {
      n = std::stoi(o.inputs[0]);
    } catch (const std::exception&) {
      throw UsageError("genus-disc expects n = 2 or 3");
    }
  }
  const GenusDiscIdentity id = genus_disc_identity(n);
  Json j{{"n", n}, {"equal", id.equal}};
  std::string special;
  if (!o.minpoly.empty()) {
    const UniPoly f = uni_arg(o.minpoly);
    if (f.degree() != n) throw UsageError("--minpoly must have degree n");
    const Rational lhs = specialize_symmetric(id.lhs, f), rhs = specialize_symmetric(id.rhs, f);
    j["minpoly"] = f.to_string();
    j["det_squared"] = lhs.get_str();
    j["disc_power"] = rhs.get_str();
    special = "at " + f.to_string() + ": det^2 = " + lhs.get_str() + ", D^" + std::to_string(n == 2 ? 1 : 3) +
              " = " + rhs.get_str() + "\n";
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return;
  }
  out << "det^2 = D^" << (n == 2 ? 1 : 3) << " for n = " << n << ": " << (id.equal ? "true" : "false") << "\n";
  out << special;
}

// ----------------------------------------------------------------- divisors

Json prime_divisor_json(const PrimeDivisor& d) {
  return {{"p", to_json(d.p)}, {"f", d.f}, {"local_factor", int_list(d.local_factor.integer_coefficients())},
          {"certified", d.certified}};
}

void cmd_divisor_gcd(const Options& o, std::ostream& out) {
  const FieldRef k = field_arg(o);
  std::vector<AlgNum> xs;
  for (const auto& s : o.inputs) xs.push_back(element_arg(k, s));
  if (xs.empty()) throw UsageError("divisor-gcd needs at least one element");
  const DivisorForm d = gcd_divisor(xs);
  const FormNorm n = form_norm_content_fm(d);
  if (o.json) {
    out << Json{{"form", d.to_string()}, {"norm", n.norm.to_string()}, {"content", to_json(n.content)},
                {"fm", n.fm.to_string()}, {"unit", is_unit(d)}}
               .dump(2)
        << "\n";
    return;
  }
  out << "divisor " << d.to_string() << "\n";
  out << "norm " << n.norm.to_string() << "\n";
  out << "content " << n.content.get_str() << "\n";
  out << "unit " << (is_unit(d) ? "yes" : "no") << "\n";
}

void cmd_divides(const Options& o, std::ostream& out) {
  const FieldRef k = field_arg(o);
  if (o.inputs.size() != 2) throw UsageError("divides needs two forms D and G");
  const DivisorForm d(k, parse_poly(o.inputs[0])), g(k, parse_poly(o.inputs[1]));
  const DivisibilityReport r = divisibility(d, g);
  if (o.json) {
    out << Json{{"divides", r.divides()}, {"coefficient_test", r.coefficient_test},
                {"characteristic_test", r.characteristic_test}, {"quotient", r.quotient.to_string()}}
               .dump(2)
        << "\n";
    return;
  }
  out << (r.divides() ? "divides" : "does not divide") << "\n";
  out << "coefficient test " << (r.coefficient_test ? "integral" : "not integral") << "\n";
  out << "characteristic test " << (r.characteristic_test ? "integral" : "not integral") << "\n";
  out << "G*Fm(D)/D = " << r.quotient.to_string() << "\n";
}

void cmd_prime_decomp(const Options& o, std::ostream& out) {
  const FieldRef k = field_arg(o);
  if (o.p.empty()) throw UsageError("--p is required");
  Integer p;
  if (p.set_str(o.p, 10) != 0) throw UsageError("--p expects an integer");
  const PrimeDecomposition d = decompose_prime(k, p);
  if (o.json) {
    Json ds = Json::array();
    for (const auto& x : d.divisors) ds.push_back(prime_divisor_json(x));
    out << Json{{"p", to_json(p)}, {"divisors", ds}, {"product_equivalent", d.product_equivalent},
                {"pairwise_units", d.pairwise_units}}
               .dump(2)
        << "\n";
    return;
  }
  out << d.divisors.size() << " prime divisor" << (d.divisors.size() == 1 ? "" : "s") << " above " << p.get_str()
      << "\n";
  for (const auto& x : d.divisors)
    out << "  f=" << x.f << " local factor " << x.local_factor.with_var(kTheta).to_string() << ", form "
        << x.form.to_string() << (x.certified ? ", certified" : "") << "\n";
  for (const auto& b : d.bezout)
    out << "  bezout " << b.i + 1 << "," << b.j + 1 << ": (" << b.a.with_var(kTheta).to_string() << ")*f" << b.i + 1 << " + ("
        << b.b.with_var(kTheta).to_string() << ")*f" << b.j + 1 << " = 1 + " << p.get_str() << "*("
        << b.e.with_var(kTheta).to_string() << ")\n";
  out << "product equivalent to " << p.get_str() << ": " << (d.product_equivalent ? "yes" : "no") << "\n";
  out << "pairwise coprime: " << (d.pairwise_units ? "yes" : "no") << "\n";
}

void cmd_ramified(const Options& o, std::ostream& out) {
  const FieldRef k = field_arg(o);
  const auto ps = ramified_primes(k);
  if (o.json) {
    out << Json{{"disc", to_json(k->disc)}, {"ramified", int_list(ps)}}.dump(2) << "\n";
    return;
  }
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.get_str());
  out << "disc " << k->disc.get_str() << "\n";
  out << "ramified " << (s.empty() ? "none" : join(s, " ")) << "\n";
}

void cmd_class_number(const Options& o, std::ostream& out) {
  const ClassGroupResult r = class_number_imag_quadratic(Integer(o.d));
  if (o.json) {
    out << Json{{"d", o.d}, {"h", r.h}, {"generators", r.generators}}.dump(2) << "\n";
    return;
  }
  out << "d = " << o.d << ", disc " << r.disc.get_str() << ", bound " << r.bound.get_str() << "\n";
  out << "h = " << r.h << "\n";
  for (const auto& c : r.classes)
    out << "  class " << c.representative << " (norm " << c.norm.get_str() << ") order " << c.order << "\n";
  out << "generators " << (r.generators.empty() ? "none" : join(r.generators, ", ")) << "\n";
}

// ----------------------------------------------------------------- residues

Rational rational_arg(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: " + s);
  }
  if (r.get_den() == 0) throw UsageError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw UsageError(std::string("problem file needs \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& x : j[key]) {
    if (!x.is_string()) throw UsageError(std::string("\"") + key + "\" entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

PointSet point_set_arg(const Json& j) {
  std::vector<MultiPoly> system;
  for (const auto& s : string_list(j, "system")) system.push_back(poly_arg(s));
  const auto vars = j.contains("vars") ? string_list(j, "vars") : merged_vars(system);
  if (!j.contains("points") || !j["points"].is_array()) throw UsageError("problem file needs \"points\"");
  std::vector<std::vector<Rational>> points;
  for (const auto& pt : j["points"]) {
    if (!pt.is_array()) throw UsageError("points must be arrays");
    std::vector<Rational> p;
    for (const auto& c : pt) p.push_back(rational_arg(c.is_string() ? c.get<std::string>() : c.dump()));
    points.push_back(p);
  }
  return make_point_set(system, vars, points);
}

Json problem_arg(const Options& o) {
  try {
    return Json::parse(read_file(o.file));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

void cmd_residue(const Options& o, std::ostream& out) {
  const Json j = problem_arg(o);
  const PointSet ps = point_set_arg(j);
  if (!j.contains("numerator") || !j["numerator"].is_string()) throw UsageError("problem file needs \"numerator\"");
  const JacobiSum s = jacobi_sum(ps, parse_poly(j["numerator"].get<std::string>()));
  if (o.json) {
    out << Json{{"value", s.value.get_str()}, {"generic_degree", s.generic_degree},
                {"jacobian_degree", s.jacobian_degree}, {"warnings", s.warnings}}
               .dump(2)
        << "\n";
    return;
  }
  out << "sum F/J = " << s.value.get_str() << "\n";
  out << "generic degree " << s.generic_degree << ", jacobian degree " << s.jacobian_degree << "\n";
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
}

void cmd_euler_trace(const Options& o, std::ostream& out) {
  const UniPoly f = uni_arg(o.inputs.at(0));
  int lo = 0, hi = f.degree() - 1;
  if (o.inputs.size() > 1) {
    try {
      lo = hi = std::stoi(o.inputs[1]);
    } catch (const std::exception&) {
      throw UsageError("euler-trace index must be an integer");
    }
  }
  Json traces = Json::array();
  for (int i = lo; i <= hi; ++i) {
    const Rational t = euler_trace(f, i);
    if (o.json)
      traces.push_back({{"i", i}, {"trace", t.get_str()}});
    else
      out << "Tr(x^" << i << "/f') = " << t.get_str() << "\n";
  }
  if (o.json) out << Json{{"f", f.to_string()}, {"traces", traces}}.dump(2) << "\n";
}

void cmd_interpolate(const Options& o, std::ostream& out) {
  const Json j = problem_arg(o);
  const PointSet ps = point_set_arg(j);
  std::vector<Rational> values;
  for (const auto& s : string_list(j, "values")) values.push_back(rational_arg(s));
  const MultiPoly p = interpolate_zero_dim(ps, values);
  if (o.json)
    out << Json{{"interpolant", p.to_string()}}.dump(2) << "\n";
  else
    out << p.to_string() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in Kronecker's arithmetic theory of algebraic magnitudes", "kron-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit a single JSON document");
  app.add_option("--seed", o.seed, "seed for every randomized choice")->capture_default_str();

  using Handler = void (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    commands.emplace_back(s, h);
    return s;
  };
  auto with_inputs = [&](CLI::App* s, const char* what, bool required = true) {
    auto* opt = s->add_option("inputs", o.inputs, what);
    if (required) opt->required();
    return s;
  };
  auto with_field = [&](CLI::App* s) { s->add_option("--minpoly", o.minpoly, "minimal polynomial of theta")->required(); };
  auto with_bounds = [&](CLI::App* s) {
    s->add_option("--max-degree", o.max_degree, "largest generator degree")->capture_default_str();
    s->add_option("--max-vars", o.max_vars, "largest number of variables")->capture_default_str();
  };

  with_inputs(sub("factor", "factor a polynomial over Q", cmd_factor), "polynomial");
  with_inputs(sub("gcd", "gcd of polynomials", cmd_gcd), "polynomials");
  with_inputs(sub("resultant", "resultant of P and Q in VAR", cmd_resultant), "P Q [VAR]");
  with_inputs(sub("disc", "discriminant of P in VAR", cmd_disc), "P [VAR]");
  with_bounds(with_inputs(sub("eliminate", "decompose the variety of the generators", cmd_eliminate), "generators"));
  with_bounds(with_inputs(sub("parametrize", "parametrize the components of the variety", cmd_parametrize),
                          "generators"));
  with_inputs(sub("galois", "Galois group of an irreducible monic polynomial", cmd_galois), "polynomial");
  with_inputs(sub("resolvent", "total symmetric resolvent with u = (1, ..., n)", cmd_resolvent), "polynomial");
  auto* genus = with_inputs(sub("genus-disc", "check det^2 = D^(n!/2)", cmd_genus_disc), "n", false);
  genus->add_option("--minpoly", o.minpoly, "specialize at the roots of this polynomial");
  auto* dg = with_inputs(sub("divisor-gcd", "divisor x1 u1 + ... + xk uk", cmd_divisor_gcd), "elements in theta");
  with_field(dg);
  auto* dv = with_inputs(sub("divides", "decide whether D divides G", cmd_divides), "D G");
  with_field(dv);
  auto* pd = sub("prime-decomp", "prime divisors above p", cmd_prime_decomp);
  with_field(pd);
  pd->add_option("--p", o.p, "rational prime")->required();
  with_field(sub("ramified", "primes dividing the discriminant", cmd_ramified));
  sub("class-number", "class group of Q(sqrt(d)), d < 0", cmd_class_number)
      ->add_option("-d", o.d, "squarefree d in [-200, -1]")
      ->required();
  sub("residue", "Jacobi sum over a point set (JSON problem file)", cmd_residue)
      ->add_option("file", o.file, "problem file")
      ->required();
  with_inputs(sub("euler-trace", "traces Tr(x^i / f'(x))", cmd_euler_trace), "f [i]");
  sub("interpolate", "interpolate values on a point set (JSON problem file)", cmd_interpolate)
      ->add_option("file", o.file, "problem file")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    for (const auto& [s, h] : commands)
      if (s->parsed()) h(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const std::out_of_range&) {
    err << "usage error: missing argument\n";
    return kUsageError;
  }
  return kOk;
}

}  // namespace kron::cli
