#pragma once

#include "kron/factor.hpp"
#include "kron/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kron {

struct EliminationConfig {
  std::uint64_t seed = 1;
  int max_vars = 3;
  int max_degree = 4;
};

struct EliminationStep {
  std::vector<MultiPoly> generators;
  bool involved = true;  // false when no generator involves the variable
  bool unit = false;     // a nonzero constant appeared
};

/// Coefficients, with respect to the U/V monomials, of
/// Res_var(sum U_i K_i, sum V_i K_i), interreduced (normalized, duplicates
/// and multiples removed).
EliminationStep eliminate_step(const std::vector<MultiPoly>& generators, const std::string& var);

/// Drop zeros, normalize, remove duplicates and multiples; a nonzero
/// constant collapses the list to {1}.
std::vector<MultiPoly> interreduce(const std::vector<MultiPoly>& gens);

/// x_i = phi_i / phi' on the component {phi = 0}.
struct Parameter {
  std::string var;
  MultiPoly num;
  MultiPoly den;
};

struct ComponentParam {
  int degree = 0;              // d = degree of the u-resolvent in X
  MultiPoly phi;               // irreducible projection equation
  MultiPoly phi_prime;         // d phi / d x^(r)
  std::vector<Parameter> params;
  bool immersed = false;       // parametrization identity failed
};

struct VarietyPart {
  int codim = 0;
  MultiPoly resolvent;                 // squarefree, in the changed coordinates
  std::vector<MultiPoly> factors;
  std::vector<ComponentParam> components;
};

struct VarietyDecomposition {
  std::vector<std::string> vars;
  std::vector<std::vector<Integer>> coordinate_change;  // x = M y, names reused for y
  std::vector<VarietyPart> parts;                       // increasing codim
  /// Generators of the components of codim >= 2, in the original
  /// coordinates (the input divided by the codim-1 resolvent).
  std::vector<MultiPoly> residual;
  bool empty = false;
  int retries = 0;
};

/// Kronecker's elimination loop in generic coordinates.  Throws MathError
/// when the bounds in `config` are exceeded.
VarietyDecomposition decompose_variety(const std::vector<MultiPoly>& generators,
                                       const std::vector<std::string>& vars,
                                       const EliminationConfig& config = {});

/// Product of the partial resolvents (1 if there are none).
MultiPoly total_resolvent(const VarietyDecomposition& d);

/// The u-generic resolvent Phi(X, u_r..u_{n-1}, x_0..x_{r-1}) of the
/// dimension-r components, with X = sum_{i>=r} u_i x_i.  Variables of the
/// result are "X", "u<i>" and `vars[0..r-1]`.
MultiPoly u_resolvent(const std::vector<MultiPoly>& generators, const std::vector<std::string>& vars,
                      int dimension);

/// Macaulay extraction from the u-resolvent: one ComponentParam per
/// irreducible factor of phi.  Components whose parametrization does not
/// satisfy every generator are returned with immersed = true.
std::vector<ComponentParam> parametrize_components(const std::vector<MultiPoly>& generators,
                                                   const std::vector<std::string>& vars,
                                                   int dimension);

}  // namespace kron
