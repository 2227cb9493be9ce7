#pragma once

#include <chrono>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocurve/gluing.hpp"
#include "monocurve/groebner.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

/// Size guard against Gröbner blowup (the CLI's --no-limits lifts it), plus
/// the deadline and tracing switches forwarded to every Buchberger run.
struct IdealOptions {
  std::size_t max_variables = 8;
  Integer max_generator = 5000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Record the pair log of the final degrevlex run.
  bool trace = false;

  static IdealOptions unlimited() {
    IdealOptions out;
    out.max_variables = kMaxVariables - 3;
    out.max_generator = std::numeric_limits<Exponent>::max();
    return out;
  }
};

void check_limits(std::span<const Integer> weights, const IdealOptions& limits);

/// Defining ideal of the affine monomial curve x_i -> t^(n_i), as a reduced
/// degrevlex basis over x1 > ... > xr.
struct MonomialCurveIdeal {
  NumericalSemigroup semigroup;
  GroebnerBasis basis;

  const VariableSet& ambient() const { return basis.ring->vars; }
};

/// Defining ideal of the projective closure over x1 > ... > xr > x0.
struct ProjectiveCurveIdeal {
  MonomialCurveIdeal affine;
  GroebnerBasis basis;
  bool homogeneous = false;

  const VariableSet& ambient() const { return basis.ring->vars; }
};

/// Kernel of x_i -> t^(weights[i]) over the given variables: elimination of t
/// in a block order, then a second run for the reduced degrevlex basis.
GroebnerBasis toric_kernel(std::span<const Integer> weights, const VariableSet& vars,
                           const IdealOptions& limits = {});

MonomialCurveIdeal defining_ideal(const NumericalSemigroup& semigroup, const IdealOptions& limits = {});

/// Termwise homogenization with x0 appended as the least variable.
ProjectiveCurveIdeal projective_closure_ideal(const MonomialCurveIdeal& ideal);

/// Independent route to the projective ideal: eliminates s and t from
/// x_i - t^(n_i) s^(n_r - n_i), x0 - s^(n_r), then reduces under
/// degrevlex x1 > ... > xr > x0.
GroebnerBasis projective_ideal_by_elimination(const NumericalSemigroup& semigroup,
                                              const IdealOptions& limits = {});

/// G1 u G2 u {rho} over x1..xl, y1..yk, rho = x^b - y^a, together with the
/// Buchberger run that confirms (or completes) it as a Gröbner basis.
struct GluedIdeal {
  GluedSemigroup glued;
  RingPtr ring;
  std::vector<Polynomial> generators;
  Polynomial rho;
  GroebnerBasis basis;

  /// Buchberger appended no remainder to G1 u G2 u {rho}.
  bool input_was_groebner() const { return basis.stats.added == 0; }
};

GluedIdeal glued_ideal(const GluingSpec& spec, const MonomialCurveIdeal& left,
                       const MonomialCurveIdeal& right, const BuchbergerOptions& options = {});

/// True iff G1 u G2 u {rho} already satisfies Buchberger's criterion under
/// degrevlex x1 > ... > xl > y1 > ... > yk. Requires a star spec.
bool star_basis_check(const GluingSpec& spec, const MonomialCurveIdeal& left,
                      const MonomialCurveIdeal& right);

/// Moves f into `target`, sending variable i of f's ring to index_map[i].
Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                           std::span<const std::size_t> index_map);

}  // namespace monocurve
