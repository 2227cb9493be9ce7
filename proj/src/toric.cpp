#include "monocurve/toric.hpp"

#include <algorithm>
#include <numeric>

namespace monocurve {

void check_limits(std::span<const Integer> weights, const IdealOptions& limits) {
  if (weights.size() > limits.max_variables) {
    fail(ErrorKind::TooLarge, std::to_string(weights.size()) + " generators exceed the limit of " +
                                  std::to_string(limits.max_variables));
  }
  for (Integer w : weights) {
    if (w > limits.max_generator) {
      fail(ErrorKind::TooLarge, "generator " + std::to_string(w) + " exceeds the limit of " +
                                    std::to_string(limits.max_generator));
    }
    if (w > std::numeric_limits<Exponent>::max()) fail(ErrorKind::Overflow, "generator exceeds exponent range");
  }
}

Polynomial remap_variables(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != f.ring()->size()) fail(ErrorKind::AmbientMismatch, "index map does not cover the ring");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.monomial[i] != 0) m.set(index_map[i], m[index_map[i]] + t.monomial[i]);
    }
    terms.push_back(Term{m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

namespace {

// Eliminates the leading `params` variables of `ring` from `generators` and
// returns the reduced degrevlex basis of the intersection over `target`.
GroebnerBasis eliminate(const RingPtr& ring, std::size_t params, const std::vector<Polynomial>& generators,
                        std::vector<std::int64_t> weights, const RingPtr& target,
                        std::vector<std::int64_t> target_weights, const IdealOptions& limits) {
  BuchbergerOptions options;
  options.selection_weights = std::move(weights);
  options.deadline = limits.deadline;
  const GroebnerBasis elimination = buchberger(generators, options);

  std::vector<std::size_t> index_map(ring->size(), 0);
  std::iota(index_map.begin() + static_cast<std::ptrdiff_t>(params), index_map.end(), 0);
  std::vector<Polynomial> kept;
  for (const auto& g : elimination.generators) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < params; ++v) free = free && t.monomial[v] == 0;
    }
    if (free) kept.push_back(remap_variables(g, target, index_map));
  }
  if (kept.empty()) fail(ErrorKind::InternalInconsistency, "elimination produced no relations");

  BuchbergerOptions reduce_options;
  reduce_options.selection_weights = std::move(target_weights);
  reduce_options.deadline = limits.deadline;
  reduce_options.trace = limits.trace;
  return buchberger(kept, reduce_options);
}

Monomial unit(std::size_t nvars, std::size_t var, Integer power = 1) {
  Monomial m(nvars);
  m.set(var, static_cast<Exponent>(power));
  return m;
}

}  // namespace

GroebnerBasis toric_kernel(std::span<const Integer> weights, const VariableSet& vars, const IdealOptions& limits) {
  check_limits(weights, limits);
  if (weights.size() != vars.size()) fail(ErrorKind::AmbientMismatch, "one weight per variable required");
  const std::size_t n = vars.size();
  const RingPtr ring = make_ring(VariableSet({"t"}).concatenated(vars), MonomialOrder::block_elimination(n + 1, 1));
  const RingPtr target = make_ring(vars);

  std::vector<Polynomial> generators;
  std::vector<std::int64_t> selection{1};
  for (std::size_t i = 0; i < n; ++i) {
    generators.push_back(Polynomial::binomial(ring, unit(n + 1, i + 1), unit(n + 1, 0, weights[i])));
    selection.push_back(weights[i]);
  }
  return eliminate(ring, 1, generators, std::move(selection), target,
                   std::vector<std::int64_t>(weights.begin(), weights.end()), limits);
}

MonomialCurveIdeal defining_ideal(const NumericalSemigroup& semigroup, const IdealOptions& limits) {
  const auto& gens = semigroup.generators();
  return MonomialCurveIdeal{semigroup, toric_kernel(gens, VariableSet::indexed("x", gens.size()), limits)};
}

ProjectiveCurveIdeal projective_closure_ideal(const MonomialCurveIdeal& ideal) {
  const auto& basis = ideal.basis;
  const auto& order = basis.ring->order;
  if (order.kind() != MonomialOrder::Kind::Degrevlex || !order.is_least(basis.ring->size() - 1)) {
    fail(ErrorKind::PreconditionViolated, "affine basis must be degrevlex with x_r least, got " + basis.order_descriptor());
  }
  GroebnerBasis closure = homogenize_basis(basis, "x0");
  const bool homogeneous = std::all_of(closure.generators.begin(), closure.generators.end(),
                                       [](const Polynomial& g) { return g.is_homogeneous(); });
  return ProjectiveCurveIdeal{ideal, std::move(closure), homogeneous};
}

GroebnerBasis projective_ideal_by_elimination(const NumericalSemigroup& semigroup, const IdealOptions& limits) {
  const auto& gens = semigroup.generators();
  check_limits(gens, limits);
  const std::size_t r = gens.size();
  const Integer top = semigroup.largest();
  const VariableSet curve = VariableSet::indexed("x", r).appended("x0");
  const std::size_t n = r + 3;  // s, t, x1..xr, x0
  const RingPtr ring = make_ring(VariableSet({"s", "t"}).concatenated(curve), MonomialOrder::block_elimination(n, 2));
  const RingPtr target = make_ring(curve);

  std::vector<Polynomial> generators;
  for (std::size_t i = 0; i < r; ++i) {
    Monomial image = unit(n, 1, gens[i]);
    if (top - gens[i] > 0) image.set(0, static_cast<Exponent>(top - gens[i]));
    generators.push_back(Polynomial::binomial(ring, unit(n, i + 2), image));
  }
  generators.push_back(Polynomial::binomial(ring, unit(n, n - 1), unit(n, 0, top)));

  std::vector<std::int64_t> selection(n, top);
  selection[0] = selection[1] = 1;
  return eliminate(ring, 2, generators, std::move(selection), target, {}, limits);
}

GluedIdeal glued_ideal(const GluingSpec& spec, const MonomialCurveIdeal& left, const MonomialCurveIdeal& right,
                       const BuchbergerOptions& options) {
  if (!(left.semigroup == spec.left) || !(right.semigroup == spec.right)) {
    fail(ErrorKind::SpecMismatch, "ideals do not belong to the gluing's semigroups");
  }
  GluedSemigroup glued = glue(spec);
  const std::size_t l = spec.left.rank();
  const std::size_t k = spec.right.rank();
  const RingPtr ring = make_ring(VariableSet::indexed("x", l).concatenated(VariableSet::indexed("y", k)));

  std::vector<std::size_t> left_map(l);
  std::iota(left_map.begin(), left_map.end(), 0);
  std::vector<std::size_t> right_map(k);
  std::iota(right_map.begin(), right_map.end(), l);

  std::vector<Polynomial> generators;
  for (const auto& f : left.basis.generators) generators.push_back(remap_variables(f, ring, left_map));
  for (const auto& g : right.basis.generators) generators.push_back(remap_variables(g, ring, right_map));

  Monomial xb(l + k);
  Monomial ya(l + k);
  for (std::size_t i = 0; i < l; ++i) xb.set(i, static_cast<Exponent>(spec.bvec[i]));
  for (std::size_t j = 0; j < k; ++j) ya.set(l + j, static_cast<Exponent>(spec.avec[j]));
  Polynomial rho = Polynomial::binomial(ring, xb, ya);
  generators.push_back(rho);

  GroebnerBasis basis = buchberger(generators, options);
  return GluedIdeal{std::move(glued), ring, std::move(generators), std::move(rho), std::move(basis)};
}

bool star_basis_check(const GluingSpec& spec, const MonomialCurveIdeal& left, const MonomialCurveIdeal& right) {
  if (!spec.star) fail(ErrorKind::PreconditionViolated, "star_basis_check needs a star gluing");
  return glued_ideal(spec, left, right).input_was_groebner();
}

}  // namespace monocurve
