#include "monocurve/criteria.hpp"

#include <algorithm>

namespace monocurve {

std::optional<Polynomial> leading_monomial_divisible_by(const GroebnerBasis& basis, std::size_t var) {
  for (const auto& g : basis.generators) {
    if (g.leading_term().monomial[var] > 0) return g;
  }
  return std::nullopt;
}

GroebnerAcm is_acm_groebner(const ProjectiveCurveIdeal& ideal) {
  const auto& affine = ideal.affine.basis;
  const std::size_t r = affine.ring->size();
  const auto& closure_order = ideal.basis.ring->order;
  if (affine.ring->order.kind() != MonomialOrder::Kind::Degrevlex || !affine.ring->order.is_least(r - 1) ||
      !closure_order.is_least(r) || ideal.basis.ring->size() != r + 1) {
    fail(ErrorKind::PreconditionViolated, "expected degrevlex with x_r > x0 and x0 least, got " +
                                              ideal.basis.order_descriptor());
  }
  auto offending = leading_monomial_divisible_by(affine, r - 1);
  return GroebnerAcm{!offending.has_value(), std::move(offending)};
}

AperyAcm is_acm_apery(const ProjectiveSemigroup& semigroup) {
  AperyAcm out;
  out.apery = projective_apery(semigroup);
  Integer missing = 0;
  out.acm = is_good_apery(out.apery, &missing);
  if (!out.acm) out.missing = missing;
  return out;
}

AperyGorenstein is_gorenstein_apery(const ProjectiveSemigroup& semigroup) {
  const ProjectiveAperySet apery = projective_apery(semigroup);
  if (!is_good_apery(apery)) {
    fail(ErrorKind::NotCohenMacaulay, "closure of <" + semigroup.base().to_string() + "> is not ACM");
  }
  std::vector<Point2> b{{0, 0}};
  const auto interior = apery.interior();
  b.insert(b.end(), interior.begin(), interior.end());
  const std::size_t top = b.size() - 1;
  for (std::size_t i = 0; i <= top; ++i) {
    if (b[i].first + b[top - i].first != b[top].first || b[i].second + b[top - i].second != b[top].second) {
      return AperyGorenstein{false, i};
    }
  }
  return AperyGorenstein{true, std::nullopt};
}

HilbertSeries closure_hilbert_series(const ProjectiveCurveIdeal& ideal) {
  const auto leading = ideal.basis.leading_monomials();
  return hilbert_series(leading, ideal.basis.ring->size()).reduce();
}

HilbertGorenstein is_gorenstein_hilbert(const ProjectiveCurveIdeal& ideal) {
  if (!is_acm_groebner(ideal).acm) {
    fail(ErrorKind::NotCohenMacaulay, "closure of <" + ideal.affine.semigroup.to_string() + "> is not ACM");
  }
  HilbertSeries series = closure_hilbert_series(ideal);
  if (series.denominator_power != 2) {
    fail(ErrorKind::InternalInconsistency,
         "coordinate ring of a projective curve must have dimension 2, got " + series.to_string());
  }
  const bool palindromic = series.numerator_palindromic();
  return HilbertGorenstein{palindromic, std::move(series)};
}

CurveVerdict full_verdict(const NumericalSemigroup& semigroup, const IdealOptions& options) {
  MonomialCurveIdeal affine = defining_ideal(semigroup, options);
  ProjectiveCurveIdeal closure = projective_closure_ideal(affine);
  const ProjectiveSemigroup projective(semigroup);

  const GroebnerAcm groebner = is_acm_groebner(closure);
  AperyAcm apery = is_acm_apery(projective);

  CurveVerdict v{.semigroup = semigroup, .ideal = std::move(closure)};
  v.acm_groebner = groebner.acm;
  v.acm_apery = apery.acm;
  v.symmetric = semigroup.is_symmetric();
  v.apery = std::move(apery.apery);
  v.offending_generator = groebner.offending;
  v.missing_mu = apery.missing;
  v.hilbert = closure_hilbert_series(v.ideal);

  const std::string name = "<" + semigroup.to_string() + ">";
  if (v.acm_groebner != v.acm_apery) {
    fail(ErrorKind::InternalInconsistency, "ACM criteria disagree on " + name);
  }
  if (!v.acm_groebner) return v;

  const AperyGorenstein by_apery = is_gorenstein_apery(projective);
  const HilbertGorenstein by_hilbert = is_gorenstein_hilbert(v.ideal);
  v.gorenstein_apery = by_apery.gorenstein;
  v.gorenstein_hilbert = by_hilbert.gorenstein;
  v.failing_index = by_apery.failing_index;
  v.hilbert = by_hilbert.series;
  if (by_apery.gorenstein != by_hilbert.gorenstein) {
    fail(ErrorKind::InternalInconsistency, "Gorenstein criteria disagree on " + name);
  }
  if (by_apery.gorenstein && !v.symmetric) {
    fail(ErrorKind::InternalInconsistency, "Gorenstein closure over a non-symmetric semigroup " + name);
  }
  return v;
}

}  // namespace monocurve
