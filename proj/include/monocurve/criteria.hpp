#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "monocurve/hilbert.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

/// First basis element whose leading monomial is divisible by variable `var`.
std::optional<Polynomial> leading_monomial_divisible_by(const GroebnerBasis& basis, std::size_t var);

struct GroebnerAcm {
  bool acm = false;
  /// Affine basis element whose leading monomial contains x_r.
  std::optional<Polynomial> offending;
};

/// x_r divides no leading monomial of the reduced degrevlex basis of the
/// affine ideal.
GroebnerAcm is_acm_groebner(const ProjectiveCurveIdeal& ideal);

struct AperyAcm {
  bool acm = false;
  ProjectiveAperySet apery;
  /// Interior second coordinate outside Ap(reversed semigroup, n_r).
  std::optional<Integer> missing;
};

AperyAcm is_acm_apery(const ProjectiveSemigroup& semigroup);

struct AperyGorenstein {
  bool gorenstein = false;
  /// First i with b_i + b_(top - i) != b_top, counting (0, 0) as b_0.
  std::optional<std::size_t> failing_index;
};

/// The Apéry set {(0,0)} u interior, sorted by first coordinate, satisfies
/// b_top = b_i + b_(top - i) for every i. Throws NotCohenMacaulay when the
/// Apéry set is not good.
AperyGorenstein is_gorenstein_apery(const ProjectiveSemigroup& semigroup);

struct HilbertGorenstein {
  bool gorenstein = false;
  /// Reduced Hilbert series of the coordinate ring of the closure.
  HilbertSeries series;
};

/// Hilbert series of R[x0] / in(closure ideal); Gorenstein iff its reduced
/// numerator is palindromic. Throws NotCohenMacaulay on non-ACM input and
/// InternalInconsistency if the reduced denominator is not (1 - t)^2.
HilbertGorenstein is_gorenstein_hilbert(const ProjectiveCurveIdeal& ideal);

/// Hilbert series of the closure's coordinate ring, reduced.
HilbertSeries closure_hilbert_series(const ProjectiveCurveIdeal& ideal);

struct CurveVerdict {
  NumericalSemigroup semigroup;
  ProjectiveCurveIdeal ideal;
  bool acm_groebner = false;
  bool acm_apery = false;
  /// nullopt when the closure is not ACM and the criteria do not apply.
  std::optional<bool> gorenstein_apery{};
  std::optional<bool> gorenstein_hilbert{};
  bool symmetric = false;

  ProjectiveAperySet apery{};
  std::optional<Polynomial> offending_generator{};
  std::optional<Integer> missing_mu{};
  std::optional<std::size_t> failing_index{};
  std::optional<HilbertSeries> hilbert{};

  bool acm() const { return acm_groebner; }
  bool gorenstein() const { return gorenstein_apery.value_or(false); }
};

/// Defining ideal, closure, both ACM criteria and, when ACM, both Gorenstein
/// criteria. Throws InternalInconsistency when the two ACM criteria or the two
/// Gorenstein criteria disagree, or when a Gorenstein closure has a
/// non-symmetric semigroup.
CurveVerdict full_verdict(const NumericalSemigroup& semigroup, const IdealOptions& options = {});

}  // namespace monocurve
