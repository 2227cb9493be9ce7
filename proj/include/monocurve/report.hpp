#pragma once

#include <string>

#include "monocurve/criteria.hpp"
#include "monocurve/family.hpp"
#include "monocurve/gluing.hpp"
#include "monocurve/serialize.hpp"

namespace monocurve {

/// <3,5> and <7,12> are plane curves (ACM and Gorenstein); gluing them with
/// p = 8, q = 19 gives <56,57,95,96>, whose closure is not ACM.
struct PaperExample {
  CurveVerdict left;
  CurveVerdict right;
  GluingSpec gluing;
  GluedSemigroup glued;
  CurveVerdict glued_verdict;
  /// Outcome of Buchberger on G1 u G2 u {rho} in the gluing layout.
  GluedIdeal glued_ideal;
};

PaperExample run_paper_example();

std::string render(const CurveVerdict& verdict);
std::string render(const PaperExample& example);
std::string render(const FamilyReport& report);
std::string render(const GluingSpec& spec, const GluedSemigroup& glued);

Json to_json(const PaperExample& example);

}  // namespace monocurve
