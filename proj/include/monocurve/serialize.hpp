#pragma once

#include "json.hpp"

#include "monocurve/criteria.hpp"
#include "monocurve/gluing.hpp"
#include "monocurve/hilbert.hpp"
#include "monocurve/semigroup.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

/// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& semigroup);
Json to_json(const AperySet& apery);
Json to_json(const ProjectiveAperySet& apery);
Json to_json(const GluingSpec& spec);
Json to_json(const GroebnerBasis& basis, bool trace = false);
Json to_json(const HilbertSeries& series);
Json to_json(const CurveVerdict& verdict, bool trace = false);

/// Reads {left, right, p, q, bvec, avec, star} and validates the result.
GluingSpec gluing_from_json(const Json& json);

}  // namespace monocurve
