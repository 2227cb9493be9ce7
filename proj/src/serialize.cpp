#include "monocurve/serialize.hpp"

namespace monocurve {

namespace {

Json points_json(std::span<const Point2> points) {
  Json out = Json::array();
  for (const auto& [a, b] : points) out.push_back({a, b});
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

const char* outcome_name(PairLogEntry::Outcome outcome) {
  return outcome == PairLogEntry::Outcome::Zero ? "zero" : "added";
}

std::vector<Integer> integer_list(const Json& json, const char* key) {
  if (!json.contains(key)) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  const Json& v = json.at(key);
  if (v.is_string()) return parse_integer_list(v.get<std::string>());
  if (!v.is_array()) fail(ErrorKind::ParseError, std::string("field '") + key + "' must be a list");
  std::vector<Integer> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(ErrorKind::ParseError, std::string("field '") + key + "' must hold integers");
    out.push_back(x.get<Integer>());
  }
  return out;
}

Integer integer_field(const Json& json, const char* key) {
  if (!json.contains(key) || !json.at(key).is_number_integer()) {
    fail(ErrorKind::ParseError, std::string("field '") + key + "' must be an integer");
  }
  return json.at(key).get<Integer>();
}

}  // namespace

Json to_json(const NumericalSemigroup& semigroup) { return semigroup.to_string(); }

Json to_json(const AperySet& apery) {
  return Json{{"modulus", apery.modulus}, {"elements", apery.elements}, {"sorted", apery.sorted()}};
}

Json to_json(const ProjectiveAperySet& apery) {
  return Json{{"modulus", apery.modulus},
              {"points", points_json(apery.points)},
              {"reversed_apery", apery.reversed_apery}};
}

Json to_json(const GluingSpec& spec) {
  return Json{{"left", spec.left.to_string()}, {"right", spec.right.to_string()},
              {"p", spec.p},                   {"q", spec.q},
              {"bvec", spec.bvec},             {"avec", spec.avec},
              {"star", spec.star}};
}

GluingSpec gluing_from_json(const Json& json) {
  if (!json.is_object()) fail(ErrorKind::ParseError, "gluing spec must be a JSON object");
  GluingSpec spec{NumericalSemigroup::from(integer_list(json, "left")),
                  NumericalSemigroup::from(integer_list(json, "right")),
                  integer_field(json, "p"),
                  integer_field(json, "q"),
                  integer_list(json, "bvec"),
                  integer_list(json, "avec"),
                  json.value("star", false)};
  validate(spec);
  return spec;
}

Json to_json(const GroebnerBasis& basis, bool trace) {
  Json out{{"ambient", basis.ring->vars.names()},
           {"order", basis.order_descriptor()},
           {"generators", basis.to_strings()},
           {"reduced", basis.reduced}};
  if (trace) {
    const auto& s = basis.stats;
    Json log = Json::array();
    for (const auto& e : s.log) {
      Json entry{{"pair", {e.first, e.second}}, {"lcm", e.lcm}, {"outcome", outcome_name(e.outcome)}};
      if (e.outcome == PairLogEntry::Outcome::Added) entry["remainder"] = e.remainder;
      log.push_back(std::move(entry));
    }
    out["stats"] = Json{{"pairs_created", s.pairs_created},     {"skipped_product", s.skipped_product},
                        {"skipped_chain", s.skipped_chain},     {"reductions", s.reductions},
                        {"zero_reductions", s.zero_reductions}, {"added", s.added},
                        {"binomial_path", s.binomial_path}};
    out["pair_log"] = std::move(log);
  }
  return out;
}

Json to_json(const HilbertSeries& series) {
  Json out{{"numerator", series.numerator},
           {"denominator_power", series.denominator_power},
           {"reduced", series.reduced},
           {"palindromic", series.numerator_palindromic()},
           {"a_invariant", series.a_invariant()},
           {"functional_equation_exponent", series.functional_equation_exponent()},
           {"text", series.to_string()}};
  return out;
}

Json to_json(const CurveVerdict& v, bool trace) {
  Json witnesses{{"offending_generator", v.offending_generator ? Json(v.offending_generator->to_string()) : Json()},
                 {"missing_mu", optional_json(v.missing_mu)},
                 {"failing_index", optional_json(v.failing_index)},
                 {"hilbert_numerator", v.hilbert ? Json(v.hilbert->numerator) : Json()}};
  Json out{{"semigroup", to_json(v.semigroup)},
           {"acm_groebner", v.acm_groebner},
           {"acm_apery", v.acm_apery},
           {"gorenstein_apery", optional_json(v.gorenstein_apery)},
           {"gorenstein_hilbert", optional_json(v.gorenstein_hilbert)},
           {"symmetric", v.symmetric},
           {"witnesses", std::move(witnesses)},
           {"affine_ideal", to_json(v.ideal.affine.basis, trace)},
           {"closure_ideal", to_json(v.ideal.basis)},
           {"apery", to_json(v.apery)},
           {"hilbert", v.hilbert ? to_json(*v.hilbert) : Json()}};
  return out;
}

}  // namespace monocurve
