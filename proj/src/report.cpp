#include "monocurve/report.hpp"

#include <sstream>

namespace monocurve {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string tri(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a (not ACM)"; }

std::string angle(const NumericalSemigroup& s) { return "<" + s.to_string() + ">"; }

std::string layout_string(const GluedSemigroup& glued) { return join_integers(glued.layout_values()); }

}  // namespace

PaperExample run_paper_example() {
  const GluingSpec spec = reference_gluing();
  GluedSemigroup glued = glue(spec);
  CurveVerdict left = full_verdict(spec.left);
  CurveVerdict right = full_verdict(spec.right);
  CurveVerdict glued_verdict = full_verdict(glued.semigroup);
  GluedIdeal ideal = monocurve::glued_ideal(spec, left.ideal.affine, right.ideal.affine);
  return PaperExample{std::move(left),          std::move(right), spec, std::move(glued),
                      std::move(glued_verdict), std::move(ideal)};
}

std::string render(const CurveVerdict& v) {
  std::ostringstream out;
  out << "semigroup " << angle(v.semigroup) << "\n";
  out << "  symmetric:               " << yes_no(v.symmetric) << "\n";
  out << "  ACM (leading monomials): " << yes_no(v.acm_groebner);
  if (v.offending_generator) out << "  [x" << v.semigroup.rank() << " divides LM of " << v.offending_generator->to_string() << "]";
  out << "\n";
  out << "  ACM (Apery set):         " << yes_no(v.acm_apery);
  if (v.missing_mu) out << "  [mu = " << *v.missing_mu << " not in Ap(reversed, " << v.apery.modulus << ")]";
  out << "\n";
  out << "  Gorenstein (Apery sums): " << tri(v.gorenstein_apery);
  if (v.failing_index) out << "  [fails at i = " << *v.failing_index << "]";
  out << "\n";
  out << "  Gorenstein (Hilbert):    " << tri(v.gorenstein_hilbert) << "\n";
  if (v.hilbert) out << "  Hilbert series:          " << v.hilbert->to_string() << "\n";
  out << "  affine basis [" << v.ideal.affine.basis.order_descriptor() << "]:\n";
  for (const auto& g : v.ideal.affine.basis.to_strings()) out << "    " << g << "\n";
  return out.str();
}

std::string render(const GluingSpec& spec, const GluedSemigroup& glued) {
  std::ostringstream out;
  out << angle(spec.left) << (spec.star ? " *" : " #") << "_{" << spec.p << "," << spec.q << "} " << angle(spec.right)
      << " = <" << layout_string(glued) << ">\n";
  out << "  sorted: " << angle(glued.semigroup) << "\n";
  out << "  p = " << spec.p << " = b . (" << spec.left.to_string() << "), b = (" << join_integers(spec.bvec) << ")\n";
  out << "  q = " << spec.q << " = a . (" << spec.right.to_string() << "), a = (" << join_integers(spec.avec) << ")\n";
  out << "  star: " << yes_no(spec.star) << "\n";
  return out.str();
}

std::string render(const PaperExample& e) {
  std::ostringstream out;
  const auto line = [&](const CurveVerdict& v) {
    out << "  " << angle(v.semigroup) << ": ACM " << yes_no(v.acm_groebner) << ", Gorenstein " << tri(v.gorenstein_apery)
        << "\n";
  };
  out << "inputs\n";
  line(e.left);
  line(e.right);
  out << "gluing\n";
  std::istringstream glued(render(e.gluing, e.glued));
  for (std::string s; std::getline(glued, s);) out << "  " << s << "\n";
  out << "glued curve\n";
  out << "  C(" << layout_string(e.glued) << ") = " << angle(e.glued_verdict.semigroup) << "\n";
  out << "  ACM (leading monomials): " << yes_no(e.glued_verdict.acm_groebner) << "\n";
  out << "  ACM (Apery set):         " << yes_no(e.glued_verdict.acm_apery) << "\n";
  out << "  Gorenstein:              " << tri(e.glued_verdict.gorenstein_apery) << "\n";
  out << "  symmetric:               " << yes_no(e.glued_verdict.symmetric) << "\n";
  if (e.glued_verdict.offending_generator) {
    out << "  witness: x" << e.glued_verdict.semigroup.rank() << " divides the leading monomial of "
        << e.glued_verdict.offending_generator->to_string() << "\n";
  }
  if (e.glued_verdict.missing_mu) {
    out << "  witness: mu = " << *e.glued_verdict.missing_mu << " is not in Ap(reversed semigroup, "
        << e.glued_verdict.apery.modulus << ")\n";
  }
  out << "  G1 u G2 u {rho}, rho = " << e.glued_ideal.rho.to_string() << ": "
      << (e.glued_ideal.input_was_groebner() ? "already a Groebner basis"
                                             : "Buchberger adds " + std::to_string(e.glued_ideal.basis.stats.added) +
                                                   " elements")
      << "\n";
  return out.str();
}

std::string render(const FamilyReport& r) {
  std::ostringstream out;
  out << "seed " << r.options.seed << ", " << r.options.trials << " trials, generators <= " << r.options.max_gen << "\n";
  out << "star trials run:       " << r.star_trials << " (" << r.skipped << " skipped on timeout)\n";
  out << "ACM preserved:         " << r.acm_preserved << " / " << r.star_trials << "\n";
  out << "Gorenstein preserved:  " << r.gorenstein_preserved << " / " << r.gorenstein_expected
      << " (trials with Gorenstein inputs)\n";
  out << "Groebner fixpoint:     " << r.fixpoints << " / " << r.star_trials << "\n";
  for (const auto& t : r.trials) {
    out << "  #" << t.index << " " << angle(t.spec.left) << " *_{" << t.spec.p << "," << t.spec.q << "} "
        << angle(t.spec.right) << " -> ";
    if (t.skipped) {
      out << "skipped (" << t.note << ")\n";
      continue;
    }
    out << "<" << t.glued << "> ACM " << yes_no(t.acm) << ", Gorenstein " << tri(t.gorenstein) << "\n";
  }
  if (!r.controls.empty()) {
    out << "non-star controls:     " << r.controls.size() << ", " << r.counterexamples().size()
        << " fail preservation\n";
    for (const ControlTrial* c : r.counterexamples()) {
      out << "  " << angle(c->spec.left) << " #_{" << c->spec.p << "," << c->spec.q << "} " << angle(c->spec.right)
          << " -> " << angle(c->verdict->semigroup) << " ACM " << yes_no(c->verdict->acm()) << ", Gorenstein "
          << tri(c->verdict->gorenstein_apery) << "\n";
    }
  }
  for (const auto& v : r.violations) out << "VIOLATION " << v << "\n";
  return out.str();
}

Json to_json(const PaperExample& e) {
  const auto brief = [](const CurveVerdict& v) {
    return Json{{"semigroup", to_json(v.semigroup)},
                {"acm_groebner", v.acm_groebner},
                {"acm_apery", v.acm_apery},
                {"gorenstein_apery", v.gorenstein_apery ? Json(*v.gorenstein_apery) : Json()},
                {"gorenstein_hilbert", v.gorenstein_hilbert ? Json(*v.gorenstein_hilbert) : Json()},
                {"symmetric", v.symmetric}};
  };
  Json glued = brief(e.glued_verdict);
  glued["layout"] = e.glued.layout_values();
  glued["offending_generator"] =
      e.glued_verdict.offending_generator ? Json(e.glued_verdict.offending_generator->to_string()) : Json();
  glued["missing_mu"] = e.glued_verdict.missing_mu ? Json(*e.glued_verdict.missing_mu) : Json();
  return Json{{"left", brief(e.left)},
              {"right", brief(e.right)},
              {"gluing", to_json(e.gluing)},
              {"glued", std::move(glued)},
              {"rho", e.glued_ideal.rho.to_string()},
              {"glued_input_is_groebner", e.glued_ideal.input_was_groebner()},
              {"buchberger_added", e.glued_ideal.basis.stats.added}};
}

}  // namespace monocurve
