#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "monocurve/criteria.hpp"
#include "monocurve/family.hpp"
#include "monocurve/gluing.hpp"
#include "monocurve/report.hpp"
#include "monocurve/serialize.hpp"

using namespace monocurve;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kViolation = 2 };

struct Globals {
  bool json = false;
  bool no_limits = false;
};

IdealOptions limits(const Globals& g) { return g.no_limits ? IdealOptions::unlimited() : IdealOptions{}; }

NumericalSemigroup semigroup_arg(const std::string& text) {
  auto made = NumericalSemigroup::make(parse_integer_list(text));
  return made.semigroup;
}

void emit(const Globals& g, const Json& json, const std::string& text) {
  if (g.json) {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string angle(const NumericalSemigroup& s) { return "<" + s.to_string() + ">"; }

int cmd_apery(const Globals& g, const std::string& gens, std::optional<Integer> modulus) {
  const auto s = semigroup_arg(gens);
  const AperySet ap = s.apery(modulus.value_or(s.multiplicity()));
  std::ostringstream out;
  out << "Ap(" << angle(s) << ", " << ap.modulus << ")\n";
  out << "  by residue: " << join_integers(ap.elements) << "\n";
  out << "  sorted:     " << join_integers(ap.sorted()) << "\n";
  Json json = to_json(ap);
  json = Json{{"semigroup", to_json(s)}, {"apery", json}};
  emit(g, json, out.str());
  return kOk;
}

int cmd_frobenius(const Globals& g, const std::string& gens) {
  const auto s = semigroup_arg(gens);
  std::ostringstream out;
  out << angle(s) << ": frobenius " << s.frobenius() << ", genus " << s.genus() << "\n";
  emit(g, Json{{"semigroup", to_json(s)}, {"frobenius", s.frobenius()}, {"genus", s.genus()}}, out.str());
  return kOk;
}

int cmd_symmetric(const Globals& g, const std::string& gens) {
  const auto s = semigroup_arg(gens);
  const bool sym = s.is_symmetric();
  emit(g, Json{{"semigroup", to_json(s)}, {"symmetric", sym}},
       angle(s) + (sym ? " is symmetric\n" : " is not symmetric\n"));
  return kOk;
}

std::string basis_text(const GroebnerBasis& basis) {
  std::string out = "reduced Groebner basis [" + basis.order_descriptor() + "]\n";
  for (const auto& s : basis.to_strings()) out += "  " + s + "\n";
  return out;
}

int cmd_ideal(const Globals& g, const std::string& gens) {
  const auto ideal = defining_ideal(semigroup_arg(gens), limits(g));
  emit(g, to_json(ideal.basis), basis_text(ideal.basis));
  return kOk;
}

int cmd_closure(const Globals& g, const std::string& gens, bool cross_check) {
  const auto s = semigroup_arg(gens);
  const auto closure = projective_closure_ideal(defining_ideal(s, limits(g)));
  Json json = to_json(closure.basis);
  json["homogeneous"] = closure.homogeneous;
  std::string text = basis_text(closure.basis);
  if (cross_check) {
    const GroebnerBasis direct = projective_ideal_by_elimination(s, limits(g));
    const bool same = direct.to_strings() == closure.basis.to_strings();
    json["matches_direct_elimination"] = same;
    text += std::string("direct elimination of s, t: ") + (same ? "identical" : "DIFFERENT") + "\n";
    if (!same) {
      emit(g, json, text + basis_text(direct));
      return kViolation;
    }
  }
  emit(g, json, text);
  return kOk;
}

int cmd_verdict(const Globals& g, const std::string& gens, bool trace) {
  IdealOptions options = limits(g);
  options.trace = trace;
  const CurveVerdict v = full_verdict(semigroup_arg(gens), options);
  std::string text = render(v);
  if (trace) {
    for (const auto& e : v.ideal.affine.basis.stats.log) {
      text += "  pair (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") lcm " + e.lcm + ": " +
              (e.outcome == PairLogEntry::Outcome::Zero ? "reduces to 0" : "adds " + e.remainder) + "\n";
    }
  }
  emit(g, to_json(v, trace), text);
  return kOk;
}

int cmd_glue(const Globals& g, const std::string& left, const std::string& right, Integer p, Integer q,
             const std::string& b, const std::string& a) {
  const auto l = semigroup_arg(left);
  const auto r = semigroup_arg(right);
  if (b.empty() != a.empty()) fail(ErrorKind::InvalidArgument, "--b and --a must be given together");
  const GluingSpec spec = b.empty() ? make_gluing(l, r, p, q)
                                    : GluingSpec{l, r, p, q, parse_integer_list(b), parse_integer_list(a), false};
  const GluedSemigroup glued = glue(spec);
  emit(g, Json{{"spec", to_json(spec)}, {"glued", to_json(glued.semigroup)}, {"layout", glued.layout_values()}},
       render(spec, glued));
  return kOk;
}

int cmd_star_glue(const Globals& g, const std::string& left, const std::string& right, Integer bl,
                  const std::string& a, bool verdict) {
  const GluingSpec spec = star_glue(semigroup_arg(left), semigroup_arg(right), bl, parse_integer_list(a));
  const GluedSemigroup glued = glue(spec);
  Json json{{"spec", to_json(spec)}, {"glued", to_json(glued.semigroup)}, {"layout", glued.layout_values()}};
  std::string text = render(spec, glued);
  if (verdict) {
    const CurveVerdict v = full_verdict(glued.semigroup, limits(g));
    json["verdict"] = to_json(v);
    text += render(v);
  }
  emit(g, json, text);
  return kOk;
}

int cmd_hilbert(const Globals& g, const std::string& gens, std::size_t terms) {
  const auto closure = projective_closure_ideal(defining_ideal(semigroup_arg(gens), limits(g)));
  const HilbertSeries series = closure_hilbert_series(closure);
  Json json = to_json(series);
  json["values"] = series.expand(terms);
  std::ostringstream out;
  out << "H(t) = " << series.to_string() << "\n";
  out << "  numerator palindromic: " << (series.numerator_palindromic() ? "yes" : "no") << "\n";
  if (series.numerator_palindromic()) {
    out << "  H(1/t) = (-1)^" << series.denominator_power << " t^" << series.functional_equation_exponent()
        << " H(t), a-invariant " << series.a_invariant() << "\n";
  } else {
    out << "  no functional equation H(1/t) = (-1)^d t^l H(t)\n";
  }
  out << "  h(0.." << terms << ") = " << join_integers(series.expand(terms)) << "\n";
  emit(g, json, out.str());
  return kOk;
}

int cmd_family(const Globals& g, const FamilyOptions& options) {
  const FamilyReport report = random_star_family(options);
  emit(g, to_json(report), render(report));
  return report.preservation_violated() ? kViolation : kOk;
}

int cmd_paper_example(const Globals& g) {
  const PaperExample example = run_paper_example();
  emit(g, to_json(example), render(example));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups, monomial curves and their projective closures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_flag("--no-limits", g.no_limits, "Lift the default size limits (8 generators, values <= 5000)");

  std::string gens;
  std::optional<Integer> modulus;
  auto* apery = app.add_subcommand("apery", "Apery set of the semigroup with respect to N");
  apery->add_option("GENS", gens, "Generators, comma separated")->required();
  apery->add_option("-n", modulus, "Modulus (default: multiplicity)");

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius number and genus");
  frobenius->add_option("GENS", gens)->required();
  auto* symmetric = app.add_subcommand("symmetric", "Symmetry test");
  symmetric->add_option("GENS", gens)->required();
  auto* ideal = app.add_subcommand("ideal", "Defining ideal of the affine monomial curve");
  ideal->add_option("GENS", gens)->required();

  bool cross_check = false;
  auto* closure = app.add_subcommand("closure", "Defining ideal of the projective closure");
  closure->add_option("GENS", gens)->required();
  closure->add_flag("--cross-check", cross_check, "Compare with direct elimination of the parametrization");

  bool trace = false;
  auto* verdict = app.add_subcommand("verdict", "ACM and Gorenstein tests for the projective closure");
  verdict->add_option("GENS", gens)->required();
  verdict->add_flag("--trace", trace, "Include the Buchberger pair log");

  std::string left, right, bvec, avec;
  Integer p = 0, q = 0, bl = 0;
  auto* glue_cmd = app.add_subcommand("glue", "Gluing of two semigroups");
  glue_cmd->add_option("--left", left)->required();
  glue_cmd->add_option("--right", right)->required();
  glue_cmd->add_option("--p", p)->required();
  glue_cmd->add_option("--q", q)->required();
  glue_cmd->add_option("--b", bvec, "Coefficients of p over the left generators");
  glue_cmd->add_option("--a", avec, "Coefficients of q over the right generators");

  bool with_verdict = false;
  auto* star = app.add_subcommand("star-glue", "Star gluing with p = bl * m_l and q = sum a_j n_j");
  star->add_option("--left", left)->required();
  star->add_option("--right", right)->required();
  star->add_option("--bl", bl)->required();
  star->add_option("--a", avec)->required();
  star->add_flag("--verdict", with_verdict, "Also run the ACM and Gorenstein tests on the result");

  std::size_t terms = 15;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the closure's coordinate ring");
  hilbert->add_option("GENS", gens)->required();
  hilbert->add_option("--terms", terms, "Number of Hilbert function values to print");

  FamilyOptions family_options;
  auto* family = app.add_subcommand("family", "Random star gluings with non-star controls");
  family->add_option("--trials", family_options.trials)->check(CLI::PositiveNumber);
  family->add_option("--max-gen", family_options.max_gen)->check(CLI::Range(Integer{3}, Integer{1000}));
  family->add_option("--seed", family_options.seed);
  family->add_flag("--star-only", family_options.star_only, "Skip the non-star controls");
  family->add_option("--timeout", family_options.trial_timeout_seconds, "Seconds per trial before it is skipped");

  auto* paper = app.add_subcommand("paper-example", "<3,5> and <7,12> glued with p = 8, q = 19");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*apery) return cmd_apery(g, gens, modulus);
    if (*frobenius) return cmd_frobenius(g, gens);
    if (*symmetric) return cmd_symmetric(g, gens);
    if (*ideal) return cmd_ideal(g, gens);
    if (*closure) return cmd_closure(g, gens, cross_check);
    if (*verdict) return cmd_verdict(g, gens, trace);
    if (*glue_cmd) return cmd_glue(g, left, right, p, q, bvec, avec);
    if (*star) return cmd_star_glue(g, left, right, bl, avec, with_verdict);
    if (*hilbert) return cmd_hilbert(g, gens, terms);
    if (*family) return cmd_family(g, family_options);
    if (*paper) return cmd_paper_example(g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kViolation : kInvalid;
  }
  return kInvalid;
}
