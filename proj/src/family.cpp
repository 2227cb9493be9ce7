#include "monocurve/family.hpp"

#include <chrono>
#include <numeric>
#include <random>

namespace monocurve {

namespace {

using Rng = std::mt19937_64;
constexpr std::size_t kMaxAttempts = 500;

Integer uniform(Rng& rng, Integer lo, Integer hi) { return std::uniform_int_distribution<Integer>(lo, hi)(rng); }

struct Curve {
  NumericalSemigroup semigroup;
  MonomialCurveIdeal ideal;
  bool gorenstein = false;
};

IdealOptions trial_limits(double seconds) {
  IdealOptions limits = IdealOptions::unlimited();
  limits.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  return limits;
}

Curve sample_acm_curve(Rng& rng, Integer max_gen) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t rank = static_cast<std::size_t>(uniform(rng, 2, 3));
    std::vector<Integer> gens;
    for (std::size_t i = 0; i < rank; ++i) gens.push_back(uniform(rng, 2, max_gen));
    try {
      auto made = NumericalSemigroup::make(gens);
      if (!made.redundant.empty()) continue;
      CurveVerdict v = full_verdict(made.semigroup);
      if (!v.acm()) continue;
      return Curve{made.semigroup, v.ideal.affine, v.gorenstein()};
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorKind::InternalInconsistency, "no ACM semigroup found after repeated sampling");
}

std::optional<GluingSpec> sample_star_spec(Rng& rng, const Curve& left, const Curve& right) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Integer bl = uniform(rng, 2, 4);
    std::vector<Integer> avec;
    for (std::size_t j = 0; j < right.semigroup.rank(); ++j) avec.push_back(uniform(rng, 0, bl));
    if (std::accumulate(avec.begin(), avec.end(), Integer{0}) > bl) continue;
    try {
      GluingSpec spec = star_glue(left.semigroup, right.semigroup, bl, avec);
      if (glue(spec).semigroup.rank() != left.semigroup.rank() + right.semigroup.rank()) continue;
      return spec;
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

bool star_shaped(const GluingSpec& spec) {
  const auto& b = spec.bvec;
  if (!std::all_of(b.begin(), b.end() - 1, [](Integer c) { return c == 0; })) return false;
  return std::accumulate(spec.avec.begin(), spec.avec.end(), Integer{0}) <= b.back();
}

std::optional<GluingSpec> sample_control_spec(Rng& rng, const Curve& left, const Curve& right) {
  const Integer lmax = 4 * left.semigroup.largest();
  const Integer rmax = 4 * right.semigroup.largest();
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Integer p = uniform(rng, left.semigroup.multiplicity() + 1, lmax);
    const Integer q = uniform(rng, right.semigroup.multiplicity() + 1, rmax);
    try {
      GluingSpec spec = make_gluing(left.semigroup, right.semigroup, p, q);
      if (star_shaped(spec)) continue;
      if (glue(spec).semigroup.rank() != left.semigroup.rank() + right.semigroup.rank()) continue;
      return spec;
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

void run_control(ControlTrial& control, double timeout) {
  try {
    control.verdict = full_verdict(glue(control.spec).semigroup, trial_limits(timeout));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Timeout) throw;
    control.skipped = true;
    control.note = e.what();
  }
}

void run_star_trial(StarTrial& trial, const Curve& left, const Curve& right, double timeout, FamilyReport& report) {
  const IdealOptions limits = trial_limits(timeout);
  try {
    const GluedSemigroup glued = glue(trial.spec);
    trial.glued = glued.semigroup.to_string();
    const CurveVerdict v = full_verdict(glued.semigroup, limits);
    trial.acm = v.acm();
    trial.gorenstein = v.gorenstein_apery;
    BuchbergerOptions bopts;
    bopts.deadline = limits.deadline;
    trial.fixpoint = glued_ideal(trial.spec, left.ideal, right.ideal, bopts).input_was_groebner();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Timeout) {
      trial.skipped = true;
      trial.note = e.what();
      ++report.skipped;
      return;
    }
    trial.note = e.what();
    report.violations.push_back("trial " + std::to_string(trial.index) + ": " + e.what());
    ++report.star_trials;
    return;
  }

  ++report.star_trials;
  const std::string where = "trial " + std::to_string(trial.index) + " <" + trial.glued + ">";
  if (trial.acm) {
    ++report.acm_preserved;
  } else {
    report.violations.push_back(where + ": star gluing of ACM curves is not ACM");
  }
  if (trial.fixpoint) {
    ++report.fixpoints;
  } else {
    report.violations.push_back(where + ": G1 u G2 u {rho} is not a Groebner basis");
  }
  if (trial.inputs_gorenstein) {
    ++report.gorenstein_expected;
    if (trial.gorenstein.value_or(false)) {
      ++report.gorenstein_preserved;
    } else {
      report.violations.push_back(where + ": star gluing of Gorenstein curves is not Gorenstein");
    }
  }
}

Json control_json(const ControlTrial& c) {
  Json out{{"trial", c.index ? Json(*c.index) : Json("fixture")},
           {"spec", to_json(c.spec)},
           {"inputs_gorenstein", c.inputs_gorenstein},
           {"skipped", c.skipped}};
  if (c.verdict) {
    out["glued"] = c.verdict->semigroup.to_string();
    out["acm"] = c.verdict->acm();
    out["gorenstein"] = c.verdict->gorenstein_apery ? Json(*c.verdict->gorenstein_apery) : Json();
    out["preserved"] = !c.fails_preservation();
  }
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

}  // namespace

bool ControlTrial::fails_preservation() const {
  if (!verdict) return false;
  if (!verdict->acm()) return true;
  return inputs_gorenstein && !verdict->gorenstein();
}

std::vector<const ControlTrial*> FamilyReport::counterexamples() const {
  std::vector<const ControlTrial*> out;
  for (const auto& c : controls) {
    if (c.fails_preservation()) out.push_back(&c);
  }
  return out;
}

GluingSpec reference_gluing() {
  return make_gluing(NumericalSemigroup::from({3, 5}), NumericalSemigroup::from({7, 12}), 8, 19);
}

FamilyReport random_star_family(const FamilyOptions& options) {
  if (options.trials == 0) fail(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (options.max_gen < 3) fail(ErrorKind::InvalidArgument, "max-gen must be at least 3");
  FamilyReport report;
  report.options = options;
  Rng rng(options.seed);

  if (!options.star_only) {
    ControlTrial fixture{std::nullopt, reference_gluing(), true};
    run_control(fixture, options.trial_timeout_seconds);
    report.controls.push_back(std::move(fixture));
  }

  for (std::size_t i = 0; i < options.trials; ++i) {
    Curve left = sample_acm_curve(rng, options.max_gen);
    Curve right = sample_acm_curve(rng, options.max_gen);
    std::optional<GluingSpec> spec = sample_star_spec(rng, left, right);
    while (!spec) {
      left = sample_acm_curve(rng, options.max_gen);
      right = sample_acm_curve(rng, options.max_gen);
      spec = sample_star_spec(rng, left, right);
    }
    StarTrial trial{i, *spec};
    trial.inputs_gorenstein = left.gorenstein && right.gorenstein;
    run_star_trial(trial, left, right, options.trial_timeout_seconds, report);
    report.trials.push_back(std::move(trial));

    if (options.star_only) continue;
    if (auto control_spec = sample_control_spec(rng, left, right)) {
      ControlTrial control{i, std::move(*control_spec), left.gorenstein && right.gorenstein};
      run_control(control, options.trial_timeout_seconds);
      report.controls.push_back(std::move(control));
    }
  }
  return report;
}

Json to_json(const FamilyReport& report) {
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json entry{{"trial", t.index},
               {"spec", to_json(t.spec)},
               {"glued", t.glued},
               {"inputs_gorenstein", t.inputs_gorenstein},
               {"skipped", t.skipped}};
    if (!t.skipped) {
      entry["acm"] = t.acm;
      entry["gorenstein"] = t.gorenstein ? Json(*t.gorenstein) : Json();
      entry["fixpoint"] = t.fixpoint;
    }
    if (!t.note.empty()) entry["note"] = t.note;
    trials.push_back(std::move(entry));
  }
  Json controls = Json::array();
  for (const auto& c : report.controls) controls.push_back(control_json(c));
  Json counterexamples = Json::array();
  for (const ControlTrial* c : report.counterexamples()) {
    counterexamples.push_back(Json{{"spec", to_json(c->spec)}, {"verdict", to_json(*c->verdict)}});
  }
  const auto& o = report.options;
  return Json{{"seed", o.seed},
              {"trials", o.trials},
              {"max_gen", o.max_gen},
              {"star_only", o.star_only},
              {"star_trials", report.star_trials},
              {"skipped", report.skipped},
              {"acm_preserved", report.acm_preserved},
              {"gorenstein_expected", report.gorenstein_expected},
              {"gorenstein_preserved", report.gorenstein_preserved},
              {"fixpoints", report.fixpoints},
              {"violations", report.violations},
              {"star", std::move(trials)},
              {"controls", std::move(controls)},
              {"counterexamples", std::move(counterexamples)}};
}

}  // namespace monocurve
