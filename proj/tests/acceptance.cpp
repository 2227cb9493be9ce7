// One line per acceptance criterion; exit status 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "monocurve/criteria.hpp"
#include "monocurve/family.hpp"
#include "monocurve/report.hpp"
#include "oracles.hpp"

using namespace monocurve;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<NumericalSemigroup> out;
  while (out.size() < count) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    try {
      out.push_back(NumericalSemigroup::from(oracle::random_list(rng, r, 2, 60)));
    } catch (const Error&) {
    }
  }
  return out;
}

struct Instance {
  NumericalSemigroup semigroup;
  MonomialCurveIdeal affine;
  ProjectiveCurveIdeal closure;
};

Outcome paper_example() {
  const auto start = Clock::now();
  const PaperExample e = run_paper_example();
  const double elapsed = seconds_since(start);
  const bool inputs = e.left.acm_groebner && e.left.acm_apery && e.left.gorenstein() && e.right.acm_groebner &&
                      e.right.acm_apery && e.right.gorenstein();
  const bool glued = e.glued_verdict.semigroup.to_string() == "56,57,95,96" && !e.glued_verdict.acm_groebner &&
                     !e.glued_verdict.acm_apery && !e.glued_verdict.gorenstein();
  return {inputs && glued && elapsed < 10.0,
          "<3,5>, <7,12> ACM+Gorenstein: " + std::string(inputs ? "yes" : "NO") + "; <57,95,56,96> not ACM: " +
              (glued ? "yes" : "NO") + "; " + std::to_string(elapsed) + " s"};
}

Outcome star_acm(const FamilyReport& r, double elapsed) {
  const bool pass = r.star_trials == 25 && r.skipped == 0 && r.acm_preserved == 25 && elapsed < 300.0;
  return {pass, std::to_string(r.acm_preserved) + "/" + std::to_string(r.star_trials) + " ACM, " +
                    std::to_string(r.skipped) + " skipped, " + std::to_string(elapsed) + " s"};
}

Outcome star_gorenstein(const FamilyReport& r) {
  const bool pass = r.skipped == 0 && r.gorenstein_expected > 0 && r.gorenstein_preserved == r.gorenstein_expected;
  return {pass, std::to_string(r.gorenstein_preserved) + "/" + std::to_string(r.gorenstein_expected) +
                    " Gorenstein-input trials Gorenstein"};
}

Outcome star_fixpoint(const FamilyReport& r) {
  const bool pass = r.skipped == 0 && r.star_trials == 25 && r.fixpoints == r.star_trials;
  return {pass, std::to_string(r.fixpoints) + "/" + std::to_string(r.star_trials) + " inputs already Groebner bases"};
}

Outcome acm_equivalence(const std::vector<Instance>& instances, std::size_t& acm_count) {
  std::size_t agree = 0;
  acm_count = 0;
  for (const auto& i : instances) {
    const bool g = is_acm_groebner(i.closure).acm;
    const bool a = is_acm_apery(ProjectiveSemigroup(i.semigroup)).acm;
    agree += g == a ? 1 : 0;
    acm_count += g ? 1 : 0;
  }
  return {agree == instances.size() && instances.size() >= 100,
          std::to_string(agree) + "/" + std::to_string(instances.size()) + " agree (" + std::to_string(acm_count) +
              " ACM)"};
}

Outcome gorenstein_agreement(const std::vector<Instance>& instances) {
  std::size_t checked = 0, agree = 0, gorenstein = 0;
  for (const auto& i : instances) {
    if (!is_acm_groebner(i.closure).acm) continue;
    ++checked;
    const bool a = is_gorenstein_apery(ProjectiveSemigroup(i.semigroup)).gorenstein;
    const bool h = is_gorenstein_hilbert(i.closure).gorenstein;
    agree += a == h ? 1 : 0;
    gorenstein += a ? 1 : 0;
  }
  return {checked > 0 && agree == checked, std::to_string(agree) + "/" + std::to_string(checked) +
                                               " ACM instances agree (" + std::to_string(gorenstein) + " Gorenstein)"};
}

Outcome kernel(const std::vector<Instance>& instances) {
  std::size_t sound = 0, complete = 0, relations = 0;
  for (const auto& inst : instances) {
    const auto& gens = inst.semigroup.generators();
    bool ok = true;
    for (const auto& g : inst.affine.basis.generators) ok = ok && oracle::substitute(g, gens).empty();
    sound += ok ? 1 : 0;

    // x^u - x^v reduces to 0 iff both monomials share a normal form; grouping
    // every monomial of degree <= 12 by weight covers all such relations.
    std::map<Integer, std::vector<std::string>> classes;
    for (int d = 0; d <= 12; ++d) {
      for (const auto& m : oracle::monomials_of_degree(gens.size(), d)) {
        Integer w = 0;
        for (std::size_t k = 0; k < gens.size(); ++k) w += m[k] * gens[k];
        classes[w].push_back(
            normal_form(Polynomial::term(inst.affine.basis.ring, m), inst.affine.basis.generators).to_string());
      }
    }
    bool all_zero = true;
    for (const auto& [w, forms] : classes) {
      relations += forms.size() * (forms.size() - 1) / 2;
      for (const auto& f : forms) all_zero = all_zero && f == forms.front();
    }
    complete += all_zero ? 1 : 0;
  }
  return {sound == instances.size() && complete == instances.size(),
          "sound " + std::to_string(sound) + "/" + std::to_string(instances.size()) + ", complete " +
              std::to_string(complete) + "/" + std::to_string(instances.size()) + " (" + std::to_string(relations) +
              " relations of degree <= 12)"};
}

Outcome homogenization(const std::vector<Instance>& instances) {
  std::size_t same = 0, leading = 0;
  for (const auto& inst : instances) {
    const GroebnerBasis direct = projective_ideal_by_elimination(inst.semigroup);
    same += direct.to_strings() == inst.closure.basis.to_strings() ? 1 : 0;
    const auto affine_lm = inst.affine.basis.leading_monomials();
    const auto closure_lm = inst.closure.basis.leading_monomials();
    bool unchanged = affine_lm.size() == closure_lm.size();
    for (std::size_t k = 0; unchanged && k < affine_lm.size(); ++k) {
      unchanged = affine_lm[k].extended(0) == closure_lm[k];
    }
    leading += unchanged ? 1 : 0;
  }
  return {same == instances.size() && leading == instances.size(),
          std::to_string(same) + "/" + std::to_string(instances.size()) + " equal to direct elimination, " +
              std::to_string(leading) + "/" + std::to_string(instances.size()) + " leading monomials unchanged"};
}

Outcome hilbert_oracle(const std::vector<Instance>& instances) {
  std::size_t match = 0;
  const std::size_t count = std::min<std::size_t>(20, instances.size());
  for (std::size_t k = 0; k < count; ++k) {
    const auto& closure = instances[k].closure;
    const auto leading = closure.basis.leading_monomials();
    const auto values = closure_hilbert_series(closure).expand(15);
    bool ok = true;
    for (int d = 0; d <= 15; ++d) {
      ok = ok && values[static_cast<std::size_t>(d)] == oracle::standard_monomials(leading, closure.basis.ring->size(), d);
    }
    match += ok ? 1 : 0;
  }
  return {count == 20 && match == count,
          std::to_string(match) + "/" + std::to_string(count) + " series match standard-monomial counts to degree 15"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  bool all = true;
  const auto report = [&](int number, const std::string& name, const Outcome& o) {
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };
  const auto guarded = [&](int number, const std::string& name, const std::function<Outcome()>& fn) {
    try {
      report(number, name, fn());
    } catch (const std::exception& e) {
      report(number, name, {false, std::string("error: ") + e.what()});
    }
  };

  guarded(1, "reference gluing example", paper_example);

  FamilyOptions options;
  options.trials = 25;
  options.max_gen = 40;
  options.seed = 20250101;
  std::optional<FamilyReport> family;
  double family_seconds = 0;
  try {
    const auto start = Clock::now();
    family = random_star_family(options);
    family_seconds = seconds_since(start);
  } catch (const std::exception& e) {
    std::printf("family run failed: %s\n", e.what());
  }
  const auto need_family = [&](auto fn) {
    return [&, fn] { return family ? fn() : Outcome{false, "family run failed"}; };
  };

  std::vector<Instance> instances;
  try {
    for (const auto& s : random_semigroups(4242, 100)) {
      MonomialCurveIdeal affine = defining_ideal(s);
      ProjectiveCurveIdeal closure = projective_closure_ideal(affine);
      instances.push_back(Instance{s, std::move(affine), std::move(closure)});
    }
  } catch (const std::exception& e) {
    std::printf("instance construction failed: %s\n", e.what());
  }

  std::size_t acm_count = 0;
  guarded(2, "star gluing preserves ACM", need_family([&] { return star_acm(*family, family_seconds); }));
  guarded(3, "star gluing preserves Gorenstein", need_family([&] { return star_gorenstein(*family); }));
  guarded(4, "ACM criteria equivalence", [&] { return acm_equivalence(instances, acm_count); });
  guarded(5, "Gorenstein criteria agreement", [&] { return gorenstein_agreement(instances); });
  guarded(6, "toric kernel soundness and completeness", [&] { return kernel(instances); });
  guarded(7, "homogenization equals direct elimination", [&] { return homogenization(instances); });
  guarded(8, "star basis fixpoint", need_family([&] { return star_fixpoint(*family); }));
  guarded(9, "Hilbert series oracle", [&] { return hilbert_oracle(instances); });

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
