#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/criteria.hpp"
#include "monocurve/gluing.hpp"
#include "monocurve/serialize.hpp"

namespace monocurve {

struct FamilyOptions {
  std::size_t trials = 25;
  Integer max_gen = 40;
  std::uint64_t seed = 1;
  bool star_only = false;
  double trial_timeout_seconds = 30.0;
};

struct StarTrial {
  std::size_t index = 0;
  GluingSpec spec;
  std::string glued{};
  bool inputs_gorenstein = false;
  bool skipped = false;
  bool acm = false;
  std::optional<bool> gorenstein{};
  /// Buchberger on G1 u G2 u {rho} added nothing.
  bool fixpoint = false;
  std::string note{};
};

struct ControlTrial {
  /// Trial index, or nullopt for the fixed p = 8, q = 19 control.
  std::optional<std::size_t> index;
  GluingSpec spec;
  bool inputs_gorenstein = false;
  bool skipped = false;
  std::optional<CurveVerdict> verdict{};
  std::string note{};

  /// ACM lost, or Gorenstein lost although both inputs were Gorenstein.
  bool fails_preservation() const;
};

struct FamilyReport {
  FamilyOptions options;
  std::size_t star_trials = 0;
  std::size_t skipped = 0;
  std::size_t acm_preserved = 0;
  std::size_t gorenstein_expected = 0;
  std::size_t gorenstein_preserved = 0;
  std::size_t fixpoints = 0;
  std::vector<StarTrial> trials;
  std::vector<ControlTrial> controls;
  std::vector<std::string> violations;

  bool preservation_violated() const { return !violations.empty(); }
  std::vector<const ControlTrial*> counterexamples() const;
};

/// Seeded star gluings of random ACM pairs (2- and 3-generated, generators
/// <= max_gen), each checked for ACM and Gorenstein preservation and for the
/// Buchberger fixpoint of G1 u G2 u {rho}; non-star controls are recorded,
/// never asserted.
FamilyReport random_star_family(const FamilyOptions& options);

/// Gluing <3,5> #_{8,19} <7,12> = <56,57,95,96>.
GluingSpec reference_gluing();

/// Deterministic for a fixed seed: no timings are recorded.
Json to_json(const FamilyReport& report);

}  // namespace monocurve
