#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ci/falsify.hpp"
#include "ci/statement.hpp"
#include "ci/universe.hpp"

namespace ci {

inline constexpr int kExperimentAttrCap = 12;

struct ExperimentConfig {
  int n_attributes = 5;
  int k_min = 3;
  int k_max = 10;
  int sets_per_count = 1000;
  std::uint64_t seed = 0;
  H1Variant h1_variant = H1Variant::Containment;
};

struct ExperimentRow {
  int antecedent_count = 0;
  std::uint64_t instances_tested = 0;
  std::uint64_t falsified_full = 0;
  std::uint64_t falsified_h1 = 0;
  std::uint64_t falsified_h2 = 0;
  std::uint64_t falsified_h1_or_h2 = 0;
  double ratio_combined_over_full = 0.0;
  // Instances where a heuristic fired but the full criterion did not.
  // Must be zero on every run; tallied, not serialized.
  std::uint64_t heuristic_unsound = 0;
};

// Uniform over the n(n-1)/2 * 2^(n-2) canonical elementary statements.
// mt19937_64 keeps the sequence identical across platforms.
CIStatement gen_elementary(const Universe& u, std::mt19937_64& rng);

// Generation protocol: for each antecedent count k, sets_per_count sets of
// k distinct elementary statements (rejection sampling); every elementary
// statement not in the set is tested as consequent against H1, H2 and the
// full criterion.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// Header `k,instances,full,h1,h2,h1_or_h2,ratio`, one row per k.
std::string emit_csv(std::span<const ExperimentRow> rows);

}  // namespace ci
