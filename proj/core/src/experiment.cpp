#include "ci/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "ci/errors.hpp"
#include "ci/lattice.hpp"

namespace ci {

namespace {

// Unbiased bounded draw; mt19937_64 output is standardized, so the whole
// experiment stream is reproducible across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

VarSet scatter(Mask value, Mask positions) {
  VarSet out;
  int bit = 0;
  while (positions != 0) {
    int pos = std::countr_zero(positions);
    if ((value >> bit) & 1u) out = out | singleton(pos);
    positions &= positions - 1;
    ++bit;
  }
  return out;
}

}  // namespace

CIStatement gen_elementary(const Universe& u, std::mt19937_64& rng) {
  const int n = u.size();
  if (n < 2) throw CapExceeded("elementary statements require at least 2 variables");
  const std::uint64_t pairs = std::uint64_t(n) * (n - 1) / 2;
  std::uint64_t p = bounded(rng, pairs);
  int i = 0;
  while (p >= std::uint64_t(n - 1 - i)) {
    p -= std::uint64_t(n - 1 - i);
    ++i;
  }
  int j = i + 1 + static_cast<int>(p);
  Mask rest = u.full().bits & ~singleton(i).bits & ~singleton(j).bits;
  Mask draw = n == 2 ? 0 : bounded(rng, Mask{1} << (n - 2));
  return CIStatement::make(singleton(i), singleton(j), scatter(draw, rest));
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.n_attributes < 2 || config.n_attributes > kExperimentAttrCap)
    throw CapExceeded("experiment limited to 2..12 attributes");
  if (config.k_min < 1 || config.k_max < config.k_min || config.sets_per_count < 1)
    throw Error("invalid experiment configuration");

  std::vector<std::string> names;
  for (int i = 0; i < config.n_attributes; ++i) names.push_back("x" + std::to_string(i));
  Universe u{names};
  const std::vector<CIStatement> elementary = all_elementary(u);
  if (std::uint64_t(config.k_max) >= elementary.size())
    throw Error("antecedent count exceeds the elementary statement space");

  std::mt19937_64 rng(config.seed);
  std::vector<ExperimentRow> rows;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    ExperimentRow row;
    row.antecedent_count = k;
    for (int set_i = 0; set_i < config.sets_per_count; ++set_i) {
      std::vector<CIStatement> ants;
      std::set<CIStatement, StatementLess> seen;
      while (static_cast<int>(ants.size()) < k) {
        CIStatement s = gen_elementary(u, rng);
        if (seen.insert(s).second) ants.push_back(s);  // rejection keeps k distinct
      }
      for (const CIStatement& consequent : elementary) {
        if (seen.contains(consequent)) continue;
        ++row.instances_tested;
        bool h1 = heuristic1(ants, consequent, config.h1_variant);
        bool h2 = heuristic2(ants, consequent);
        bool full = !includes(u, ants, consequent).holds;
        row.falsified_full += full;
        row.falsified_h1 += h1;
        row.falsified_h2 += h2;
        row.falsified_h1_or_h2 += h1 || h2;
        row.heuristic_unsound += (h1 || h2) && !full;
      }
    }
    row.ratio_combined_over_full =
        row.falsified_full == 0
            ? 0.0
            : static_cast<double>(row.falsified_h1_or_h2) / static_cast<double>(row.falsified_full);
    rows.push_back(row);
  }
  return rows;
}

std::string emit_csv(std::span<const ExperimentRow> rows) {
  std::string out = "k,instances,full,h1,h2,h1_or_h2,ratio\n";
  char buf[160];
  for (const ExperimentRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%llu,%llu,%llu,%.6f\n", r.antecedent_count,
                  static_cast<unsigned long long>(r.instances_tested),
                  static_cast<unsigned long long>(r.falsified_full),
                  static_cast<unsigned long long>(r.falsified_h1),
                  static_cast<unsigned long long>(r.falsified_h2),
                  static_cast<unsigned long long>(r.falsified_h1_or_h2),
                  r.ratio_combined_over_full);
    out += buf;
  }
  return out;
}

}  // namespace ci
