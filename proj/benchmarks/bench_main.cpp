#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ci/experiment.hpp"
#include "ci/falsify.hpp"
#include "ci/inference.hpp"
#include "ci/lattice.hpp"
#include "ci/text.hpp"

namespace {

ci::Universe make_universe(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return ci::Universe{names};
}

void BM_EnumerateLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ci::Universe u = make_universe(n);
  ci::CIStatement c =
      ci::CIStatement::make(ci::singleton(0), ci::singleton(1), ci::singleton(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ci::enumerate_lattice(u, c));
  }
}
BENCHMARK(BM_EnumerateLattice)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_Inclusion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ci::Universe u = make_universe(n);
  std::mt19937_64 rng(1);
  std::vector<ci::CIStatement> ants;
  auto elem = ci::all_elementary(make_universe(std::min(n, 6)));
  for (int i = 0; i < 6; ++i) ants.push_back(elem[rng() % elem.size()]);
  ci::CIStatement c = elem[rng() % elem.size()];
  for (auto _ : state) {
    benchmark::DoNotOptimize(ci::includes(u, ants, c));
  }
}
BENCHMARK(BM_Inclusion)->Arg(6)->Arg(12)->Arg(18);

void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ci::Universe u = make_universe(n);
  std::mt19937_64 rng(2);
  auto elem = ci::all_elementary(u);
  std::vector<ci::CIStatement> ants;
  for (int i = 0; i < 4; ++i) ants.push_back(elem[rng() % elem.size()]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ci::closure(u, ants, ci::RuleSet::system_a()));
  }
}
BENCHMARK(BM_Closure)->Arg(4)->Arg(5);

void BM_ExperimentInstances(benchmark::State& state) {
  ci::ExperimentConfig cfg;
  cfg.k_min = 5;
  cfg.k_max = 5;
  cfg.sets_per_count = static_cast<int>(state.range(0));
  cfg.seed = 3;
  std::uint64_t instances = 0;
  for (auto _ : state) {
    auto rows = ci::run_experiment(cfg);
    instances += rows[0].instances_tested;
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(instances));
}
BENCHMARK(BM_ExperimentInstances)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
