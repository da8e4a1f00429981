#include <benchmark/benchmark.h>

#include "zonelab/instance_gen.hpp"
#include "zonelab/solve.hpp"
#include "zonelab/zone.hpp"

using namespace zonelab;

namespace {

Instance make_instance(int n, int d, uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.seed = seed;
  cfg.body_facets = 2 * d;
  Instance inst = generate_instance(cfg);
  inst.hyperplanes = perturb(inst.hyperplanes, inst.body, 1024, seed);
  return inst;
}

void BM_feasible(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Instance inst = make_instance(6, d, 17);
  Arrangement arr = build_arrangement(inst.hyperplanes, d);
  // Classify the lexicographically first cell against the body.
  const Face& cell =
      arr.faces()[static_cast<size_t>(arr.faces_of_dim(d).front())];
  std::vector<LinearConstraint> cs = arr.face_constraints(cell);
  cs.insert(cs.end(), inst.body.halfspaces().begin(),
            inst.body.halfspaces().end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(feasible(cs, d).ok);
  }
}
BENCHMARK(BM_feasible)->Arg(2)->Arg(3)->Arg(4);

void BM_build_arrangement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  Instance inst = make_instance(n, d, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_arrangement(inst.hyperplanes, d).faces().size());
  }
}
BENCHMARK(BM_build_arrangement)->Args({6, 2})->Args({10, 2})->Args({6, 3});

void BM_zone_report(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  Instance inst = make_instance(n, d, 29);
  Arrangement arr = build_arrangement(inst.hyperplanes, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zone_report(arr, inst.body).outer_complexity);
  }
}
BENCHMARK(BM_zone_report)->Args({6, 2})->Args({10, 2})->Args({6, 3});

}  // namespace

BENCHMARK_MAIN();
