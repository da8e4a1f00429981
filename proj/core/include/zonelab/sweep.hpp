#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonelab/checks.hpp"
#include "zonelab/instance_gen.hpp"

namespace zonelab {

struct SweepSpec {
  int d = 2;
  std::vector<int> n_values;  // nonempty, strictly increasing
  int instances_per_n = 1;
  uint64_t base_seed = 0;
  std::vector<std::string> checks;  // empty = every applicable check

  // Generation knobs (defaults match the CLI).
  long coeff_bound = 10;
  int body_facets = 0;  // 0 = 2*d
  Rat body_scale = Rat(1);
};

// Desk-scale guard rails: d <= 4, n <= 12, at most 200 instances per n.
void validate_sweep(const SweepSpec& spec);

// seed for instance `index` at size n: base ^ splitmix64(n << 32 | index).
uint64_t sweep_instance_seed(uint64_t base_seed, int n, int index);

struct SweepOutput {
  std::string zones_csv;    // one zone row per instance
  std::string checks_csv;   // one row per instance per executed check
  std::string summary_csv;  // per n: instances, fails, max ratio
  bool any_fail = false;
};

// Runs every instance (generation, perturbation to general position,
// zone analysis, selected checks) over a worker pool; rows are emitted in
// (n, index) order no matter how the work is scheduled, so the output is
// byte-identical across runs and thread counts.
SweepOutput run_sweep(const SweepSpec& spec);

}  // namespace zonelab
