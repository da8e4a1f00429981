#include "zonelab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "zonelab/report_io.hpp"
#include "zonelab/zone.hpp"

namespace zonelab {

void validate_sweep(const SweepSpec& spec) {
  if (spec.n_values.empty())
    throw MalformedInputError("sweep needs at least one n value");
  if (!std::is_sorted(spec.n_values.begin(), spec.n_values.end()) ||
      std::adjacent_find(spec.n_values.begin(), spec.n_values.end()) !=
          spec.n_values.end())
    throw MalformedInputError("n values must be strictly increasing");
  if (spec.d < 1 || spec.d > 4)
    throw BudgetError("sweep supports 1 <= d <= 4");
  if (spec.n_values.back() > 12 || spec.n_values.front() < 0)
    throw BudgetError("sweep supports 0 <= n <= 12");
  if (spec.instances_per_n < 1 || spec.instances_per_n > 200)
    throw BudgetError("sweep supports at most 200 instances per n");
  for (const auto& id : spec.checks)
    if (std::find(known_check_ids().begin(), known_check_ids().end(), id) ==
        known_check_ids().end())
      throw MalformedInputError("unknown check id: " + id);
}

uint64_t sweep_instance_seed(uint64_t base_seed, int n, int index) {
  return base_seed ^ splitmix64((static_cast<uint64_t>(n) << 32) |
                                static_cast<uint64_t>(index));
}

namespace {

struct InstanceRows {
  std::string zone_row;
  std::string check_rows;
  bool any_fail = false;
  bool ratio_valid = false;
  Rat ratio;
};

InstanceRows run_instance(const SweepSpec& spec, int n, int index) {
  GenConfig cfg;
  cfg.seed = sweep_instance_seed(spec.base_seed, n, index);
  cfg.n = n;
  cfg.d = spec.d;
  cfg.coeff_bound = spec.coeff_bound;
  cfg.body_facets = spec.body_facets > 0 ? spec.body_facets : 2 * spec.d;
  cfg.body_scale = spec.body_scale;

  Instance inst = generate_instance(cfg);
  inst.hyperplanes = perturb(inst.hyperplanes, inst.body, 1024, cfg.seed);

  Arrangement arr = build_arrangement(inst.hyperplanes, inst.dim);
  ZoneAnalysis analysis = analyze_zone(arr, inst.body);

  CheckOptions options;
  options.only = spec.checks;
  options.include_recurrence =
      spec.checks.empty() ||
      std::find(spec.checks.begin(), spec.checks.end(),
                "deletion_recurrence") != spec.checks.end();

  InstanceRows rows;
  rows.zone_row = zone_csv_row(analysis.report);
  for (const CheckResult& r : run_checks(arr, inst.body, analysis, options)) {
    rows.check_rows += check_csv_row(r, cfg.seed);
    rows.any_fail |= r.failed();
  }
  rows.ratio_valid = analysis.report.ratio_valid;
  rows.ratio = analysis.report.ratio_cz;
  return rows;
}

}  // namespace

SweepOutput run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);

  struct Task {
    int n;
    int index;
  };
  std::vector<Task> tasks;
  for (int n : spec.n_values)
    for (int index = 0; index < spec.instances_per_n; ++index)
      tasks.push_back({n, index});

  // Instances are independent; run them on a pool and collect by task
  // index so the CSVs come out in (n, index) order regardless of timing.
  std::vector<InstanceRows> results(tasks.size());
  std::exception_ptr failure;
  std::atomic<size_t> cursor{0};
  std::atomic<bool> abort{false};
  std::mutex failure_mutex;
  auto worker = [&] {
    while (!abort.load()) {
      size_t at = cursor.fetch_add(1);
      if (at >= tasks.size()) return;
      try {
        results[at] = run_instance(spec, tasks[at].n, tasks[at].index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        abort.store(true);
        return;
      }
    }
  };
  unsigned pool = std::min<unsigned>(std::thread::hardware_concurrency(),
                                     static_cast<unsigned>(tasks.size()));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepOutput out;
  out.zones_csv = zone_csv_header();
  out.checks_csv = checks_csv_header();
  out.summary_csv = summary_csv_header();

  size_t at = 0;
  for (int n : spec.n_values) {
    SummaryRow summary;
    summary.d = spec.d;
    summary.n = n;
    for (int index = 0; index < spec.instances_per_n; ++index, ++at) {
      const InstanceRows& rows = results[at];
      out.zones_csv += rows.zone_row;
      out.checks_csv += rows.check_rows;
      out.any_fail |= rows.any_fail;
      ++summary.instances;
      if (rows.any_fail) ++summary.fails;
      if (rows.ratio_valid &&
          (!summary.ratio_valid || rows.ratio > summary.max_ratio)) {
        summary.ratio_valid = true;
        summary.max_ratio = rows.ratio;
      }
    }
    out.summary_csv += summary_csv_row(summary);
  }
  return out;
}

}  // namespace zonelab
