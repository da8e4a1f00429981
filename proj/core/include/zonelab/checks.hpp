#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zonelab/zone.hpp"

namespace zonelab {

enum class CheckStatus { Pass, Fail, NotApplicable, ReportOnly };

const char* check_status_name(CheckStatus s);

// One executed check. For inequality checks the verdict is lhs <= rhs,
// exactly; REPORT_ONLY rows carry measured quantities and never fail.
struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::NotApplicable;
  Rat lhs;
  Rat rhs;
  int n = 0;
  int d = 0;
  int i = -1;  // border dimension when indexed, else -1
  std::string note;

  bool failed() const { return status == CheckStatus::Fail; }
};

// d=1: tau_0 <= 2. K is an interval (or ray) on the line, so at most two
// outer vertices can touch the zone.
CheckResult check_dim1_cap(const ZoneReport& report);

// d=2: tau_1 <= 4n and tau_0 <= 12n.
std::vector<CheckResult> check_planar_bounds(const ZoneReport& report);

// d >= 3, 2 <= i < d: tau_i <= 4 (d-i)! C(n, d-i) n^{i-1}.
CheckResult check_factorial_bound(const ZoneReport& report, int i);

// (n-d+i) tau_i(K,H) <= sum_h tau_i(K, H\{h}) + sum_h tau_{i-1}(K∩h, H∩h),
// every term recomputed from scratch on the sub-instance. Degenerate
// sub-instances yield NOT_APPLICABLE naming the offending hyperplane.
CheckResult check_deletion_recurrence(std::span<const Hyperplane> hyperplanes,
                                      const ConvexBody& body, int i);

// Same inequality for every 1 <= i < d at once; the deleted and restricted
// sub-instances are rebuilt once and shared across the i values.
std::vector<CheckResult> check_deletion_recurrence_all(
    std::span<const Hyperplane> hyperplanes, const ConvexBody& body);

// A facet disjoint from K bounds at most one zone cell. The core is
// parameterized over the zone and the outer test so a deliberately
// non-convex classifier can demonstrate a violation in tests.
CheckResult check_outer_facet_uniqueness_core(
    const Arrangement& arr, std::span<const int> zone_cells,
    const std::function<bool(const Face&)>& facet_is_outer);
CheckResult check_outer_facet_uniqueness(const Arrangement& arr,
                                         const ZoneAnalysis& analysis);

// d >= 3, report-only: tau_1 against (d/2) tau_0. The charging argument
// behind the inequality gives two tau_0 hits per 1-border only when the
// edge has both endpoints; the note carries the bound corrected by the
// missing-endpoint allowance.
CheckResult check_tau1_tau0_ratio(const Arrangement& arr,
                                  const ZoneAnalysis& analysis);

// Report-only scaling ratio C(Z) / (d n^{d-1}); for d=2 also the exact
// total bound C(Z) <= 16n, which does pass or fail.
std::vector<CheckResult> check_scaling_ratio(const ZoneReport& report);

struct CheckOptions {
  bool include_recurrence = true;
  std::vector<std::string> only;  // empty = every applicable check
};

// Runs every check applicable to the instance's (n, d).
std::vector<CheckResult> run_checks(const Arrangement& arr,
                                    const ConvexBody& body,
                                    const ZoneAnalysis& analysis,
                                    const CheckOptions& options = {});

// All known check ids, for CLI validation.
std::span<const std::string> known_check_ids();

}  // namespace zonelab
