#include "zonelab/checks.hpp"

#include <algorithm>

namespace zonelab {

namespace {

const std::vector<std::string> kCheckIds = {
    "dim1_tau0_cap",      "planar_tau1_4n",          "planar_tau0_12n",
    "tau_factorial_bound", "deletion_recurrence",    "outer_facet_unique_cell",
    "tau1_vs_tau0",       "outer_ratio",             "planar_total_16n",
};

CheckResult make(const std::string& id, const ZoneReport& rep, int i = -1) {
  CheckResult r;
  r.check_id = id;
  r.n = rep.n;
  r.d = rep.d;
  r.i = i;
  return r;
}

CheckStatus verdict(const Rat& lhs, const Rat& rhs) {
  return lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "NOT_APPLICABLE";
    case CheckStatus::ReportOnly: return "REPORT_ONLY";
  }
  return "?";
}

std::span<const std::string> known_check_ids() { return kCheckIds; }

CheckResult check_dim1_cap(const ZoneReport& report) {
  CheckResult r = make("dim1_tau0_cap", report, 0);
  if (report.d != 1) return r;
  r.lhs = report.tau[0];
  r.rhs = 2;
  r.status = verdict(r.lhs, r.rhs);
  return r;
}

std::vector<CheckResult> check_planar_bounds(const ZoneReport& report) {
  CheckResult t1 = make("planar_tau1_4n", report, 1);
  CheckResult t0 = make("planar_tau0_12n", report, 0);
  if (report.d == 2) {
    t1.lhs = report.tau[1];
    t1.rhs = 4 * report.n;
    t1.status = verdict(t1.lhs, t1.rhs);
    t0.lhs = report.tau[0];
    t0.rhs = 12 * report.n;
    t0.status = verdict(t0.lhs, t0.rhs);
  }
  return {t1, t0};
}

CheckResult check_factorial_bound(const ZoneReport& report, int i) {
  CheckResult r = make("tau_factorial_bound", report, i);
  if (report.d < 3 || i < 2 || i >= report.d) return r;
  r.lhs = report.tau[static_cast<size_t>(i)];
  r.rhs = Rat(tau_upper_bound(report.n, report.d, i));
  r.status = verdict(r.lhs, r.rhs);
  return r;
}

std::vector<CheckResult> check_deletion_recurrence_all(
    std::span<const Hyperplane> hyperplanes, const ConvexBody& body) {
  const int n = static_cast<int>(hyperplanes.size());
  const int d = body.ambient_dim();
  std::vector<CheckResult> out;
  for (int i = 1; i < d; ++i) {
    CheckResult r;
    r.check_id = "deletion_recurrence";
    r.n = n;
    r.d = d;
    r.i = i;
    out.push_back(std::move(r));
  }
  if (out.empty()) return out;

  auto taus_of = [](std::vector<Hyperplane> hs, const ConvexBody& k,
                    int dim) -> std::vector<long> {
    Arrangement arr = build_arrangement(std::move(hs), dim);
    return zone_report(arr, k).tau;
  };

  try {
    std::vector<Hyperplane> all(hyperplanes.begin(), hyperplanes.end());
    std::vector<long> tau_full = taus_of(all, body, d);

    std::vector<long> deleted(static_cast<size_t>(d), 0);
    for (int drop = 0; drop < n; ++drop) {
      std::vector<Hyperplane> rest;
      for (int j = 0; j < n; ++j)
        if (j != drop) rest.push_back(all[static_cast<size_t>(j)]);
      std::vector<long> tau = taus_of(std::move(rest), body, d);
      for (int i = 0; i < d; ++i)
        deleted[static_cast<size_t>(i)] += tau[static_cast<size_t>(i)];
    }

    std::vector<long> restricted(static_cast<size_t>(d), 0);
    for (int pivot = 0; pivot < n; ++pivot) {
      Restriction res =
          restrict_to_hyperplane(all, all[static_cast<size_t>(pivot)]);
      ConvexBody sliced = intersect_body_with_flat(body, res.chart);
      std::vector<long> tau = taus_of(std::move(res.induced), sliced, d - 1);
      for (int i = 0; i < d - 1; ++i)
        restricted[static_cast<size_t>(i)] += tau[static_cast<size_t>(i)];
    }

    for (CheckResult& r : out) {
      const int i = r.i;
      r.lhs = Rat(n - d + i) * Rat(tau_full[static_cast<size_t>(i)]);
      r.rhs = Rat(deleted[static_cast<size_t>(i)] +
                  restricted[static_cast<size_t>(i - 1)]);
      r.status = verdict(r.lhs, r.rhs);
      r.note = "tau_i=" + std::to_string(tau_full[static_cast<size_t>(i)]) +
               " deleted=" + std::to_string(deleted[static_cast<size_t>(i)]) +
               " restricted=" +
               std::to_string(restricted[static_cast<size_t>(i - 1)]);
    }
  } catch (const DegenerateRestrictionError& e) {
    for (CheckResult& r : out) {
      r.status = CheckStatus::NotApplicable;
      r.note = e.what();
    }
  } catch (const GeneralPositionError&) {
    for (CheckResult& r : out) {
      r.status = CheckStatus::NotApplicable;
      r.note = "sub-instance violates general position";
    }
  } catch (const MalformedInputError& e) {
    for (CheckResult& r : out) {
      r.status = CheckStatus::NotApplicable;
      r.note = std::string("degenerate sub-instance: ") + e.what();
    }
  }
  return out;
}

CheckResult check_deletion_recurrence(std::span<const Hyperplane> hyperplanes,
                                      const ConvexBody& body, int i) {
  const int d = body.ambient_dim();
  if (i < 1 || i >= d) {
    CheckResult r;
    r.check_id = "deletion_recurrence";
    r.n = static_cast<int>(hyperplanes.size());
    r.d = d;
    r.i = i;
    return r;
  }
  for (CheckResult& r : check_deletion_recurrence_all(hyperplanes, body))
    if (r.i == i) return r;
  throw std::logic_error("recurrence index lost");
}

CheckResult check_outer_facet_uniqueness_core(
    const Arrangement& arr, std::span<const int> zone_cells,
    const std::function<bool(const Face&)>& facet_is_outer) {
  CheckResult r;
  r.check_id = "outer_facet_unique_cell";
  r.n = arr.hyperplane_count();
  r.d = arr.dim();
  std::vector<bool> in_zone(arr.faces().size(), false);
  for (int idx : zone_cells) in_zone[static_cast<size_t>(idx)] = true;

  long worst = 0;
  for (int idx : arr.faces_of_dim(arr.dim() - 1)) {
    const Face& facet = arr.faces()[static_cast<size_t>(idx)];
    if (!facet_is_outer(facet)) continue;
    long zone_count = 0;
    for (int cell : arr.incident_cells(facet))
      if (in_zone[static_cast<size_t>(cell)]) ++zone_count;
    worst = std::max(worst, zone_count);
    if (zone_count > 1 && r.note.empty())
      r.note = "outer facet " + facet.signs.str() + " bounds " +
               std::to_string(zone_count) + " zone cells";
  }
  r.lhs = worst;
  r.rhs = 1;
  r.status = verdict(r.lhs, r.rhs);
  return r;
}

CheckResult check_outer_facet_uniqueness(const Arrangement& arr,
                                         const ZoneAnalysis& analysis) {
  return check_outer_facet_uniqueness_core(
      arr, analysis.zone_cells, [&](const Face& facet) {
        const Face* found = arr.find(facet.signs);
        int idx = static_cast<int>(found - arr.faces().data());
        return analysis.classes[static_cast<size_t>(idx)] == FaceClass::Outer;
      });
}

CheckResult check_tau1_tau0_ratio(const Arrangement& arr,
                                  const ZoneAnalysis& analysis) {
  const ZoneReport& rep = analysis.report;
  CheckResult r = make("tau1_vs_tau0", rep, 1);
  if (rep.d < 3) return r;
  r.status = CheckStatus::ReportOnly;
  r.lhs = rep.tau[1];
  r.rhs = Rat(rep.d, 2) * Rat(rep.tau[0]);
  r.rhs.canonicalize();

  // Each 1-border charges the 0-borders at its edge's endpoints; an edge
  // with fewer than two endpoints (a ray or full line) escapes part of
  // that charge. Report the bound with that allowance restored.
  long missing_endpoints = 0;
  std::vector<int> vertices = arr.faces_of_dim(0);
  for (const Border& b : analysis.borders[1]) {
    const Face& edge = arr.faces()[static_cast<size_t>(b.face_index)];
    long endpoints = 0;
    for (int v : vertices)
      if (conforms(arr.faces()[static_cast<size_t>(v)].signs, edge.signs))
        ++endpoints;
    missing_endpoints += 2 - endpoints;
  }
  Rat adjusted = r.rhs + Rat(missing_endpoints, 2);
  adjusted.canonicalize();
  r.note = "adjusted_rhs=" + rat_to_string(adjusted) +
           " missing_endpoints=" + std::to_string(missing_endpoints);
  return r;
}

std::vector<CheckResult> check_scaling_ratio(const ZoneReport& report) {
  std::vector<CheckResult> out;
  CheckResult ratio = make("outer_ratio", report);
  if (report.ratio_valid) {
    ratio.status = CheckStatus::ReportOnly;
    ratio.lhs = report.ratio_cz;
    ratio.rhs = 0;
    ratio.note = "C(Z) / (d n^{d-1})";
  }
  out.push_back(ratio);
  if (report.d == 2) {
    CheckResult total = make("planar_total_16n", report);
    total.lhs = report.outer_complexity;
    total.rhs = 16 * report.n;
    total.status = verdict(total.lhs, total.rhs);
    out.push_back(total);
  }
  return out;
}

std::vector<CheckResult> run_checks(const Arrangement& arr,
                                    const ConvexBody& body,
                                    const ZoneAnalysis& analysis,
                                    const CheckOptions& options) {
  const ZoneReport& rep = analysis.report;
  std::vector<CheckResult> all;

  if (rep.d == 1) all.push_back(check_dim1_cap(rep));
  if (rep.d == 2)
    for (auto& r : check_planar_bounds(rep)) all.push_back(std::move(r));
  for (int i = 2; i < rep.d; ++i)
    all.push_back(check_factorial_bound(rep, i));
  if (options.include_recurrence)
    for (auto& r : check_deletion_recurrence_all(arr.hyperplanes(), body))
      all.push_back(std::move(r));
  if (rep.d >= 1) all.push_back(check_outer_facet_uniqueness(arr, analysis));
  if (rep.d >= 3) all.push_back(check_tau1_tau0_ratio(arr, analysis));
  for (auto& r : check_scaling_ratio(rep)) all.push_back(std::move(r));

  if (options.only.empty()) return all;
  std::vector<CheckResult> filtered;
  for (auto& r : all)
    if (std::find(options.only.begin(), options.only.end(), r.check_id) !=
        options.only.end())
      filtered.push_back(std::move(r));
  return filtered;
}

}  // namespace zonelab
