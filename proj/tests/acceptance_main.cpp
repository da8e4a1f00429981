// Acceptance suite: end-to-end gates over the whole pipeline, one line of
// output per criterion. Exits nonzero if any gate fails. All comparisons
// are exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "zonelab/checks.hpp"
#include "zonelab/instance_gen.hpp"
#include "zonelab/report_io.hpp"
#include "zonelab/sweep.hpp"
#include "zonelab/zone.hpp"

using namespace zonelab;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++failures;
  std::printf("[%s] %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              static_cast<long long>(ms), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Hyperplane> worked_lines() {
  return {Hyperplane(v({1, 0}), Rat(0)), Hyperplane(v({0, 1}), Rat(0))};
}

ConvexBody worked_box() {
  return ConvexBody::axis_box(v({1, -3}), v({2, 3}));
}

// Count rows in a checks CSV by (check_id, status-substring).
long count_rows(const std::string& csv, const std::string& id,
                const std::string& status) {
  long count = 0;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(id + ",", 0) == 0 &&
        line.find("," + status + ",") != std::string::npos)
      ++count;
  return count;
}

SweepSpec planar_spec() {
  SweepSpec spec;
  spec.d = 2;
  spec.n_values = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  spec.instances_per_n = 50;
  spec.base_seed = 20260810;
  return spec;
}

SweepSpec spatial_spec() {
  SweepSpec spec;
  spec.d = 3;
  spec.n_values = {3, 4, 5, 6, 7, 8};
  spec.instances_per_n = 20;
  spec.base_seed = 30260810;
  return spec;
}

}  // namespace

int main() {
  SweepOutput planar, spatial;

  criterion("1. worked instance: H={x=0,y=0}, K=[1,2]x[-3,3]", [&](std::string& detail) {
    Arrangement arr = build_arrangement(worked_lines(), 2);
    ConvexBody box = worked_box();
    ZoneReport rep = zone_report(arr, box);
    bool ok = rep.zone_cell_count == 2 && rep.tau == std::vector<long>{2, 2} &&
              rep.outer_complexity == 4 &&
              rep.crossing_faces == std::vector<long>{0, 1};
    CheckResult rec = check_deletion_recurrence(worked_lines(), box, 1);
    ok = ok && rec.status == CheckStatus::Pass && rec.lhs == 2 &&
         rec.rhs == 2;  // equality, exactly
    detail = "C(Z)=" + std::to_string(rep.outer_complexity) +
             " recurrence " + rat_to_string(rec.lhs) + "=" +
             rat_to_string(rec.rhs);
    return ok;
  });

  criterion("2. d=1: tau_0 <= 2 on 100 seeded instances", [&](std::string& detail) {
    long worst = -1;
    for (int k = 0; k < 100; ++k) {
      GenConfig cfg;
      cfg.d = 1;
      cfg.n = 1 + k % 10;
      cfg.seed = sweep_instance_seed(111, cfg.n, k);
      cfg.body_facets = 2;
      Instance inst = generate_instance(cfg);
      inst.hyperplanes = perturb(inst.hyperplanes, inst.body, 1024, cfg.seed);
      Arrangement arr = build_arrangement(inst.hyperplanes, 1);
      ZoneReport rep = zone_report(arr, inst.body);
      if (check_dim1_cap(rep).status != CheckStatus::Pass) return false;
      ZoneAnalysis analysis = analyze_zone(arr, inst.body);
      if (check_outer_facet_uniqueness(arr, analysis).failed()) return false;
      worst = std::max(worst, rep.tau[0]);
    }
    detail = "max tau_0 = " + std::to_string(worst);
    return true;
  });

  criterion("3. d=2 sweep: tau_1 <= 4n and tau_0 <= 12n, 50 instances per n in 2..10",
            [&](std::string& detail) {
    planar = run_sweep(planar_spec());
    long pass1 = count_rows(planar.checks_csv, "planar_tau1_4n", "PASS");
    long pass0 = count_rows(planar.checks_csv, "planar_tau0_12n", "PASS");
    long fails = count_rows(planar.checks_csv, "planar_tau1_4n", "FAIL") +
                 count_rows(planar.checks_csv, "planar_tau0_12n", "FAIL");
    detail = std::to_string(pass1) + "+" + std::to_string(pass0) +
             " PASS rows, " + std::to_string(fails) + " FAIL";
    return pass1 == 450 && pass0 == 450 && fails == 0 && !planar.any_fail;
  });

  criterion("4. d=3 sweep: tau_2 <= 4n^2, 20 instances per n in 3..8",
            [&](std::string& detail) {
    spatial = run_sweep(spatial_spec());
    long pass = count_rows(spatial.checks_csv, "tau_factorial_bound", "PASS");
    long fail = count_rows(spatial.checks_csv, "tau_factorial_bound", "FAIL");
    detail = std::to_string(pass) + " PASS rows, " + std::to_string(fail) +
             " FAIL";
    return pass == 120 && fail == 0 && !spatial.any_fail;
  });

  criterion("5. deletion recurrence exact on every sweep instance",
            [&](std::string& detail) {
    long planar_pass = count_rows(planar.checks_csv, "deletion_recurrence", "PASS");
    long spatial_pass = count_rows(spatial.checks_csv, "deletion_recurrence", "PASS");
    long fails = count_rows(planar.checks_csv, "deletion_recurrence", "FAIL") +
                 count_rows(spatial.checks_csv, "deletion_recurrence", "FAIL");
    long na = count_rows(planar.checks_csv, "deletion_recurrence",
                         "NOT_APPLICABLE") +
              count_rows(spatial.checks_csv, "deletion_recurrence",
                         "NOT_APPLICABLE");
    detail = std::to_string(planar_pass) + " planar + " +
             std::to_string(spatial_pass) + " spatial PASS, " +
             std::to_string(fails) + " FAIL, " + std::to_string(na) +
             " N/A";
    // One i value per planar instance, two per spatial instance.
    return planar_pass == 450 && spatial_pass == 240 && fails == 0 && na == 0;
  });

  criterion("6. outer facets bound one zone cell; non-convex mock trips the check",
            [&](std::string& detail) {
    long fails = count_rows(planar.checks_csv, "outer_facet_unique_cell", "FAIL") +
                 count_rows(spatial.checks_csv, "outer_facet_unique_cell", "FAIL");
    if (fails != 0) return false;

    // Mock: two disjoint boxes astride the line x=0, treated as a union.
    std::vector<Hyperplane> line = {Hyperplane(v({1, 0}), Rat(0))};
    Arrangement arr = build_arrangement(line, 2);
    ConvexBody right = ConvexBody::axis_box(v({1, 0}), v({2, 1}));
    ConvexBody left = ConvexBody::axis_box(v({-2, 0}), v({-1, 1}));
    std::set<int> zone;
    for (int idx : zone_cells(arr, right)) zone.insert(idx);
    for (int idx : zone_cells(arr, left)) zone.insert(idx);
    std::vector<int> zone_vec(zone.begin(), zone.end());
    CheckResult mock = check_outer_facet_uniqueness_core(
        arr, zone_vec, [&](const Face& f) {
          return classify_face(arr, f, right) == FaceClass::Outer &&
                 classify_face(arr, f, left) == FaceClass::Outer;
        });
    detail = "real sweeps clean; mock violation multiplicity " +
             rat_to_string(mock.lhs);
    return mock.status == CheckStatus::Fail;
  });

  criterion("7. oracle equivalence and the simple-arrangement count formula",
            [&](std::string& detail) {
    auto binom = [](long a, long b) {
      Int r;
      if (b < 0 || a < 0 || b > a) return Int(0);
      mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                   static_cast<unsigned long>(b));
      return r;
    };
    int closed_form_checked = 0;
    for (int k = 0; k < 50; ++k) {
      GenConfig cfg;
      cfg.d = 1 + k % 3;
      cfg.n = 2 + k % 5;  // up to 6
      cfg.seed = sweep_instance_seed(777, cfg.n, k);
      cfg.coeff_bound = 7;
      std::vector<Hyperplane> hs = random_hyperplanes(cfg);

      Arrangement arr = build_arrangement(hs, cfg.d);
      OracleResult oracle = enumerate_faces_oracle(hs, cfg.d);
      std::set<std::string> a, b;
      for (const Face& f : arr.faces()) a.insert(f.signs.str());
      for (const SignVector& sv : oracle.realizable) b.insert(sv.str());
      if (a != b || arr.face_counts() != oracle.counts) return false;

      if (general_position_check(hs, ConvexBody::whole_space(cfg.d)).ok()) {
        ++closed_form_checked;
        for (int dim = 0; dim <= cfg.d; ++dim) {
          Int expect = 0;
          for (int j = 0; j <= dim; ++j)
            expect += binom(cfg.n - cfg.d + dim, j);
          expect *= binom(cfg.n, cfg.d - dim);
          if (Int(arr.face_counts()[static_cast<size_t>(dim)]) != expect)
            return false;
        }
      }
    }
    detail = "50 instances, closed form checked on " +
             std::to_string(closed_form_checked);
    return closed_form_checked > 0;
  });

  criterion("8. scaling report: max C(Z)/(d n^{d-1}) per n; d=2 total <= 16n",
            [&](std::string& detail) {
    long pass = count_rows(planar.checks_csv, "planar_total_16n", "PASS");
    long fail = count_rows(planar.checks_csv, "planar_total_16n", "FAIL");
    if (pass != 450 || fail != 0) return false;
    long ratio_rows = count_rows(planar.checks_csv, "outer_ratio", "REPORT_ONLY") +
                      count_rows(spatial.checks_csv, "outer_ratio", "REPORT_ONLY");
    std::string summaries = planar.summary_csv + spatial.summary_csv;
    detail = std::to_string(ratio_rows) + " ratio rows; summaries:\n" +
             summaries;
    return ratio_rows == 450 + 120 && !summaries.empty();
  });

  criterion("9. sweeps are byte-identical when rerun", [&](std::string& detail) {
    SweepOutput planar2 = run_sweep(planar_spec());
    SweepOutput spatial2 = run_sweep(spatial_spec());
    bool ok = planar2.zones_csv == planar.zones_csv &&
              planar2.checks_csv == planar.checks_csv &&
              planar2.summary_csv == planar.summary_csv &&
              spatial2.zones_csv == spatial.zones_csv &&
              spatial2.checks_csv == spatial.checks_csv &&
              spatial2.summary_csv == spatial.summary_csv;
    detail = ok ? "both sweeps reproduced exactly" : "byte mismatch";
    return ok;
  });

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
