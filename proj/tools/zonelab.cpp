// zonelab: build hyperplane arrangements over exact rationals, compute the
// zone of a convex body's boundary, and verify the outer-complexity bounds
// on generated instances.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zonelab/checks.hpp"
#include "zonelab/instance_io.hpp"
#include "zonelab/report_io.hpp"
#include "zonelab/svg_render.hpp"
#include "zonelab/sweep.hpp"
#include "zonelab/zone.hpp"

namespace {

using namespace zonelab;

constexpr int kExitFail = 1;   // a check with explicit constants failed
constexpr int kExitError = 2;  // bad input, degenerate instance, I/O trouble

std::optional<uint64_t> env_seed_override() {
  const char* env = std::getenv("ZONELAB_SEED");
  if (!env || !*env) return std::nullopt;
  return std::stoull(env);
}

struct PreparedInstance {
  Instance instance;
  GpReport gp;
};

// Loads an instance and brings it into general position when asked to.
PreparedInstance load_instance(const std::string& path, bool allow_perturb) {
  Instance inst = instance_from_json(read_text_file(path));
  GpReport gp = general_position_check(inst.hyperplanes, inst.body);
  if (!gp.ok()) {
    if (!allow_perturb) throw GeneralPositionError(std::move(gp));
    inst.hyperplanes = perturb(inst.hyperplanes, inst.body, 1024, inst.seed);
    gp = general_position_check(inst.hyperplanes, inst.body);
  }
  return {std::move(inst), std::move(gp)};
}

int cmd_gen(const GenConfig& cfg, const std::string& out_path) {
  Instance inst = generate_instance(cfg);
  write_text_file(out_path, instance_to_json(inst));
  return 0;
}

int cmd_zone(const std::string& in_path, const std::string& out_path,
             bool dump_borders, bool allow_perturb) {
  PreparedInstance prepared = load_instance(in_path, allow_perturb);
  Arrangement arr =
      build_arrangement(prepared.instance.hyperplanes, prepared.instance.dim);
  ZoneAnalysis analysis = analyze_zone(arr, prepared.instance.body);

  std::string out = zone_csv_header() + zone_csv_row(analysis.report);
  if (dump_borders) out += borders_dump(arr, analysis);
  if (out_path.empty())
    std::cout << out;
  else
    write_text_file(out_path, out);
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& out_path,
               bool allow_perturb) {
  PreparedInstance prepared = load_instance(in_path, allow_perturb);
  Arrangement arr =
      build_arrangement(prepared.instance.hyperplanes, prepared.instance.dim);
  ZoneAnalysis analysis = analyze_zone(arr, prepared.instance.body);

  bool any_fail = false;
  std::string out = checks_csv_header();
  for (const CheckResult& r :
       run_checks(arr, prepared.instance.body, analysis)) {
    out += check_csv_row(r, prepared.instance.seed);
    any_fail |= r.failed();
  }
  if (out_path.empty())
    std::cout << out;
  else
    write_text_file(out_path, out);
  return any_fail ? kExitFail : 0;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_dir) {
  SweepOutput out = run_sweep(spec);
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir + "/zones.csv", out.zones_csv);
  write_text_file(out_dir + "/checks.csv", out.checks_csv);
  write_text_file(out_dir + "/summary.csv", out.summary_csv);
  std::cout << out.summary_csv;
  if (out.any_fail) {
    std::cerr << "sweep encountered FAILed checks\n";
    return kExitFail;
  }
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& out_path) {
  Instance inst = instance_from_json(read_text_file(in_path));
  Arrangement arr = build_arrangement(inst.hyperplanes, inst.dim);
  write_text_file(out_path, render_svg(arr, inst.body));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zone-complexity laboratory for hyperplane arrangements"};
  app.require_subcommand(1);

  // gen
  GenConfig cfg;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--n", cfg.n, "number of hyperplanes")->required();
  gen->add_option("--d", cfg.d, "ambient dimension")->required();
  gen->add_option("--seed", cfg.seed, "RNG seed");
  gen->add_option("--coeff-bound", cfg.coeff_bound,
                  "coefficients drawn from [-bound, bound]");
  int body_facets = 0;
  gen->add_option("--body-facets", body_facets,
                  "halfspaces of the body (default 2*d)");
  std::string body_scale = "1";
  gen->add_option("--body-scale", body_scale, "body slack scale (rational)");
  gen->add_option("--out", gen_out, "output instance path")->required();

  // zone
  std::string zone_in, zone_out;
  bool zone_dump = false, zone_perturb = false;
  auto* zone = app.add_subcommand("zone", "zone report for an instance");
  zone->add_option("--in", zone_in, "instance file")->required();
  zone->add_option("--out", zone_out, "write the report here (default stdout)");
  zone->add_flag("--dump-borders", zone_dump, "list borders after the row");
  zone->add_flag("--perturb", zone_perturb,
                 "perturb a degenerate instance instead of refusing");

  // verify
  std::string verify_in, verify_out;
  bool verify_perturb = false;
  auto* verify =
      app.add_subcommand("verify", "run every applicable bound check");
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--out", verify_out, "write check rows here");
  verify->add_flag("--perturb", verify_perturb,
                   "perturb a degenerate instance instead of refusing");

  // sweep
  SweepSpec spec;
  std::string sweep_out_dir;
  std::vector<std::string> sweep_checks;
  auto* sweep = app.add_subcommand("sweep", "seeded experiment sweep");
  sweep->add_option("--d", spec.d, "ambient dimension")->required();
  sweep->add_option("--n", spec.n_values, "n values (repeat or comma list)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--instances", spec.instances_per_n, "instances per n")
      ->required();
  sweep->add_option("--seed", spec.base_seed, "base seed");
  sweep->add_option("--checks", sweep_checks,
                    "check ids to run (default: all applicable)")
      ->delimiter(',');
  sweep->add_option("--coeff-bound", spec.coeff_bound, "coefficient bound");
  sweep->add_option("--out-dir", sweep_out_dir, "output directory")
      ->required();

  // render
  std::string render_in, render_out;
  auto* render = app.add_subcommand("render", "SVG drawing (d = 2 only)");
  render->add_option("--in", render_in, "instance file")->required();
  render->add_option("--out", render_out, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (auto env = env_seed_override()) cfg.seed = *env;
      cfg.body_facets = body_facets > 0 ? body_facets : 2 * cfg.d;
      cfg.body_scale = rat_from_string(body_scale);
      return cmd_gen(cfg, gen_out);
    }
    if (zone->parsed())
      return cmd_zone(zone_in, zone_out, zone_dump, zone_perturb);
    if (verify->parsed())
      return cmd_verify(verify_in, verify_out, verify_perturb);
    if (sweep->parsed()) {
      if (auto env = env_seed_override()) spec.base_seed = *env;
      spec.checks = sweep_checks;
      return cmd_sweep(spec, sweep_out_dir);
    }
    if (render->parsed()) return cmd_render(render_in, render_out);
  } catch (const GeneralPositionError& e) {
    std::cerr << e.what() << "(run with --perturb to displace hyperplanes)\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
