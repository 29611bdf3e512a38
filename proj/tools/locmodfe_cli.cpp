// Command line front end for the locmodfe experiment drivers.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "locmodfe/driver.hpp"

namespace {

// Parses "a..b" (or a single level "a") into [min, max].
void parse_levels(const std::string& s, int& lo, int& hi) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(s);
    return;
  }
  lo = std::stoi(s.substr(0, dots));
  hi = std::stoi(s.substr(dots + 2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "locmodfe: locally modified finite elements for elliptic interface "
      "problems"};

  std::string levels, solvers, basis, b_midpoint, param_file;
  locmodfe::RunConfig cfg;  // defaults; CLI values applied after the file

  auto* opt_test_case =
      app.add_option("--test-case", cfg.test_case,
                     "Experiment: 1 = refinement study, 2 = interface sweep")
          ->check(CLI::Range(1, 2));
  auto* opt_levels = app.add_option(
      "--levels", levels, "Refinement levels for test case 1, e.g. 0..4");
  auto* opt_basis =
      app.add_option("--basis", basis, "standard | hierarchical | both");
  auto* opt_solvers = app.add_option(
      "--solvers", solvers, "Comma-separated subset of cg,dpcg,ssor");
  auto* opt_stride =
      app.add_option("--stride", cfg.stride, "Sweep step for test case 2");
  auto* opt_n_sweep = app.add_option("--n-sweep", cfg.n_sweep,
                                     "Sweep resolution N of test case 2");
  auto* opt_sweep_level = app.add_option("--sweep-level", cfg.sweep_level,
                                         "Mesh level of test case 2");
  auto* opt_omega =
      app.add_option("--omega", cfg.omega, "SSOR relaxation parameter");
  auto* opt_tol =
      app.add_option("--tol", cfg.tol, "Absolute residual tolerance");
  auto* opt_out = app.add_option("--out", cfg.out_dir, "Output directory");
  auto* opt_kappa1 =
      app.add_option("--kappa1", cfg.kappa1, "Diffusion inside the circle");
  auto* opt_kappa2 =
      app.add_option("--kappa2", cfg.kappa2, "Diffusion outside the circle");
  auto* opt_y_offset = app.add_option("--y-offset", cfg.y_offset,
                                      "Circle center offset for test case 1");
  auto* opt_vtk_every = app.add_option(
      "--vtk-every", cfg.vtk_every,
      "Write VTK every n-th level / sweep position (0 = never)");
  auto* opt_threads =
      app.add_option("--threads", cfg.threads, "OpenMP threads (1 = serial)");
  auto* opt_b_midpoint = app.add_option(
      "--b-midpoint", b_midpoint,
      "Center rule for configuration B: intersection | edge-average");
  auto* opt_flux =
      app.add_flag("--flux-jump,!--no-flux-jump", cfg.flux_jump,
                   "Include the interface flux term (default on)");
  auto* opt_export = app.add_flag("--export-matrix", cfg.export_matrix,
                                  "Write assembled matrices (MatrixMarket)");
  app.add_option("--param-file", param_file,
                 "Parameter file (key = value); CLI flags override it");

  CLI11_PARSE(app, argc, argv);

  try {
    locmodfe::RunConfig file_cfg;
    if (!param_file.empty()) locmodfe::load_param_file(param_file, file_cfg);

    // Start from the file values, then apply every flag given on the CLI.
    locmodfe::RunConfig run = param_file.empty() ? cfg : file_cfg;
    if (opt_test_case->count()) run.test_case = cfg.test_case;
    if (opt_levels->count()) parse_levels(levels, run.level_min, run.level_max);
    if (opt_basis->count()) run.basis = basis;
    if (opt_solvers->count()) run.solvers = locmodfe::parse_solver_list(solvers);
    if (opt_stride->count()) run.stride = cfg.stride;
    if (opt_n_sweep->count()) run.n_sweep = cfg.n_sweep;
    if (opt_sweep_level->count()) run.sweep_level = cfg.sweep_level;
    if (opt_omega->count()) run.omega = cfg.omega;
    if (opt_tol->count()) run.tol = cfg.tol;
    if (opt_out->count()) run.out_dir = cfg.out_dir;
    if (opt_kappa1->count()) run.kappa1 = cfg.kappa1;
    if (opt_kappa2->count()) run.kappa2 = cfg.kappa2;
    if (opt_y_offset->count()) run.y_offset = cfg.y_offset;
    if (opt_vtk_every->count()) run.vtk_every = cfg.vtk_every;
    if (opt_threads->count()) run.threads = cfg.threads;
    if (opt_b_midpoint->count()) {
      if (b_midpoint == "intersection") {
        run.b_midpoint = locmodfe::BMidpointRule::Intersection;
      } else if (b_midpoint == "edge-average") {
        run.b_midpoint = locmodfe::BMidpointRule::EdgeAverage;
      } else {
        throw std::runtime_error("invalid --b-midpoint '" + b_midpoint + "'");
      }
    }
    if (opt_flux->count()) run.flux_jump = cfg.flux_jump;
    if (opt_export->count()) run.export_matrix = cfg.export_matrix;

    if (run.test_case == 1) {
      locmodfe::run_example1(run);
    } else {
      locmodfe::run_example2(run);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
