#include "locmodfe/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "locmodfe/dof_map.hpp"
#include "locmodfe/level_set.hpp"
#include "locmodfe/postprocess.hpp"
#include "locmodfe/problems.hpp"
#include "locmodfe/system.hpp"

namespace locmodfe {

const char* basis_name(BasisKind b) {
  return b == BasisKind::Standard ? "standard" : "hierarchical";
}

PlacementMode placement_for(BasisKind b) {
  return b == BasisKind::Standard ? PlacementMode::Standard
                                  : PlacementMode::Hierarchical;
}

std::vector<BasisKind> bases_from_config(const RunConfig& config) {
  if (config.basis == "standard") return {BasisKind::Standard};
  if (config.basis == "hierarchical") return {BasisKind::Hierarchical};
  if (config.basis == "both")
    return {BasisKind::Standard, BasisKind::Hierarchical};
  throw std::runtime_error("unknown basis '" + config.basis +
                           "' (expected standard, hierarchical or both)");
}

std::vector<SolverKind> parse_solver_list(const std::string& s) {
  std::vector<SolverKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "cg") {
      out.push_back(SolverKind::CG);
    } else if (item == "dpcg") {
      out.push_back(SolverKind::PCGJacobi);
    } else if (item == "ssor") {
      out.push_back(SolverKind::PCGSSOR);
    } else {
      throw std::runtime_error("unknown solver '" + item +
                               "' (expected cg, dpcg or ssor)");
    }
  }
  if (out.empty()) throw std::runtime_error("empty solver list");
  return out;
}

namespace {

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw std::runtime_error("invalid boolean value '" + v + "'");
}

BMidpointRule parse_b_midpoint(const std::string& v) {
  if (v == "intersection") return BMidpointRule::Intersection;
  if (v == "edge-average") return BMidpointRule::EdgeAverage;
  throw std::runtime_error("invalid b_midpoint '" + v +
                           "' (expected intersection or edge-average)");
}

}  // namespace

void load_param_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "test_case") {
      config.test_case = std::stoi(val);
    } else if (key == "level_min") {
      config.level_min = std::stoi(val);
    } else if (key == "level_max") {
      config.level_max = std::stoi(val);
    } else if (key == "basis") {
      config.basis = val;
    } else if (key == "solvers") {
      config.solvers = parse_solver_list(val);
    } else if (key == "n_sweep") {
      config.n_sweep = std::stoi(val);
    } else if (key == "stride") {
      config.stride = std::stoi(val);
    } else if (key == "sweep_level") {
      config.sweep_level = std::stoi(val);
    } else if (key == "kappa1") {
      config.kappa1 = std::stod(val);
    } else if (key == "kappa2") {
      config.kappa2 = std::stod(val);
    } else if (key == "y_offset") {
      config.y_offset = std::stod(val);
    } else if (key == "flux_jump") {
      config.flux_jump = parse_bool(val);
    } else if (key == "omega") {
      config.omega = std::stod(val);
    } else if (key == "tol") {
      config.tol = std::stod(val);
    } else if (key == "threads") {
      config.threads = std::stoi(val);
    } else if (key == "b_midpoint") {
      config.b_midpoint = parse_b_midpoint(val);
    } else if (key == "out_dir") {
      config.out_dir = val;
    } else if (key == "vtk_every") {
      config.vtk_every = std::stoi(val);
    } else if (key == "export_matrix") {
      config.export_matrix = parse_bool(val);
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
}

double fitted_rate(const std::vector<int>& levels,
                   const std::vector<double>& errors) {
  // Least-squares slope of log2(error) against level, negated.
  const std::size_t n = levels.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = levels[i];
    const double y = std::log2(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

void validate(const RunConfig& config) {
  if (config.stride < 1) throw std::runtime_error("stride must be >= 1");
  if (config.level_min < 0 || config.level_max > 8 ||
      config.level_min > config.level_max)
    throw std::runtime_error("levels must satisfy 0 <= min <= max <= 8");
  if (config.n_sweep < 1) throw std::runtime_error("n_sweep must be >= 1");
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions o;
  o.tol = config.tol;
  o.omega = config.omega;
  o.threads = config.threads;
  return o;
}

PatchMesh::Options mesh_options(const RunConfig& config, BasisKind basis) {
  PatchMesh::Options o;
  o.mode = placement_for(basis);
  o.b_rule = config.b_midpoint;
  return o;
}

std::string out_path(const RunConfig& config, const std::string& name) {
  return (std::filesystem::path(config.out_dir) / name).string();
}

void write_example1_csv(const RunConfig& config,
                        const std::vector<Example1Row>& rows) {
  std::FILE* f = std::fopen(out_path(config, "example1.csv").c_str(), "w");
  if (!f) throw std::runtime_error("cannot write example1.csv");
  std::fprintf(f, "# locmodfe csv v1\n");
  std::fprintf(f,
               "level,patches,dofs,solver,basis,iterations,l2_error,h1_error,"
               "l2_rate,h1_rate,converged\n");
  for (const auto& r : rows) {
    std::fprintf(f, "%d,%d,%d,%s,%s,%d,%.12e,%.12e,", r.level, r.patches,
                 r.dofs, solver_name(r.solver), basis_name(r.basis),
                 r.iterations, r.l2_error, r.h1_error);
    if (r.has_rates) {
      std::fprintf(f, "%.4f,%.4f,", r.l2_rate, r.h1_rate);
    } else {
      std::fprintf(f, ",,");
    }
    std::fprintf(f, "%d\n", r.converged ? 1 : 0);
  }
  std::fclose(f);
}

void write_example2_csv(const RunConfig& config,
                        const std::vector<Example2Row>& rows) {
  std::FILE* f = std::fopen(out_path(config, "example2.csv").c_str(), "w");
  if (!f) throw std::runtime_error("cannot write example2.csv");
  std::fprintf(f, "# locmodfe csv v1\n");
  std::fprintf(f, "k,y_offset,solver,basis,iterations,converged\n");
  for (const auto& r : rows)
    std::fprintf(f, "%d,%.12g,%s,%s,%d,%d\n", r.k, r.y_offset,
                 solver_name(r.solver), basis_name(r.basis), r.iterations,
                 r.converged ? 1 : 0);
  std::fclose(f);
}

void write_stats_csv(const RunConfig& config, const StatsRow& row) {
  const std::string name = "stats_k" + std::to_string(row.k) + ".csv";
  std::FILE* f = std::fopen(out_path(config, name).c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + name);
  std::fprintf(f, "# locmodfe csv v1\n");
  std::fprintf(
      f, "k,y_offset,area_max,area_min,area_ratio,edge_max,edge_min,aspect_max\n");
  const MeshStatistics& s = row.stats;
  std::fprintf(f, "%d,%.12g,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", row.k,
               row.y_offset, s.area_max, s.area_min, s.area_ratio, s.edge_max,
               s.edge_min, s.aspect_max);
  std::fclose(f);
}

}  // namespace

Example1Result run_example1(const RunConfig& config) {
  validate(config);
  Example1Result result;
  const bool write_files = !config.out_dir.empty();
  if (write_files) std::filesystem::create_directories(config.out_dir);

  const InterfaceProblem problem = make_disc_problem(
      config.kappa1, config.kappa2, config.y_offset, config.flux_jump);

  for (BasisKind basis : bases_from_config(config)) {
    std::map<SolverKind, std::pair<double, double>> prev_errors;
    for (int level = config.level_min; level <= config.level_max; ++level) {
      const int n = 4 * (1 << level);
      const CircleLevelSet circle({0.0, config.y_offset}, 0.5);
      const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, n,
                           mesh_options(config, basis));
      const DofMap dofs(mesh);
      LinearSystem system(mesh, dofs);
      system.assemble(problem, basis, config.threads);

      std::vector<double> x;
      for (SolverKind solver : config.solvers) {
        const SolveReport rep =
            solve(solver, system.matrix(), system.rhs(), x, solve_options(config));
        const ErrorNorms err = compute_errors(mesh, x, basis, problem);

        Example1Row row;
        row.level = level;
        row.patches = mesh.n_patches();
        row.dofs = dofs.n_dofs();
        row.solver = solver;
        row.basis = basis;
        row.iterations = rep.iterations;
        row.converged = rep.converged;
        row.l2_error = err.l2;
        row.h1_error = err.h1;
        const auto it = prev_errors.find(solver);
        if (it != prev_errors.end()) {
          row.has_rates = true;
          row.l2_rate = convergence_rate(it->second.first, err.l2);
          row.h1_rate = convergence_rate(it->second.second, err.h1);
        }
        prev_errors[solver] = {err.l2, err.h1};
        result.rows.push_back(row);

        std::cout << "example1 level=" << level << " basis=" << basis_name(basis)
                  << " solver=" << solver_name(solver)
                  << " iterations=" << rep.iterations << " l2=" << err.l2
                  << " h1=" << err.h1 << (rep.converged ? "" : " NOT-CONVERGED")
                  << "\n";
      }

      if (write_files && config.vtk_every > 0 &&
          (level - config.level_min) % config.vtk_every == 0) {
        const std::string name = "solution_l" + std::to_string(level) + "_" +
                                 basis_name(basis) + ".vtk";
        write_vtk(out_path(config, name), mesh,
                  nodal_values(mesh, basis, x));
      }
      if (write_files && config.export_matrix) {
        const std::string name = "matrix_l" + std::to_string(level) + "_" +
                                 basis_name(basis) + ".mtx";
        system.matrix().write_matrix_market(out_path(config, name));
      }
    }
  }

  if (write_files) write_example1_csv(config, result.rows);
  return result;
}

Example2Result run_example2(const RunConfig& config) {
  validate(config);
  Example2Result result;
  const bool write_files = !config.out_dir.empty();
  if (write_files) std::filesystem::create_directories(config.out_dir);

  const int n = 4 * (1 << config.sweep_level);
  const double h_patch = 2.0 / n;

  int sweep_index = 0;
  for (int k = 0; k < config.n_sweep; k += config.stride, ++sweep_index) {
    const double y = static_cast<double>(k) / config.n_sweep * h_patch;
    const CircleLevelSet circle({0.0, y}, 0.5);
    const InterfaceProblem problem =
        make_disc_problem(config.kappa1, config.kappa2, y, config.flux_jump);

    for (BasisKind basis : bases_from_config(config)) {
      const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, n,
                           mesh_options(config, basis));
      const DofMap dofs(mesh);
      LinearSystem system(mesh, dofs);
      system.assemble(problem, basis, config.threads);

      std::vector<double> x;
      for (SolverKind solver : config.solvers) {
        const SolveReport rep =
            solve(solver, system.matrix(), system.rhs(), x, solve_options(config));
        Example2Row row;
        row.k = k;
        row.y_offset = y;
        row.solver = solver;
        row.basis = basis;
        row.iterations = rep.iterations;
        row.converged = rep.converged;
        result.rows.push_back(row);
        std::cout << "example2 k=" << k << " basis=" << basis_name(basis)
                  << " solver=" << solver_name(solver)
                  << " iterations=" << rep.iterations
                  << (rep.converged ? "" : " NOT-CONVERGED") << "\n";
      }

      if (write_files && config.vtk_every > 0 &&
          sweep_index % config.vtk_every == 0) {
        const std::string name = "solution_k" + std::to_string(k) + "_" +
                                 basis_name(basis) + ".vtk";
        write_vtk(out_path(config, name), mesh, nodal_values(mesh, basis, x));
      }
      if (write_files && config.export_matrix) {
        const std::string name = "matrix_k" + std::to_string(k) + "_" +
                                 basis_name(basis) + ".mtx";
        system.matrix().write_matrix_market(out_path(config, name));
      }
    }
  }

  // Mesh statistics at the reference offsets (standard placement).
  for (int k : {0, 10, 50, 990}) {
    const double y = static_cast<double>(k) / config.n_sweep * h_patch;
    const CircleLevelSet circle({0.0, y}, 0.5);
    PatchMesh::Options opts;
    opts.mode = PlacementMode::Standard;
    opts.b_rule = config.b_midpoint;
    const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, n, opts);
    StatsRow row;
    row.k = k;
    row.y_offset = y;
    row.stats = mesh.statistics();
    result.stats.push_back(row);
    if (write_files) write_stats_csv(config, row);
  }

  if (write_files) write_example2_csv(config, result.rows);
  return result;
}

}  // namespace locmodfe
