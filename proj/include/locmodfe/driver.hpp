// Experiment drivers.
//
// Test case 1: refinement study on (-1,1)^2 with the circular interface of
// radius 1/2 around (0, y_offset).  For each level L the mesh has
// (4*2^L)^2 patches; every requested solver/basis pair is solved to the
// given tolerance and errors against the manufactured solution reported.
//
// Test case 2: interface-position sweep at a fixed level.  The circle center
// moves upward by y_offset = (k/N) * h_P for k = 0, stride, 2*stride, ... < N
// and per-position iteration counts are recorded, plus mesh statistics at the
// four reference offsets k in {0, 10, 50, 990}.
#pragma once

#include <string>
#include <vector>

#include "locmodfe/fe_values.hpp"
#include "locmodfe/patch_mesh.hpp"
#include "locmodfe/solvers.hpp"

namespace locmodfe {

struct RunConfig {
  int test_case = 1;
  int level_min = 0;
  int level_max = 4;
  std::string basis = "both";  // standard | hierarchical | both
  std::vector<SolverKind> solvers = {SolverKind::CG, SolverKind::PCGJacobi,
                                     SolverKind::PCGSSOR};
  int n_sweep = 1000;   // N: sweep resolution of test case 2
  int stride = 10;      // sweep step
  int sweep_level = 4;  // mesh level of test case 2
  double kappa1 = 0.1;
  double kappa2 = 1.0;
  double y_offset = 0.0;  // circle center offset for test case 1
  bool flux_jump = true;  // include the interface flux term in the RHS
  double omega = 1.2;
  double tol = 1e-12;
  int threads = 1;
  BMidpointRule b_midpoint = BMidpointRule::Intersection;
  std::string out_dir = "out";  // empty: write no files
  int vtk_every = 0;            // write VTK every n-th level / sweep position
  bool export_matrix = false;
};

struct Example1Row {
  int level = 0;
  int patches = 0;
  int dofs = 0;
  SolverKind solver = SolverKind::CG;
  BasisKind basis = BasisKind::Standard;
  int iterations = 0;
  bool converged = false;
  double l2_error = 0.0;
  double h1_error = 0.0;
  bool has_rates = false;  // false on the first level of a solver/basis pair
  double l2_rate = 0.0;
  double h1_rate = 0.0;
};

struct Example2Row {
  int k = 0;
  double y_offset = 0.0;
  SolverKind solver = SolverKind::CG;
  BasisKind basis = BasisKind::Standard;
  int iterations = 0;
  bool converged = false;
};

struct StatsRow {
  int k = 0;
  double y_offset = 0.0;
  MeshStatistics stats;
};

struct Example1Result {
  std::vector<Example1Row> rows;
};

struct Example2Result {
  std::vector<Example2Row> rows;
  std::vector<StatsRow> stats;  // k in {0, 10, 50, 990}
};

const char* basis_name(BasisKind b);
PlacementMode placement_for(BasisKind b);
std::vector<BasisKind> bases_from_config(const RunConfig& config);

// Parses "cg,dpcg,ssor" (any subset, any order).
std::vector<SolverKind> parse_solver_list(const std::string& s);

// Reads a flat "key = value" parameter file with '#' comments into config;
// unknown keys raise std::runtime_error.
void load_param_file(const std::string& path, RunConfig& config);

Example1Result run_example1(const RunConfig& config);
Example2Result run_example2(const RunConfig& config);

// Least-squares fitted convergence rate from per-level errors (slope of
// -log2(error) against level).
double fitted_rate(const std::vector<int>& levels,
                   const std::vector<double>& errors);

}  // namespace locmodfe
