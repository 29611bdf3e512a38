// Benchmark of the OpenMP-parallel kernels against the serial reference:
// system assembly and sparse matrix-vector products on a level-5 mesh by
// default (usage: bench_kernels [level] [threads]).
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef LOCMODFE_HAVE_OPENMP
#include <omp.h>
#endif

#include "locmodfe/dof_map.hpp"
#include "locmodfe/level_set.hpp"
#include "locmodfe/patch_mesh.hpp"
#include "locmodfe/problems.hpp"
#include "locmodfe/system.hpp"

namespace {

double now() {
#ifdef LOCMODFE_HAVE_OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
  using namespace locmodfe;
  int level = 5;
  int threads = 4;
  if (argc > 1) level = std::atoi(argv[1]);
  if (argc > 2) threads = std::atoi(argv[2]);
#ifdef LOCMODFE_HAVE_OPENMP
  std::printf("OpenMP: %d processors available\n", omp_get_num_procs());
#else
  std::printf("built without OpenMP; parallel timings use 1 thread\n");
#endif

  const int n = 4 * (1 << level);
  const CircleLevelSet circle({0.0, 0.0}, 0.5);
  PatchMesh::Options opts;
  opts.mode = PlacementMode::Hierarchical;
  const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, n, opts);
  const DofMap dofs(mesh);
  const InterfaceProblem problem = make_disc_problem(0.1, 1.0, 0.0, true);
  std::printf("level %d: %d patches, %d dofs, %d cut patches\n", level,
              mesh.n_patches(), dofs.n_dofs(), mesh.n_cut_patches());

  LinearSystem sys_serial(mesh, dofs), sys_parallel(mesh, dofs);

  // Assembly.
  const int reps_asm = 5;
  double t0 = now();
  for (int r = 0; r < reps_asm; ++r)
    sys_serial.assemble(problem, BasisKind::Hierarchical, 1);
  const double t_serial = (now() - t0) / reps_asm;
  t0 = now();
  for (int r = 0; r < reps_asm; ++r)
    sys_parallel.assemble(problem, BasisKind::Hierarchical, threads);
  const double t_parallel = (now() - t0) / reps_asm;

  // The two-pass scheme must give bit-identical results.
  bool identical = sys_serial.rhs() == sys_parallel.rhs() &&
                   sys_serial.matrix().values() == sys_parallel.matrix().values();
  std::printf("assembly: serial %.4f s, %d threads %.4f s, speedup %.2fx, %s\n",
              t_serial, threads, t_parallel, t_serial / t_parallel,
              identical ? "results identical" : "RESULTS DIFFER");

  // Matrix-vector products.
  std::vector<double> x(dofs.n_dofs(), 1.0), y;
  const int reps_mv = 200;
  t0 = now();
  for (int r = 0; r < reps_mv; ++r) sys_serial.matrix().matvec(x, y, 1);
  const double mv_serial = (now() - t0) / reps_mv;
  std::vector<double> y_serial = y;
  t0 = now();
  for (int r = 0; r < reps_mv; ++r) sys_serial.matrix().matvec(x, y, threads);
  const double mv_parallel = (now() - t0) / reps_mv;
  identical = y == y_serial;
  std::printf("matvec:   serial %.6f s, %d threads %.6f s, speedup %.2fx, %s\n",
              mv_serial, threads, mv_parallel, mv_serial / mv_parallel,
              identical ? "results identical" : "RESULTS DIFFER");
  return 0;
}
