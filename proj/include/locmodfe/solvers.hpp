// Conjugate gradient solvers: plain CG, diagonally preconditioned CG, and
// SSOR-preconditioned CG.
//
// All variants start from x = 0 and stop when the unpreconditioned true
// residual satisfies ||b - A x||_2 <= tol (absolute).  The recurrence
// residual is replaced by the recomputed true residual every
// `check_interval` iterations, and convergence indicated by the recurrence
// is always verified against the true residual before the solver returns.
// The iteration count equals the number of A*p products of the main loop.
#pragma once

#include <functional>
#include <vector>

#include "locmodfe/sparse_matrix.hpp"

namespace locmodfe {

enum class SolverKind { CG, PCGJacobi, PCGSSOR };

const char* solver_name(SolverKind k);

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 200000;
  double omega = 1.2;        // SSOR relaxation parameter
  int check_interval = 50;   // true-residual refresh period
  bool record_history = false;
  int threads = 1;
};

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
  // sqrt(r' M^{-1} r) per iteration (initial value first) when recorded.
  std::vector<double> history;
};

SolveReport solve_cg(const SparseMatrixCSR& A, const std::vector<double>& b,
                     std::vector<double>& x, const SolveOptions& opts);
SolveReport solve_pcg_jacobi(const SparseMatrixCSR& A,
                             const std::vector<double>& b,
                             std::vector<double>& x, const SolveOptions& opts);
SolveReport solve_pcg_ssor(const SparseMatrixCSR& A, const std::vector<double>& b,
                           std::vector<double>& x, const SolveOptions& opts);

SolveReport solve(SolverKind kind, const SparseMatrixCSR& A,
                  const std::vector<double>& b, std::vector<double>& x,
                  const SolveOptions& opts);

// Applies the SSOR preconditioner z = M^{-1} r with
//   M = (D/w + L) (w (2-w) D/w)^{-1} (D/w + U),
// where A = L + D + U.  Exposed for testing.
void apply_ssor(const SparseMatrixCSR& A, const std::vector<double>& diag,
                double omega, const std::vector<double>& r,
                std::vector<double>& z);

}  // namespace locmodfe
