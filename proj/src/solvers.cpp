#include "locmodfe/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace locmodfe {

const char* solver_name(SolverKind k) {
  switch (k) {
    case SolverKind::CG:
      return "cg";
    case SolverKind::PCGJacobi:
      return "dpcg";
    default:
      return "ssor";
  }
}

namespace {

double dot_vec(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_vec(const std::vector<double>& a) { return std::sqrt(dot_vec(a, a)); }

// r = b - A x
void true_residual(const SparseMatrixCSR& A, const std::vector<double>& b,
                   const std::vector<double>& x, std::vector<double>& r,
                   std::vector<double>& scratch, int threads) {
  A.matvec(x, scratch, threads);
  r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - scratch[i];
}

// Exact-residual replacement is suspended once the exact residual comes
// within this factor of the tolerance.  Near machine precision the exact
// residual stagnates at roughly eps * ||A|| * ||x|| (the attainable
// accuracy), which on meshes with extreme sliver cells sits above an
// absolute tolerance of 1e-12; replacing the recurrence residual by the
// stagnating exact one every check interval would then prevent termination
// even though the iteration itself has fully converged.  Up to that point
// the periodic replacement guards the recurrence against drift.
constexpr double kFloorFactor = 100.0;

// Stagnation suspension is only considered within this factor of the
// tolerance.
constexpr double kStagnationCeiling = 1e4;

// After suspension the recurrence normally contracts below the tolerance
// within a few dozen iterations.  When the attainable accuracy sits between
// the tolerance and the suspension level, the recurrence gets stuck just
// above the tolerance instead (the preconditioned inner product has
// collapsed to machine noise) and would drift for the rest of the iteration
// budget.  If the recurrence norm fails to improve by 10% over this many
// iterations after suspension, the loop stops and reports the freshly
// computed exact residual; the run counts as converged when that residual
// is within kFloorFactor of the tolerance (the same leniency the
// suspension itself embodies).
constexpr int kStuckPatience = 100;

// A recurrence norm this far above the initial residual means the iteration
// has lost positive definiteness to rounding and is diverging; stop rather
// than loop to the cap.  (Also catches NaN.)
constexpr double kExplosionFactor = 1e8;

template <typename Precond>
SolveReport run_pcg(const SparseMatrixCSR& A, const std::vector<double>& b,
                    std::vector<double>& x, const SolveOptions& opts,
                    Precond&& precond) {
  const int n = A.n_rows();
  SolveReport report;
  x.assign(n, 0.0);

  std::vector<double> r = b;
  std::vector<double> z(n), p(n), q(n), scratch(n);

  if (norm_vec(r) <= opts.tol) {
    report.converged = true;
    report.final_residual = norm_vec(r);
    return report;
  }

  precond(r, z);
  p = z;
  double rz = dot_vec(r, z);
  if (opts.record_history) report.history.push_back(std::sqrt(rz));

  const double r0norm = norm_vec(r);
  bool exact_checks = true;   // drift guard and convergence verification
  double prev_exact = -1.0;   // exact norm at the previous replacement
  int stalled = 0;
  double best_since_suspend = 0.0;  // stuck watch, armed on suspension
  int last_gain_it = 0;

  for (int it = 1; it <= opts.max_iter; ++it) {
    A.matvec(p, q, opts.threads);
    const double pq = dot_vec(p, q);
    if (!(pq > 0.0))
      throw std::runtime_error("pcg: breakdown (matrix not positive definite?)");
    const double alpha = rz / pq;
    for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
    for (int i = 0; i < n; ++i) r[i] -= alpha * q[i];
    report.iterations = it;

    // Periodically replace the recurrence residual by the exact one.
    if (exact_checks && opts.check_interval > 0 &&
        it % opts.check_interval == 0) {
      true_residual(A, b, x, r, scratch, opts.threads);
      const double exact = norm_vec(r);
      // Suspend replacement near the tolerance, or when the exact residual
      // has visibly stalled at its attainable-accuracy floor: essentially no
      // contraction over two consecutive intervals while already within a
      // few orders of the tolerance.
      if (exact <= kFloorFactor * opts.tol) exact_checks = false;
      const bool no_progress = prev_exact > 0.0 && exact > 0.9 * prev_exact &&
                               exact <= kStagnationCeiling * opts.tol;
      stalled = no_progress ? stalled + 1 : 0;
      if (stalled >= 2) exact_checks = false;
      prev_exact = exact;
      if (!exact_checks) {
        best_since_suspend = norm_vec(r);
        last_gain_it = it;
      }
    }

    const double rnorm = norm_vec(r);
    if (!(rnorm <= kExplosionFactor * r0norm)) {
      true_residual(A, b, x, r, scratch, opts.threads);
      report.final_residual = norm_vec(r);
      report.converged = false;
      return report;
    }
    if (rnorm <= opts.tol) {
      if (!exact_checks) {
        report.converged = true;
        report.final_residual = rnorm;
        return report;
      }
      // Verify against the exact residual before declaring convergence.
      true_residual(A, b, x, r, scratch, opts.threads);
      const double rtrue = norm_vec(r);
      if (rtrue <= opts.tol) {
        report.converged = true;
        report.final_residual = rtrue;
        return report;
      }
      // The exact residual has reached its attainable-accuracy floor above
      // the tolerance; continue on the (replaced) recurrence residual and
      // stop once it contracts below the tolerance again.
      exact_checks = false;
      best_since_suspend = rtrue;
      last_gain_it = it;
    } else if (!exact_checks) {
      // Stuck watch: after suspension the recurrence should keep
      // contracting; when it stops making headway the attainable accuracy
      // is reached and further iterations only accumulate drift.
      if (rnorm < 0.9 * best_since_suspend) {
        best_since_suspend = rnorm;
        last_gain_it = it;
      } else if (it - last_gain_it >= kStuckPatience) {
        true_residual(A, b, x, r, scratch, opts.threads);
        report.final_residual = norm_vec(r);
        report.converged = report.final_residual <= kFloorFactor * opts.tol;
        return report;
      }
    }

    precond(r, z);
    const double rz_new = dot_vec(r, z);
    if (opts.record_history) report.history.push_back(std::sqrt(rz_new));
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }

  true_residual(A, b, x, r, scratch, opts.threads);
  report.final_residual = norm_vec(r);
  report.converged = report.final_residual <= opts.tol;
  return report;
}

}  // namespace

void apply_ssor(const SparseMatrixCSR& A, const std::vector<double>& diag,
                double omega, const std::vector<double>& r,
                std::vector<double>& z) {
  const int n = A.n_rows();
  const auto& row_ptr = A.row_ptr();
  const auto& col_idx = A.col_idx();
  const auto& val = A.values();
  static thread_local std::vector<double> y;
  y.resize(n);
  z.resize(n);

  // Forward solve (D/w + L) y = r.
  for (int i = 0; i < n; ++i) {
    double s = r[i];
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      const int j = col_idx[k];
      if (j < i) s -= val[k] * y[j];
    }
    y[i] = omega * s / diag[i];
  }
  // Backward solve (D/w + U) z = (D/w) y.
  for (int i = n - 1; i >= 0; --i) {
    double s = diag[i] * y[i] / omega;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      const int j = col_idx[k];
      if (j > i) s -= val[k] * z[j];
    }
    z[i] = omega * s / diag[i];
  }
  const double scale = omega * (2.0 - omega);
  for (int i = 0; i < n; ++i) z[i] *= scale;
}

SolveReport solve_cg(const SparseMatrixCSR& A, const std::vector<double>& b,
                     std::vector<double>& x, const SolveOptions& opts) {
  return run_pcg(A, b, x, opts,
                 [](const std::vector<double>& r, std::vector<double>& z) {
                   z = r;
                 });
}

SolveReport solve_pcg_jacobi(const SparseMatrixCSR& A,
                             const std::vector<double>& b,
                             std::vector<double>& x, const SolveOptions& opts) {
  const std::vector<double> d = A.diagonal();
  for (double v : d)
    if (v <= 0.0) throw std::runtime_error("pcg_jacobi: nonpositive diagonal");
  return run_pcg(A, b, x, opts,
                 [&d](const std::vector<double>& r, std::vector<double>& z) {
                   z.resize(r.size());
                   for (std::size_t i = 0; i < r.size(); ++i) z[i] = r[i] / d[i];
                 });
}

SolveReport solve_pcg_ssor(const SparseMatrixCSR& A, const std::vector<double>& b,
                           std::vector<double>& x, const SolveOptions& opts) {
  const std::vector<double> d = A.diagonal();
  for (double v : d)
    if (v <= 0.0) throw std::runtime_error("pcg_ssor: nonpositive diagonal");
  const double omega = opts.omega;
  return run_pcg(A, b, x, opts,
                 [&A, &d, omega](const std::vector<double>& r,
                                 std::vector<double>& z) {
                   apply_ssor(A, d, omega, r, z);
                 });
}

SolveReport solve(SolverKind kind, const SparseMatrixCSR& A,
                  const std::vector<double>& b, std::vector<double>& x,
                  const SolveOptions& opts) {
  switch (kind) {
    case SolverKind::CG:
      return solve_cg(A, b, x, opts);
    case SolverKind::PCGJacobi:
      return solve_pcg_jacobi(A, b, x, opts);
    default:
      return solve_pcg_ssor(A, b, x, opts);
  }
}

}  // namespace locmodfe
