// Assembly of the linear system  A u = b  for  -div(kappa grad u) = f  with
// Dirichlet boundary conditions and an optional constant interface-flux term.
//
// Assembly runs in two passes: patch-local matrices are computed first (in
// parallel when threads > 1), then scattered into the global matrix serially
// in patch order.  The result is bit-identical for any thread count.
#pragma once

#include <vector>

#include "locmodfe/dof_map.hpp"
#include "locmodfe/fe_values.hpp"
#include "locmodfe/patch_mesh.hpp"
#include "locmodfe/problems.hpp"
#include "locmodfe/sparse_matrix.hpp"

namespace locmodfe {

class LinearSystem {
 public:
  LinearSystem(const PatchMesh& mesh, const DofMap& dofs);

  // Assembles matrix and right-hand side and (unless disabled) applies the
  // Dirichlet conditions by symmetric elimination (full dimension is kept;
  // boundary rows become identity rows).
  void assemble(const InterfaceProblem& problem, BasisKind basis,
                int threads = 1, bool apply_dirichlet = true);

  const SparseMatrixCSR& matrix() const { return matrix_; }
  SparseMatrixCSR& matrix() { return matrix_; }
  const std::vector<double>& rhs() const { return rhs_; }

  // Dirichlet coefficient for a boundary dof: the nodal value for the
  // standard basis; for the hierarchical basis, edge-midpoint dofs carry the
  // deviation from the coarse corner average.
  double boundary_coefficient(int dof,
                              const std::function<double(const Vec2&)>& g,
                              BasisKind basis) const;

 private:
  void assemble_local(int p, const InterfaceProblem& problem, FeValues& fe,
                      std::array<double, 81>& local_mat,
                      std::array<double, 9>& local_rhs) const;

  const PatchMesh& mesh_;
  const DofMap& dofs_;
  SparseMatrixCSR matrix_;
  std::vector<double> rhs_;
};

}  // namespace locmodfe
