// Degree-of-freedom numbering on the fine node lattice.
//
// Unknowns live on the (2n+1) x (2n+1) node lattice of an n x n patch mesh
// and are numbered row-major, identically to the mesh node ids.  All lattice
// nodes on the domain boundary carry Dirichlet conditions.
#pragma once

#include <vector>

#include "locmodfe/patch_mesh.hpp"

namespace locmodfe {

class DofMap {
 public:
  explicit DofMap(const PatchMesh& mesh);

  int n_dofs() const { return m_ * m_; }
  bool is_boundary(int dof) const { return boundary_[dof] != 0; }
  const std::vector<int>& boundary_dofs() const { return boundary_dofs_; }

  // Lattice coordinates of a dof.
  int ix(int dof) const { return dof % m_; }
  int iy(int dof) const { return dof / m_; }

  // Column ids per row of the patch-stencil sparsity pattern (sorted).
  std::vector<std::vector<int>> sparsity_pattern(const PatchMesh& mesh) const;

 private:
  int m_;  // nodes per dimension
  std::vector<char> boundary_;
  std::vector<int> boundary_dofs_;
};

}  // namespace locmodfe
