#include "locmodfe/dof_map.hpp"

#include <algorithm>

namespace locmodfe {

DofMap::DofMap(const PatchMesh& mesh) : m_(mesh.nodes_per_dim()) {
  boundary_.assign(m_ * m_, 0);
  for (int iy = 0; iy < m_; ++iy)
    for (int ix = 0; ix < m_; ++ix)
      if (ix == 0 || iy == 0 || ix == m_ - 1 || iy == m_ - 1) {
        boundary_[iy * m_ + ix] = 1;
        boundary_dofs_.push_back(iy * m_ + ix);
      }
}

std::vector<std::vector<int>> DofMap::sparsity_pattern(
    const PatchMesh& mesh) const {
  std::vector<std::vector<int>> cols(n_dofs());
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const auto& nodes = mesh.patch(p).nodes;
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b) cols[nodes[a]].push_back(nodes[b]);
  }
  for (auto& row : cols) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return cols;
}

}  // namespace locmodfe
