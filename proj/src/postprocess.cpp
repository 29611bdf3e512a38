#include "locmodfe/postprocess.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace locmodfe {

ErrorNorms compute_errors(const PatchMesh& mesh,
                          const std::vector<double>& coefficients,
                          BasisKind basis, const InterfaceProblem& problem) {
  FeValues fe(basis);
  double l2 = 0.0, h1 = 0.0;
  for (int p = 0; p < mesh.n_patches(); ++p) {
    fe.reinit(mesh, p);
    const PatchInfo& pi = mesh.patch(p);
    for (int q = 0; q < fe.n_q(); ++q) {
      const int dom = pi.subdomain[fe.subcell(q)];
      const Vec2& x = fe.quadrature_point(q);
      double uh = 0.0;
      Vec2 gh{0.0, 0.0};
      for (int i = 0; i < 9; ++i) {
        const double c = coefficients[pi.nodes[i]];
        uh += c * fe.shape_value(i, q);
        gh += c * fe.shape_grad(i, q);
      }
      const double du = uh - problem.u(dom, x);
      const Vec2 dg = gh - problem.grad_u(dom, x);
      l2 += du * du * fe.JxW(q);
      h1 += dot(dg, dg) * fe.JxW(q);
    }
  }
  return {std::sqrt(l2), std::sqrt(h1)};
}

double convergence_rate(double error_coarse, double error_fine) {
  return std::log2(error_coarse / error_fine);
}

std::vector<double> interpolate(const PatchMesh& mesh, BasisKind basis,
                                const std::function<double(const Vec2&)>& g) {
  std::vector<double> coeff(mesh.n_nodes());
  if (basis == BasisKind::Standard) {
    for (int id = 0; id < mesh.n_nodes(); ++id)
      coeff[id] = g(mesh.node_position(id));
    return coeff;
  }
  // Hierarchical: corners carry nodal values; fine dofs carry the deviation
  // of g at the (moved) node from the coarse part evaluated at the node's
  // physical position.
  std::array<std::array<double, 9>, 4> w;
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const PatchInfo& pi = mesh.patch(p);
    const auto coords = mesh.patch_nodes(p);
    coarse_node_weights(coords, pi.femtype, pi.diag, w);
    const double corner_g[4] = {g(coords[0]), g(coords[2]), g(coords[6]),
                                g(coords[8])};
    coeff[pi.nodes[0]] = corner_g[0];
    coeff[pi.nodes[2]] = corner_g[1];
    coeff[pi.nodes[6]] = corner_g[2];
    coeff[pi.nodes[8]] = corner_g[3];
    for (int l : {1, 3, 4, 5, 7}) {
      double coarse_part = 0.0;
      for (int c = 0; c < 4; ++c) coarse_part += w[c][l] * corner_g[c];
      coeff[pi.nodes[l]] = g(coords[l]) - coarse_part;
    }
  }
  return coeff;
}

std::vector<double> nodal_values(const PatchMesh& mesh, BasisKind basis,
                                 const std::vector<double>& coefficients) {
  if (basis == BasisKind::Standard) return coefficients;
  std::vector<double> nodal(mesh.n_nodes());
  std::array<std::array<double, 9>, 4> w;
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const PatchInfo& pi = mesh.patch(p);
    coarse_node_weights(mesh.patch_nodes(p), pi.femtype, pi.diag, w);
    const double corner_c[4] = {
        coefficients[pi.nodes[0]], coefficients[pi.nodes[2]],
        coefficients[pi.nodes[6]], coefficients[pi.nodes[8]]};
    nodal[pi.nodes[0]] = corner_c[0];
    nodal[pi.nodes[2]] = corner_c[1];
    nodal[pi.nodes[6]] = corner_c[2];
    nodal[pi.nodes[8]] = corner_c[3];
    for (int l : {1, 3, 4, 5, 7}) {
      double v = coefficients[pi.nodes[l]];
      for (int c = 0; c < 4; ++c) v += w[c][l] * corner_c[c];
      nodal[pi.nodes[l]] = v;
    }
  }
  return nodal;
}

void write_vtk(const std::string& path, const PatchMesh& mesh,
               const std::vector<double>& nodal) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fprintf(f, "# vtk DataFile Version 3.0\n");
  std::fprintf(f, "locmodfe solution\n");
  std::fprintf(f, "ASCII\n");
  std::fprintf(f, "DATASET UNSTRUCTURED_GRID\n");

  std::fprintf(f, "POINTS %d double\n", mesh.n_nodes());
  for (int id = 0; id < mesh.n_nodes(); ++id) {
    const Vec2& x = mesh.node_position(id);
    std::fprintf(f, "%.12g %.12g 0\n", x.x, x.y);
  }

  int n_cells = 0, list_size = 0;
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const int nsc = n_subcells(mesh.patch(p).femtype);
    const int nv = mesh.patch(p).femtype == FemType::P0 ? 4 : 3;
    n_cells += nsc;
    list_size += nsc * (nv + 1);
  }

  std::fprintf(f, "CELLS %d %d\n", n_cells, list_size);
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const PatchInfo& pi = mesh.patch(p);
    if (pi.femtype == FemType::P0) {
      for (const auto& q : kSubQuad)
        std::fprintf(f, "4 %d %d %d %d\n", pi.nodes[q[0]], pi.nodes[q[1]],
                     pi.nodes[q[2]], pi.nodes[q[3]]);
    } else {
      const auto tri = triangle_table(pi.femtype);
      for (int t = 0; t < 8; ++t)
        std::fprintf(f, "3 %d %d %d\n", pi.nodes[tri[t][0]], pi.nodes[tri[t][1]],
                     pi.nodes[tri[t][2]]);
    }
  }

  std::fprintf(f, "CELL_TYPES %d\n", n_cells);
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const int type = mesh.patch(p).femtype == FemType::P0 ? 9 : 5;
    for (int sc = 0; sc < n_subcells(mesh.patch(p).femtype); ++sc)
      std::fprintf(f, "%d\n", type);
  }

  std::fprintf(f, "POINT_DATA %d\n", mesh.n_nodes());
  std::fprintf(f, "SCALARS solution double 1\n");
  std::fprintf(f, "LOOKUP_TABLE default\n");
  for (int id = 0; id < mesh.n_nodes(); ++id)
    std::fprintf(f, "%.12g\n", nodal[id]);

  std::fprintf(f, "CELL_DATA %d\n", n_cells);
  std::fprintf(f, "SCALARS domain int 1\n");
  std::fprintf(f, "LOOKUP_TABLE default\n");
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const PatchInfo& pi = mesh.patch(p);
    for (int sc = 0; sc < n_subcells(pi.femtype); ++sc)
      std::fprintf(f, "%d\n", pi.subdomain[sc]);
  }
  std::fprintf(f, "SCALARS femtype int 1\n");
  std::fprintf(f, "LOOKUP_TABLE default\n");
  for (int p = 0; p < mesh.n_patches(); ++p) {
    const PatchInfo& pi = mesh.patch(p);
    for (int sc = 0; sc < n_subcells(pi.femtype); ++sc)
      std::fprintf(f, "%d\n", static_cast<int>(pi.femtype));
  }
  std::fclose(f);
}

}  // namespace locmodfe
