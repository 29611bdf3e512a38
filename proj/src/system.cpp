#include "locmodfe/system.hpp"

#include <cmath>

namespace locmodfe {

LinearSystem::LinearSystem(const PatchMesh& mesh, const DofMap& dofs)
    : mesh_(mesh), dofs_(dofs), matrix_(dofs.sparsity_pattern(mesh)) {
  rhs_.assign(dofs_.n_dofs(), 0.0);
}

void LinearSystem::assemble_local(int p, const InterfaceProblem& problem,
                                  FeValues& fe, std::array<double, 81>& local_mat,
                                  std::array<double, 9>& local_rhs) const {
  local_mat.fill(0.0);
  local_rhs.fill(0.0);
  fe.reinit(mesh_, p);
  const PatchInfo& pi = mesh_.patch(p);

  for (int q = 0; q < fe.n_q(); ++q) {
    const int dom = pi.subdomain[fe.subcell(q)];
    const double kappa = problem.kappa(dom);
    const double jxw = fe.JxW(q);
    const double fq = problem.f(dom, fe.quadrature_point(q)) * jxw;
    for (int a = 0; a < 9; ++a) {
      const Vec2& ga = fe.shape_grad(a, q);
      local_rhs[a] += fq * fe.shape_value(a, q);
      for (int b = 0; b < 9; ++b)
        local_mat[9 * a + b] += kappa * jxw * dot(ga, fe.shape_grad(b, q));
    }
  }

  if (problem.interface_flux != 0.0 && pi.n_segments > 0) {
    // + int_Gamma g phi ds over the chord segments, 2-point Gauss each.
    const auto coords = mesh_.patch_nodes(p);
    const double gauss[2] = {0.5 - 0.5 / std::sqrt(3.0),
                             0.5 + 0.5 / std::sqrt(3.0)};
    std::array<double, 9> values;
    for (int sidx = 0; sidx < pi.n_segments; ++sidx) {
      const int a = pi.segment[sidx][0];
      const int b = pi.segment[sidx][1];
      const double len = distance(coords[a], coords[b]);
      for (double t : gauss) {
        const Vec2 ref = kRefNode[a] + t * (kRefNode[b] - kRefNode[a]);
        fe.basis_values_at(ref, values);
        const double w = 0.5 * len * problem.interface_flux;
        for (int i = 0; i < 9; ++i) local_rhs[i] += w * values[i];
      }
    }
  }
}

void LinearSystem::assemble(const InterfaceProblem& problem, BasisKind basis,
                            int threads, bool apply_dirichlet) {
  matrix_.set_zero();
  std::fill(rhs_.begin(), rhs_.end(), 0.0);

  const int np = mesh_.n_patches();
  std::vector<std::array<double, 81>> local_mat(np);
  std::vector<std::array<double, 9>> local_rhs(np);

  // Pass 1: patch-local contributions, parallel over patches.
#ifdef LOCMODFE_HAVE_OPENMP
#pragma omp parallel num_threads(threads > 1 ? threads : 1) if (threads > 1)
  {
    FeValues fe(basis);
#pragma omp for schedule(static)
    for (int p = 0; p < np; ++p)
      assemble_local(p, problem, fe, local_mat[p], local_rhs[p]);
  }
#else
  (void)threads;
  {
    FeValues fe(basis);
    for (int p = 0; p < np; ++p)
      assemble_local(p, problem, fe, local_mat[p], local_rhs[p]);
  }
#endif

  // Pass 2: serial scatter in patch order (deterministic result).
  for (int p = 0; p < np; ++p) {
    const auto& nodes = mesh_.patch(p).nodes;
    for (int a = 0; a < 9; ++a) {
      rhs_[nodes[a]] += local_rhs[p][a];
      for (int b = 0; b < 9; ++b)
        matrix_.add(nodes[a], nodes[b], local_mat[p][9 * a + b]);
    }
  }

  // Dirichlet conditions.
  if (!apply_dirichlet) return;
  const int n = dofs_.n_dofs();
  std::vector<char> flag(n, 0);
  std::vector<double> bval(n, 0.0);
  for (int dof : dofs_.boundary_dofs()) {
    flag[dof] = 1;
    bval[dof] = boundary_coefficient(dof, problem.dirichlet, basis);
  }
  matrix_.eliminate_dirichlet(flag, bval, rhs_);
}

double LinearSystem::boundary_coefficient(
    int dof, const std::function<double(const Vec2&)>& g, BasisKind basis) const {
  const double gd = g(mesh_.node_position(dof));
  if (basis == BasisKind::Standard) return gd;
  const int ix = dofs_.ix(dof);
  const int iy = dofs_.iy(dof);
  if (ix % 2 == 0 && iy % 2 == 0) return gd;  // coarse corner dof
  // Edge-midpoint dof: deviation from the coarse trace, which runs linearly
  // between the edge's corners; the node may have been moved along the edge.
  int ax = ix, ay = iy, bx = ix, by = iy;
  if (ix % 2 == 1) {
    ax = ix - 1;
    bx = ix + 1;
  } else {
    ay = iy - 1;
    by = iy + 1;
  }
  const Vec2 pa = mesh_.node_position(mesh_.node_id(ax, ay));
  const Vec2 pb = mesh_.node_position(mesh_.node_id(bx, by));
  const Vec2 e = pb - pa;
  const double t = dot(mesh_.node_position(dof) - pa, e) / dot(e, e);
  return gd - ((1.0 - t) * g(pa) + t * g(pb));
}

}  // namespace locmodfe
