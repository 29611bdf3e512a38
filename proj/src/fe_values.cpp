#include "locmodfe/fe_values.hpp"

#include <cassert>

namespace locmodfe {

namespace {

struct Jacobian {
  double f00, f01, f10, f11, det;
};

Jacobian geometry_jacobian(const std::array<Vec2, 9>& nodes,
                           const std::array<Vec2, 9>& std_ref_grads) {
  Jacobian J{0.0, 0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 9; ++i) {
    const Vec2& g = std_ref_grads[i];
    const Vec2& x = nodes[i];
    J.f00 += x.x * g.x;
    J.f01 += x.x * g.y;
    J.f10 += x.y * g.x;
    J.f11 += x.y * g.y;
  }
  J.det = J.f00 * J.f11 - J.f01 * J.f10;
  return J;
}

// phys_grad = F^{-T} ref_grad.
Vec2 push_gradient(const Jacobian& J, const Vec2& g) {
  return {(J.f11 * g.x - J.f10 * g.y) / J.det,
          (-J.f01 * g.x + J.f00 * g.y) / J.det};
}

}  // namespace

void coarse_node_weights(const std::array<Vec2, 9>& nodes, FemType femtype,
                         DiagKind diag,
                         std::array<std::array<double, 9>, 4>& weights) {
  const Vec2 bl = nodes[0];
  const double hx = nodes[8].x - bl.x;
  const double hy = nodes[8].y - bl.y;
  for (int c = 0; c < 4; ++c) {
    weights[c].fill(0.0);
    weights[c][kCornerNode[c]] = 1.0;
  }
  std::array<double, 4> cv;
  std::array<Vec2, 4> cg_unused;
  for (int i : {1, 3, 4, 5, 7}) {
    const Vec2 a{(nodes[i].x - bl.x) / hx, (nodes[i].y - bl.y) / hy};
    shape_coarse(femtype, diag, a, cv, cg_unused);
    for (int c = 0; c < 4; ++c) weights[c][i] = cv[c];
  }
}

void FeValues::reinit(const PatchMesh& mesh, int patch_index) {
  const PatchInfo& pi = mesh.patch(patch_index);
  reinit(mesh.patch_nodes(patch_index), pi.femtype, pi.diag);
}

void FeValues::reinit(const std::array<Vec2, 9>& nodes, FemType femtype,
                      DiagKind diag) {
  nodes_ = nodes;
  femtype_ = femtype;
  diag_ = diag;
  if (basis_ == BasisKind::Hierarchical)
    coarse_node_weights(nodes_, femtype_, diag_, coarse_w_);
  compute();
}

void FeValues::overlay_coarse(std::array<double, 9>& values,
                              std::array<Vec2, 9>& grads) const {
  // Accumulate before writing: the sums read the standard corner entries.
  std::array<double, 4> v{};
  std::array<Vec2, 4> g{};
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 9; ++i) {
      const double w = coarse_w_[c][i];
      if (w == 0.0) continue;
      v[c] += w * values[i];
      g[c] += w * grads[i];
    }
  }
  for (int c = 0; c < 4; ++c) {
    values[kCornerNode[c]] = v[c];
    grads[kCornerNode[c]] = g[c];
  }
}

void FeValues::reference_basis(const Vec2& ref, std::array<double, 9>& values,
                               std::array<Vec2, 9>& ref_grads) const {
  shape_std(femtype_, ref, values, ref_grads);
  if (basis_ == BasisKind::Hierarchical) overlay_coarse(values, ref_grads);
}

void FeValues::compute() {
  const QuadratureRule& rule = patch_quadrature(femtype_);
  const int nq = rule.size();
  jxw_.resize(nq);
  qpoint_.resize(nq);
  subcell_.resize(nq);
  values_.resize(nq);
  grads_.resize(nq);

  std::array<double, 9> sv;
  std::array<Vec2, 9> sg;
  for (int q = 0; q < nq; ++q) {
    const Vec2& ref = rule.points[q];
    shape_std(femtype_, ref, sv, sg);
    const Jacobian J = geometry_jacobian(nodes_, sg);
    assert(J.det > 0.0);
    jxw_[q] = J.det * rule.weights[q];
    subcell_[q] = rule.subcell[q];
    Vec2 x{0.0, 0.0};
    for (int i = 0; i < 9; ++i) x += sv[i] * nodes_[i];
    qpoint_[q] = x;

    if (basis_ == BasisKind::Hierarchical) overlay_coarse(sv, sg);
    values_[q] = sv;
    for (int i = 0; i < 9; ++i) grads_[q][i] = push_gradient(J, sg[i]);
  }
}

Vec2 FeValues::map_to_physical(const Vec2& ref) const {
  std::array<double, 9> sv;
  std::array<Vec2, 9> sg;
  shape_std(femtype_, ref, sv, sg);
  Vec2 x{0.0, 0.0};
  for (int i = 0; i < 9; ++i) x += sv[i] * nodes_[i];
  return x;
}

double FeValues::jacobian_det(const Vec2& ref) const {
  std::array<double, 9> sv;
  std::array<Vec2, 9> sg;
  shape_std(femtype_, ref, sv, sg);
  return geometry_jacobian(nodes_, sg).det;
}

void FeValues::basis_values_at(const Vec2& ref,
                               std::array<double, 9>& values) const {
  std::array<Vec2, 9> unused;
  reference_basis(ref, values, unused);
}

void FeValues::basis_at(const Vec2& ref, std::array<double, 9>& values,
                        std::array<Vec2, 9>& phys_grads) const {
  std::array<double, 9> sv;
  std::array<Vec2, 9> sg;
  shape_std(femtype_, ref, sv, sg);
  const Jacobian J = geometry_jacobian(nodes_, sg);
  reference_basis(ref, values, phys_grads);
  for (int i = 0; i < 9; ++i) phys_grads[i] = push_gradient(J, phys_grads[i]);
}

}  // namespace locmodfe
