// Per-patch evaluation of basis functions, geometry map and quadrature.
//
// The geometry map T_P(ref) = sum_i M_i phi_i(ref) always uses the standard
// (nodal, piecewise bi/linear) functions, with M_i the possibly moved node
// positions.  The finite element basis on a patch is either
//   Standard:      the 9 nodal functions themselves, or
//   Hierarchical:  4 coarse corner functions (bilinear in physical
//                  coordinates on uncut patches, linear on the two
//                  coarse-diagonal triangles on cut patches) plus the 5
//                  standard functions of the edge midpoints and the center.
// Both bases are indexed by the local lexicographic node id 0..8; for the
// hierarchical basis, ids 0/2/6/8 refer to the coarse functions.
//
// The coarse functions are realised as their fine-space interpolants
// sum_i w_i phi_i with nodal weights w_i = value of the coarse function at
// the (possibly moved) physical node i, see coarse_node_weights().  Since the
// center node of a cut patch lies on the coarse diagonal, the interpolant
// coincides with the exact piecewise linear function there; expressing it in
// the standard basis keeps it continuous across patch edges whose midpoints
// have been moved and exactly inside the span of the standard basis.
#pragma once

#include <array>
#include <vector>

#include "locmodfe/patch_mesh.hpp"
#include "locmodfe/reference_patch.hpp"

namespace locmodfe {

enum class BasisKind { Standard, Hierarchical };

// Fine-space nodal weights of the four hierarchical coarse functions on a
// patch: weights[c][i] is the value of coarse function c (corner order bl,
// br, tl, tr) at the patch's physical node i.  The coarse functions are
// bilinear (P0) or piecewise linear across the coarse diagonal (cut
// femtypes) in the affine coordinates of the patch square spanned by the
// fixed corner nodes; corners receive Kronecker weights, moved mid nodes the
// interpolated value at their physical position.
void coarse_node_weights(const std::array<Vec2, 9>& nodes, FemType femtype,
                         DiagKind diag,
                         std::array<std::array<double, 9>, 4>& weights);

class FeValues {
 public:
  explicit FeValues(BasisKind basis) : basis_(basis) {}

  void reinit(const PatchMesh& mesh, int patch_index);
  void reinit(const std::array<Vec2, 9>& nodes, FemType femtype, DiagKind diag);

  BasisKind basis() const { return basis_; }
  FemType femtype() const { return femtype_; }
  int n_q() const { return static_cast<int>(jxw_.size()); }

  double JxW(int q) const { return jxw_[q]; }
  const Vec2& quadrature_point(int q) const { return qpoint_[q]; }
  int subcell(int q) const { return subcell_[q]; }
  double shape_value(int i, int q) const { return values_[q][i]; }
  const Vec2& shape_grad(int i, int q) const { return grads_[q][i]; }

  // Evaluation at an arbitrary reference point.
  Vec2 map_to_physical(const Vec2& ref) const;
  double jacobian_det(const Vec2& ref) const;
  void basis_values_at(const Vec2& ref, std::array<double, 9>& values) const;
  void basis_at(const Vec2& ref, std::array<double, 9>& values,
                std::array<Vec2, 9>& phys_grads) const;

 private:
  void compute();
  // Reference-space values/gradients of the active basis.
  void reference_basis(const Vec2& ref, std::array<double, 9>& values,
                       std::array<Vec2, 9>& ref_grads) const;
  // Replaces the corner entries by the coarse combinations sum_i w[c][i]*e_i
  // of the standard entries (values and, being linear, gradients alike).
  void overlay_coarse(std::array<double, 9>& values,
                      std::array<Vec2, 9>& grads) const;

  BasisKind basis_;
  std::array<Vec2, 9> nodes_{};
  FemType femtype_ = FemType::P0;
  DiagKind diag_ = DiagKind::Main;
  std::array<std::array<double, 9>, 4> coarse_w_{};

  std::vector<double> jxw_;
  std::vector<Vec2> qpoint_;
  std::vector<int> subcell_;
  std::vector<std::array<double, 9>> values_;
  std::vector<std::array<Vec2, 9>> grads_;
};

}  // namespace locmodfe
