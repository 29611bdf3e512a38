#include "locmodfe/reference_patch.hpp"

#include <cmath>

namespace locmodfe {

const int (*triangle_table(FemType ft))[3] {
  switch (ft) {
    case FemType::P1:
      return kTriCross;
    case FemType::P2:
      return kTriMain;
    case FemType::P3:
      return kTriAnti;
    default:
      return nullptr;
  }
}

namespace {

QuadratureRule build_quadrature(FemType ft) {
  QuadratureRule rule;
  if (ft == FemType::P0) {
    // 2x2 tensor Gauss rule on each of the four sub-quads.
    const double g = 0.25 / std::sqrt(3.0);
    for (int q = 0; q < 4; ++q) {
      const Vec2 bl = kRefNode[kSubQuad[q][0]];
      const Vec2 c{bl.x + 0.25, bl.y + 0.25};
      for (int iy = -1; iy <= 1; iy += 2)
        for (int ix = -1; ix <= 1; ix += 2) {
          rule.points.push_back({c.x + ix * g, c.y + iy * g});
          rule.weights.push_back(1.0 / 16.0);
          rule.subcell.push_back(q);
        }
    }
  } else {
    // Second-order 3-point interior rule on each of the eight triangles.
    const auto tri = triangle_table(ft);
    for (int t = 0; t < 8; ++t) {
      const Vec2 v[3] = {kRefNode[tri[t][0]], kRefNode[tri[t][1]],
                         kRefNode[tri[t][2]]};
      for (int k = 0; k < 3; ++k) {
        Vec2 p{0.0, 0.0};
        for (int j = 0; j < 3; ++j) p += (j == k ? 2.0 / 3.0 : 1.0 / 6.0) * v[j];
        rule.points.push_back(p);
        rule.weights.push_back(1.0 / 24.0);
        rule.subcell.push_back(t);
      }
    }
  }
  return rule;
}

}  // namespace

const QuadratureRule& patch_quadrature(FemType ft) {
  static const QuadratureRule q0 = build_quadrature(FemType::P0);
  static const QuadratureRule q1 = build_quadrature(FemType::P1);
  static const QuadratureRule q2 = build_quadrature(FemType::P2);
  static const QuadratureRule q3 = build_quadrature(FemType::P3);
  switch (ft) {
    case FemType::P0:
      return q0;
    case FemType::P1:
      return q1;
    case FemType::P2:
      return q2;
    default:
      return q3;
  }
}

namespace {

// Barycentric coordinates of p with respect to triangle (v0, v1, v2).
void barycentric(const Vec2& p, const Vec2& v0, const Vec2& v1, const Vec2& v2,
                 double lambda[3]) {
  const double area2 = cross(v1 - v0, v2 - v0);
  lambda[0] = cross(v2 - v1, p - v1) / area2;
  lambda[1] = cross(v0 - v2, p - v2) / area2;
  lambda[2] = cross(v1 - v0, p - v0) / area2;
}

// Picks the triangle of the pair (2q, 2q+1) containing the point and returns
// its row index; fills the barycentric coordinates for that triangle.
int pick_triangle(const int (*tri)[3], int q, const Vec2& ref, double lambda[3]) {
  const int r0 = 2 * q;
  barycentric(ref, kRefNode[tri[r0][0]], kRefNode[tri[r0][1]], kRefNode[tri[r0][2]],
              lambda);
  if (lambda[0] >= -1e-12 && lambda[1] >= -1e-12 && lambda[2] >= -1e-12) return r0;
  const int r1 = r0 + 1;
  barycentric(ref, kRefNode[tri[r1][0]], kRefNode[tri[r1][1]], kRefNode[tri[r1][2]],
              lambda);
  return r1;
}

inline int quadrant(const Vec2& ref, int& kx, int& ky) {
  kx = ref.x < 0.5 ? 0 : 1;
  ky = ref.y < 0.5 ? 0 : 1;
  return 2 * ky + kx;
}

}  // namespace

int locate_subcell(FemType ft, const Vec2& ref) {
  int kx, ky;
  const int q = quadrant(ref, kx, ky);
  if (ft == FemType::P0) return q;
  double lambda[3];
  return pick_triangle(triangle_table(ft), q, ref, lambda);
}

void shape_std(FemType ft, const Vec2& ref, std::array<double, 9>& values,
               std::array<Vec2, 9>& ref_grads) {
  values.fill(0.0);
  ref_grads.fill({0.0, 0.0});
  int kx, ky;
  const int q = quadrant(ref, kx, ky);

  if (ft == FemType::P0) {
    // Bilinear on the containing sub-quad; local coordinates in [0,1]^2.
    const double xi = 2.0 * ref.x - kx;
    const double eta = 2.0 * ref.y - ky;
    const int n00 = 3 * ky + kx;
    const int n10 = n00 + 1;
    const int n01 = 3 * (ky + 1) + kx;
    const int n11 = n01 + 1;
    values[n00] = (1.0 - xi) * (1.0 - eta);
    values[n10] = xi * (1.0 - eta);
    values[n01] = (1.0 - xi) * eta;
    values[n11] = xi * eta;
    // Chain rule: d/dref = 2 d/dlocal.
    ref_grads[n00] = {-2.0 * (1.0 - eta), -2.0 * (1.0 - xi)};
    ref_grads[n10] = {2.0 * (1.0 - eta), -2.0 * xi};
    ref_grads[n01] = {-2.0 * eta, 2.0 * (1.0 - xi)};
    ref_grads[n11] = {2.0 * eta, 2.0 * xi};
    return;
  }

  const auto tri = triangle_table(ft);
  double lambda[3];
  const int r = pick_triangle(tri, q, ref, lambda);
  const Vec2 v[3] = {kRefNode[tri[r][0]], kRefNode[tri[r][1]], kRefNode[tri[r][2]]};
  const double area2 = cross(v[1] - v[0], v[2] - v[0]);
  for (int k = 0; k < 3; ++k) {
    const Vec2 e = v[(k + 2) % 3] - v[(k + 1) % 3];
    values[tri[r][k]] = lambda[k];
    ref_grads[tri[r][k]] = {-e.y / area2, e.x / area2};
  }
}

void shape_coarse(FemType ft, DiagKind diag, const Vec2& ref,
                  std::array<double, 4>& values, std::array<Vec2, 4>& ref_grads) {
  const double x = ref.x;
  const double y = ref.y;
  values.fill(0.0);
  ref_grads.fill({0.0, 0.0});

  if (ft == FemType::P0) {
    // Patch-global bilinears; order bl, br, tl, tr.
    values = {(1.0 - x) * (1.0 - y), x * (1.0 - y), (1.0 - x) * y, x * y};
    ref_grads[0] = {-(1.0 - y), -(1.0 - x)};
    ref_grads[1] = {1.0 - y, -x};
    ref_grads[2] = {-y, 1.0 - x};
    ref_grads[3] = {y, x};
    return;
  }

  if (diag == DiagKind::Main) {
    if (y <= x) {  // triangle (bl, br, tr)
      values[0] = 1.0 - x;
      values[1] = x - y;
      values[3] = y;
      ref_grads[0] = {-1.0, 0.0};
      ref_grads[1] = {1.0, -1.0};
      ref_grads[3] = {0.0, 1.0};
    } else {  // triangle (bl, tr, tl)
      values[0] = 1.0 - y;
      values[3] = x;
      values[2] = y - x;
      ref_grads[0] = {0.0, -1.0};
      ref_grads[3] = {1.0, 0.0};
      ref_grads[2] = {-1.0, 1.0};
    }
  } else {
    if (x + y <= 1.0) {  // triangle (bl, br, tl)
      values[0] = 1.0 - x - y;
      values[1] = x;
      values[2] = y;
      ref_grads[0] = {-1.0, -1.0};
      ref_grads[1] = {1.0, 0.0};
      ref_grads[2] = {0.0, 1.0};
    } else {  // triangle (br, tr, tl)
      values[1] = 1.0 - y;
      values[3] = x + y - 1.0;
      values[2] = 1.0 - x;
      ref_grads[1] = {0.0, -1.0};
      ref_grads[3] = {1.0, 1.0};
      ref_grads[2] = {-1.0, 0.0};
    }
  }
}

}  // namespace locmodfe
