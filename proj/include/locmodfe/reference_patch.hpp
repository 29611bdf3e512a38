// Reference description of a mesh patch.
//
// A patch carries 9 local nodes on the reference square [0,1]^2, numbered
// lexicographically:
//
//   6 7 8        (0,1)   (0.5,1)   (1,1)
//   3 4 5   =    (0,0.5) (0.5,0.5) (1,0.5)
//   0 1 2        (0,0)   (0.5,0)   (1,0)
//
// Depending on how the interface crosses the patch, it is subdivided either
// into four quadrilaterals (femtype P0, no cut) or into eight triangles whose
// diagonal pattern is one of
//
//   P2: all four sub-quads split along their local main diagonal,
//   P3: all four sub-quads split along their local anti diagonal,
//   P1: diagonals chosen so every one passes through the patch center and a
//       patch corner (main in the lower-left/upper-right sub-quads, anti in
//       the other two).
#pragma once

#include <array>
#include <vector>

#include "locmodfe/geometry.hpp"

namespace locmodfe {

inline constexpr int kNodesPerPatch = 9;

enum class FemType : int { P0 = 0, P1 = 1, P2 = 2, P3 = 3 };

enum class DiagKind : int { Main = 0, Anti = 1 };

// Reference positions of the 9 local nodes (lexicographic order).
inline constexpr std::array<Vec2, 9> kRefNode = {
    Vec2{0.0, 0.0}, Vec2{0.5, 0.0}, Vec2{1.0, 0.0},
    Vec2{0.0, 0.5}, Vec2{0.5, 0.5}, Vec2{1.0, 0.5},
    Vec2{0.0, 1.0}, Vec2{0.5, 1.0}, Vec2{1.0, 1.0}};

// Sub-quadrilaterals for femtype P0, each as (bl, br, tr, tl) in local ids,
// ordered BL, BR, TL, TR.
inline constexpr int kSubQuad[4][4] = {
    {0, 1, 4, 3}, {1, 2, 5, 4}, {3, 4, 7, 6}, {4, 5, 8, 7}};

// Sub-triangles for the cut femtypes.  Rows come in pairs per sub-quad in the
// order BL, BR, TL, TR; each triangle is counter-clockwise.
inline constexpr int kTriMain[8][3] = {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4},
                                       {3, 4, 7}, {3, 7, 6}, {4, 5, 8}, {4, 8, 7}};
inline constexpr int kTriAnti[8][3] = {{0, 1, 3}, {1, 4, 3}, {1, 2, 4}, {2, 5, 4},
                                       {3, 4, 6}, {4, 7, 6}, {4, 5, 7}, {5, 8, 7}};
inline constexpr int kTriCross[8][3] = {{0, 1, 4}, {0, 4, 3}, {1, 2, 4}, {2, 5, 4},
                                        {3, 4, 6}, {4, 7, 6}, {4, 5, 8}, {4, 8, 7}};

// Patch edges as (start, end, midpoint) in local ids; canonical direction is
// +x for horizontal and +y for vertical edges.  Order: bottom, right, top,
// left.
inline constexpr int kEdge[4][3] = {{0, 2, 1}, {2, 8, 5}, {6, 8, 7}, {0, 6, 3}};

inline constexpr int kCornerNode[4] = {0, 2, 6, 8};  // bl, br, tl, tr

const int (*triangle_table(FemType ft))[3];

// Number of sub-cells: 4 quads for P0, 8 triangles otherwise.
inline int n_subcells(FemType ft) { return ft == FemType::P0 ? 4 : 8; }

// Patch-local quadrature rule on the reference square.  Each point records
// the sub-cell it lies in.  P0 uses a 2x2 tensor Gauss rule per sub-quad
// (16 points); the cut femtypes use a 3-point second-order interior rule per
// triangle (24 points).  Weights refer to the reference square.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;
  std::vector<int> subcell;
  int size() const { return static_cast<int>(points.size()); }
};

const QuadratureRule& patch_quadrature(FemType ft);

// Values and reference gradients of the 9 standard (piecewise bi/linear,
// nodal) basis functions at a reference point.
void shape_std(FemType ft, const Vec2& ref, std::array<double, 9>& values,
               std::array<Vec2, 9>& ref_grads);

// Values and reference gradients of the 4 coarse functions of the
// hierarchical basis, in corner order (bl, br, tl, tr) = local (0, 2, 6, 8).
// On uncut patches these are the patch-global bilinears; on cut patches they
// are linear on the two halves of the patch split along `diag`.
void shape_coarse(FemType ft, DiagKind diag, const Vec2& ref,
                  std::array<double, 4>& values, std::array<Vec2, 4>& ref_grads);

// Index of the sub-cell containing a reference point (boundary points are
// assigned to one adjacent sub-cell deterministically).
int locate_subcell(FemType ft, const Vec2& ref);

}  // namespace locmodfe
