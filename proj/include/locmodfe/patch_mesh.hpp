// Patch mesh with local modifications resolving a level-set interface.
//
// The mesh is a fixed n x n grid of square patches.  Patches crossed by the
// interface have some of their 9 local nodes moved: edge midpoints slide to
// the points where the interface crosses patch edges, and the center node is
// placed so that the resulting sub-triangles have bounded interior angles.
// The mesh topology (patches, node count, sparsity couplings) never changes;
// only node positions and the sub-cell split pattern of cut patches do.
//
// Cut configurations:
//   A   interface crosses two opposite edges
//   B   interface crosses two adjacent edges (one corner isolated)
//   C   interface passes through a corner and a non-adjacent edge
//   D   interface passes through two opposite corners
//   Q1  interface passes through one corner only, or runs along a patch edge
//   Q1I interface passes through a corner and the interior of an edge
//       containing that corner
//
// Node placement supports two modes.  Standard mode places the center node
// on the interface chord (A, C) or by the edge-line intersection / average
// rule (B).  Hierarchical mode constrains the center node to the coarse
// diagonal of the patch and additionally moves the midpoints of the un-cut
// edges in configurations A and C so that the maximum interior angle stays
// bounded.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "locmodfe/level_set.hpp"
#include "locmodfe/reference_patch.hpp"

namespace locmodfe {

enum class PlacementMode { Standard, Hierarchical };

// Center placement rule for configuration B in standard mode:
//   Intersection - intersection of the lines through opposite edge midpoints
//                  (keeps the maximum angle below 144 degrees),
//   EdgeAverage  - arithmetic mean of the four edge midpoints (matches a
//                  widely used variant; angles can reach ~152 degrees).
enum class BMidpointRule { Intersection, EdgeAverage };

enum class CutConfig : int { Uncut = 0, A, B, C, D, Q1, Q1I, kCount };

enum class Axis { Vertical, Horizontal };

struct InvalidCutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node move tags used when merging patch-local placement into the global,
// conforming node array.
inline constexpr int8_t kKept = 0;
inline constexpr int8_t kCutMove = 1;     // edge midpoint moved to a cut point
inline constexpr int8_t kCenterMove = 2;  // patch center placement
inline constexpr int8_t kRepairMove = 3;  // un-cut edge midpoint adjustment

// A single patch in reference coordinates [0,1]^2 with all local
// modifications applied.
struct PatchShape {
  std::array<Vec2, 9> node = kRefNode;
  FemType femtype = FemType::P0;
  DiagKind diag = DiagKind::Main;
  CutConfig config = CutConfig::Uncut;
  std::array<int8_t, 9> moved{};
  // Side signs relative to the interface chord: 0 on the chord, +-1 on the
  // two sides.  Uncalibrated; the mesh flips them to match the level set.
  std::array<int8_t, 9> chi{};
  int n_segments = 0;                              // interface chord segments
  std::array<std::array<int8_t, 2>, 2> segment{};  // local node id pairs
  int segment_edge = -1;  // patch edge the chord lies on (Q1/Q1I), else -1
};

// Patch builders.  Cut fractions are measured along the canonical edge
// direction (+x for horizontal, +y for vertical edges) and lie in (0,1).
PatchShape build_patch_uncut();
// axis = Vertical: cuts (c,0) on the bottom and (d,1) on the top edge;
// axis = Horizontal: cuts (0,c) on the left and (1,d) on the right edge.
PatchShape build_patch_A(Axis axis, double c, double d, PlacementMode mode);
// iso_corner (local id 0/2/6/8) is the corner isolated by the chord; u is the
// cut fraction on the horizontal cut edge, v on the vertical one.
PatchShape build_patch_B(int iso_corner, double u, double v, PlacementMode mode,
                         BMidpointRule b_rule);
// corner (local id) is the vertex the interface passes through; (edge_id, t)
// the cut on the non-adjacent edge (edge ids 0..3 = bottom, right, top, left).
PatchShape build_patch_C(int corner, int edge_id, double t, PlacementMode mode);
// cut_diag names the diagonal the interface runs along.
PatchShape build_patch_D(DiagKind cut_diag);
// corner_mask: bit c set if corner c (order bl, br, tl, tr) lies on the
// interface.  One bit or two bits of an edge-sharing pair.
PatchShape build_patch_q1(unsigned corner_mask);
// corner (local id) on the interface plus a cut at fraction t of edge_id,
// an edge containing that corner.
PatchShape build_patch_q1i(int corner, int edge_id, double t);

// Largest interior angle in degrees over the sub-cells of a patch.
double max_interior_angle(const PatchShape& shape);
// True if all four sub-quads of a P0 patch are convex and counter-clockwise.
bool subquads_convex(const PatchShape& shape);

struct MeshStatistics {
  double area_max = 0.0;
  double area_min = 0.0;
  double area_ratio = 0.0;
  double edge_max = 0.0;
  double edge_min = 0.0;
  double aspect_max = 0.0;  // max over cells of (longest side / shortest side)
};

struct PatchInfo {
  std::array<int, 9> nodes;  // global node ids, lexicographic local order
  FemType femtype = FemType::P0;
  DiagKind diag = DiagKind::Main;
  CutConfig config = CutConfig::Uncut;
  std::array<int8_t, 9> chi{};        // nodal interface-side signs (-1, 0, +1)
  std::array<int8_t, 8> subdomain{};  // per sub-cell: domain 1 (chi<0) or 2
  int n_segments = 0;
  std::array<std::array<int8_t, 2>, 2> segment{};
};

class PatchMesh {
 public:
  struct Options {
    PlacementMode mode = PlacementMode::Standard;
    BMidpointRule b_rule = BMidpointRule::Intersection;
    double snap_tol = 1e-10;  // relative vertex-snap tolerance for edge cuts
  };

  // Builds the mesh for the square domain [lower, lower+extent]^2 divided
  // into n x n patches.
  PatchMesh(const LevelSet& level_set, Vec2 lower, double extent, int n,
            const Options& options);

  int n() const { return n_; }
  double h() const { return h_; }
  Vec2 lower() const { return lower_; }
  int nodes_per_dim() const { return 2 * n_ + 1; }
  int n_nodes() const { return nodes_per_dim() * nodes_per_dim(); }
  int n_patches() const { return n_ * n_; }
  const Options& options() const { return options_; }

  int node_id(int ix, int iy) const { return iy * nodes_per_dim() + ix; }
  const Vec2& node_position(int id) const { return node_pos_[id]; }
  const std::vector<Vec2>& node_positions() const { return node_pos_; }

  const PatchInfo& patch(int p) const { return patches_[p]; }
  int patch_index(int i, int j) const { return j * n_ + i; }
  // Physical coordinates of the 9 local nodes of a patch.
  std::array<Vec2, 9> patch_nodes(int p) const;

  int config_count(CutConfig c) const {
    return counts_[static_cast<int>(c)];
  }
  int n_cut_patches() const;

  // Vertices of sub-cell sc of patch p (3 for triangles, 4 for quads).
  int subcell_vertices(int p, int sc, std::array<Vec2, 4>& out) const;

  MeshStatistics statistics() const;

 private:
  void build(const LevelSet& level_set);

  Vec2 lower_;
  double extent_;
  int n_;
  double h_;
  Options options_;
  std::vector<Vec2> node_pos_;
  std::vector<PatchInfo> patches_;
  std::array<int, static_cast<int>(CutConfig::kCount)> counts_{};
};

}  // namespace locmodfe
