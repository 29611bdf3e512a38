#include "locmodfe/patch_mesh.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace locmodfe {

namespace {

// Corner local ids in mask-bit order bl, br, tl, tr.
constexpr int kMaskCorner[4] = {0, 2, 6, 8};

// Edge connecting two adjacent corners (local ids) -> edge id.
int edge_between_corners(int c1, int c2) {
  for (int e = 0; e < 4; ++e) {
    const int s = kEdge[e][0], t = kEdge[e][1];
    if ((s == c1 && t == c2) || (s == c2 && t == c1)) return e;
  }
  return -1;
}

Vec2 lerp(const Vec2& a, const Vec2& b, double t) { return a + t * (b - a); }

Vec2 project_on_diag(const Vec2& p, DiagKind diag) {
  if (diag == DiagKind::Main) {
    const double t = 0.5 * (p.x + p.y);
    return {t, t};
  }
  const double u = 0.5 * (1.0 - p.x + p.y);
  return {1.0 - u, u};
}

// Fills chi with side signs relative to the chord a->b (0 on the chord nodes
// listed in `zero`); every other node gets the sign of its cross product.
template <std::size_t N>
void chord_side_signs(PatchShape& s, const Vec2& a, const Vec2& b,
                      const std::array<int, N>& zero) {
  const Vec2 d = b - a;
  for (int i = 0; i < 9; ++i) {
    const double c = cross(d, s.node[i] - a);
    s.chi[i] = c > 0.0 ? int8_t{1} : int8_t{-1};
  }
  for (int z : zero) s.chi[z] = 0;
}

}  // namespace

PatchShape build_patch_uncut() {
  PatchShape s;
  s.chi.fill(1);
  return s;
}

PatchShape build_patch_A(Axis axis, double c, double d, PlacementMode mode) {
  PatchShape s;
  s.config = CutConfig::A;
  const bool vertical = axis == Axis::Vertical;
  if (vertical) {
    s.node[1] = {c, 0.0};
    s.node[7] = {d, 1.0};
    s.moved[1] = s.moved[7] = kCutMove;
  } else {
    s.node[3] = {0.0, c};
    s.node[5] = {1.0, d};
    s.moved[3] = s.moved[5] = kCutMove;
  }
  s.femtype = c >= d ? FemType::P2 : FemType::P3;
  s.diag = s.femtype == FemType::P2 ? DiagKind::Main : DiagKind::Anti;

  if (mode == PlacementMode::Standard) {
    // Midpoint of the two cut points; lies on the chord.
    s.node[4] = vertical ? Vec2{0.5 * (c + d), 0.5} : Vec2{0.5, 0.5 * (c + d)};
  } else {
    // Intersection of the chord with the coarse diagonal.
    if (s.femtype == FemType::P2) {
      const double t = c / (1.0 + c - d);
      s.node[4] = {t, t};
    } else {
      const double u = (1.0 - c) / (1.0 + d - c);
      s.node[4] = vertical ? Vec2{1.0 - u, u} : Vec2{u, 1.0 - u};
    }
    // Repair: the midpoints of the two un-cut edges take the along-chord
    // coordinate of the center node, keeping all angles bounded when the
    // center sits close to a patch corner.
    if (vertical) {
      s.node[3] = {0.0, s.node[4].y};
      s.node[5] = {1.0, s.node[4].y};
      s.moved[3] = s.moved[5] = kRepairMove;
    } else {
      s.node[1] = {s.node[4].x, 0.0};
      s.node[7] = {s.node[4].x, 1.0};
      s.moved[1] = s.moved[7] = kRepairMove;
    }
  }
  s.moved[4] = kCenterMove;

  if (vertical) {
    s.n_segments = 2;
    s.segment[0] = {1, 4};
    s.segment[1] = {4, 7};
    chord_side_signs(s, s.node[1], s.node[7], std::array<int, 3>{1, 4, 7});
  } else {
    s.n_segments = 2;
    s.segment[0] = {3, 4};
    s.segment[1] = {4, 5};
    chord_side_signs(s, s.node[3], s.node[5], std::array<int, 3>{3, 4, 5});
  }
  return s;
}

PatchShape build_patch_B(int iso_corner, double u, double v, PlacementMode mode,
                         BMidpointRule b_rule) {
  PatchShape s;
  s.config = CutConfig::B;
  const int he = (iso_corner == 0 || iso_corner == 2) ? 0 : 2;  // bottom / top
  const int ve = (iso_corner == 0 || iso_corner == 6) ? 3 : 1;  // left / right
  const int hmid = kEdge[he][2];
  const int vmid = kEdge[ve][2];
  const Vec2 hcut{u, he == 0 ? 0.0 : 1.0};
  const Vec2 vcut{ve == 3 ? 0.0 : 1.0, v};
  s.node[hmid] = hcut;
  s.node[vmid] = vcut;
  s.moved[hmid] = s.moved[vmid] = kCutMove;
  // The coarse diagonal must avoid the isolated corner.
  s.femtype = (iso_corner == 0 || iso_corner == 8) ? FemType::P3 : FemType::P2;
  s.diag = s.femtype == FemType::P2 ? DiagKind::Main : DiagKind::Anti;

  if (mode == PlacementMode::Standard) {
    if (b_rule == BMidpointRule::EdgeAverage) {
      s.node[4] = 0.25 * (s.node[1] + s.node[3] + s.node[5] + s.node[7]);
    } else {
      s.node[4] = line_intersection(s.node[1], s.node[7], s.node[5], s.node[3]);
    }
  } else {
    s.node[4] = project_on_diag(hcut, s.diag);
  }
  s.moved[4] = kCenterMove;

  s.n_segments = 1;
  s.segment[0] = {static_cast<int8_t>(hmid), static_cast<int8_t>(vmid)};
  chord_side_signs(s, hcut, vcut, std::array<int, 2>{hmid, vmid});
  return s;
}

PatchShape build_patch_C(int corner, int edge_id, double t, PlacementMode mode) {
  const int es = kEdge[edge_id][0], ee = kEdge[edge_id][1], mid = kEdge[edge_id][2];
  assert(corner != es && corner != ee);
  PatchShape s;
  s.config = CutConfig::C;
  const Vec2 cut = lerp(kRefNode[es], kRefNode[ee], t);
  const Vec2 vtx = kRefNode[corner];
  s.node[mid] = cut;
  s.moved[mid] = kCutMove;
  s.femtype = FemType::P1;
  // The coarse diagonal not passing through the cut corner.
  s.diag = (corner == 0 || corner == 8) ? DiagKind::Anti : DiagKind::Main;

  if (mode == PlacementMode::Standard) {
    s.node[4] = 0.5 * (vtx + cut);
  } else {
    const Vec2 d1 = s.diag == DiagKind::Anti ? Vec2{0.0, 1.0} : Vec2{0.0, 0.0};
    const Vec2 d2 = s.diag == DiagKind::Anti ? Vec2{1.0, 0.0} : Vec2{1.0, 1.0};
    s.node[4] = line_intersection(vtx, cut, d1, d2);
    if (edge_id == 0 || edge_id == 2) {  // chord runs vertically
      s.node[3] = {0.0, s.node[4].y};
      s.node[5] = {1.0, s.node[4].y};
      s.moved[3] = s.moved[5] = kRepairMove;
    } else {  // chord runs horizontally
      s.node[1] = {s.node[4].x, 0.0};
      s.node[7] = {s.node[4].x, 1.0};
      s.moved[1] = s.moved[7] = kRepairMove;
    }
  }
  s.moved[4] = kCenterMove;

  s.n_segments = 2;
  s.segment[0] = {static_cast<int8_t>(corner), 4};
  s.segment[1] = {4, static_cast<int8_t>(mid)};
  chord_side_signs(s, vtx, cut, std::array<int, 3>{corner, 4, mid});
  return s;
}

PatchShape build_patch_D(DiagKind cut_diag) {
  PatchShape s;
  s.config = CutConfig::D;
  s.femtype = FemType::P1;
  s.diag = cut_diag;
  s.moved[4] = kCenterMove;  // stays at the patch center
  const int c1 = cut_diag == DiagKind::Main ? 0 : 2;
  const int c2 = cut_diag == DiagKind::Main ? 8 : 6;
  s.n_segments = 2;
  s.segment[0] = {static_cast<int8_t>(c1), 4};
  s.segment[1] = {4, static_cast<int8_t>(c2)};
  chord_side_signs(s, kRefNode[c1], kRefNode[c2], std::array<int, 3>{c1, 4, c2});
  return s;
}

PatchShape build_patch_q1(unsigned corner_mask) {
  PatchShape s;
  s.config = CutConfig::Q1;
  s.chi.fill(1);
  int corners[2];
  int n_set = 0;
  for (int b = 0; b < 4; ++b)
    if (corner_mask & (1u << b)) {
      assert(n_set < 2);
      corners[n_set++] = kMaskCorner[b];
      s.chi[kMaskCorner[b]] = 0;
    }
  if (n_set == 2) {
    // Interface runs along the patch edge between the two corners.
    const int e = edge_between_corners(corners[0], corners[1]);
    assert(e >= 0);
    const int mid = kEdge[e][2];
    s.chi[mid] = 0;
    s.n_segments = 2;
    s.segment[0] = {static_cast<int8_t>(kEdge[e][0]), static_cast<int8_t>(mid)};
    s.segment[1] = {static_cast<int8_t>(mid), static_cast<int8_t>(kEdge[e][1])};
    s.segment_edge = e;
  }
  return s;
}

PatchShape build_patch_q1i(int corner, int edge_id, double t) {
  const int es = kEdge[edge_id][0], ee = kEdge[edge_id][1], mid = kEdge[edge_id][2];
  assert(corner == es || corner == ee);
  PatchShape s;
  s.config = CutConfig::Q1I;
  const Vec2 cut = lerp(kRefNode[es], kRefNode[ee], t);
  s.node[mid] = cut;
  s.moved[mid] = kCutMove;
  // Mean of the four edge midpoints keeps the sub-quads convex.
  s.node[4] = 0.25 * (s.node[1] + s.node[3] + s.node[5] + s.node[7]);
  s.moved[4] = kCenterMove;
  s.chi.fill(1);
  s.chi[corner] = 0;
  s.chi[mid] = 0;
  s.n_segments = 1;
  s.segment[0] = {static_cast<int8_t>(corner), static_cast<int8_t>(mid)};
  s.segment_edge = edge_id;
  return s;
}

double max_interior_angle(const PatchShape& shape) {
  double worst = 0.0;
  if (shape.femtype == FemType::P0) {
    for (const auto& q : kSubQuad)
      worst = std::max(worst, max_angle_quad(shape.node[q[0]], shape.node[q[1]],
                                             shape.node[q[2]], shape.node[q[3]]));
    return worst;
  }
  const auto tri = triangle_table(shape.femtype);
  for (int r = 0; r < 8; ++r)
    worst = std::max(worst, max_angle_triangle(shape.node[tri[r][0]],
                                               shape.node[tri[r][1]],
                                               shape.node[tri[r][2]]));
  return worst;
}

bool subquads_convex(const PatchShape& shape) {
  for (const auto& q : kSubQuad) {
    const Vec2 p[4] = {shape.node[q[0]], shape.node[q[1]], shape.node[q[2]],
                       shape.node[q[3]]};
    bool seen_positive = false;
    for (int i = 0; i < 4; ++i) {
      const double c =
          cross(p[(i + 1) % 4] - p[i], p[(i + 2) % 4] - p[(i + 1) % 4]);
      if (std::abs(c) < 1e-15) continue;  // collinear corner is acceptable
      if (c < 0.0) return false;
      seen_positive = true;
    }
    if (!seen_positive) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Mesh construction
// ---------------------------------------------------------------------------

namespace {

struct EdgeCut {
  bool cut = false;
  double t = 0.0;  // fraction along the canonical edge direction
  int snap = -1;   // -1 interior cut, 0 snapped to start, 1 snapped to end
};

}  // namespace

PatchMesh::PatchMesh(const LevelSet& level_set, Vec2 lower, double extent, int n,
                     const Options& options)
    : lower_(lower), extent_(extent), n_(n), h_(extent / n), options_(options) {
  if (n <= 0) throw std::invalid_argument("PatchMesh: n must be positive");
  build(level_set);
}

std::array<Vec2, 9> PatchMesh::patch_nodes(int p) const {
  std::array<Vec2, 9> out;
  for (int l = 0; l < 9; ++l) out[l] = node_pos_[patches_[p].nodes[l]];
  return out;
}

int PatchMesh::n_cut_patches() const {
  int c = 0;
  for (auto cc : {CutConfig::A, CutConfig::B, CutConfig::C, CutConfig::D})
    c += config_count(cc);
  return c;
}

int PatchMesh::subcell_vertices(int p, int sc, std::array<Vec2, 4>& out) const {
  const PatchInfo& pi = patches_[p];
  if (pi.femtype == FemType::P0) {
    for (int k = 0; k < 4; ++k) out[k] = node_pos_[pi.nodes[kSubQuad[sc][k]]];
    return 4;
  }
  const auto tri = triangle_table(pi.femtype);
  for (int k = 0; k < 3; ++k) out[k] = node_pos_[pi.nodes[tri[sc][k]]];
  return 3;
}

void PatchMesh::build(const LevelSet& level_set) {
  const int m = nodes_per_dim();
  node_pos_.resize(m * m);
  for (int iy = 0; iy < m; ++iy)
    for (int ix = 0; ix < m; ++ix)
      node_pos_[node_id(ix, iy)] = {lower_.x + 0.5 * h_ * ix,
                                    lower_.y + 0.5 * h_ * iy};

  // Corner colors: +1 where chi >= 0 (domain 2), -1 where chi < 0 (domain 1).
  const int nc = n_ + 1;
  std::vector<int8_t> color(nc * nc);
  for (int j = 0; j < nc; ++j)
    for (int i = 0; i < nc; ++i) {
      const Vec2 p = node_pos_[node_id(2 * i, 2 * j)];
      color[j * nc + i] = level_set.value(p) >= 0.0 ? int8_t{1} : int8_t{-1};
    }
  const auto col = [&](int i, int j) { return color[j * nc + i]; };

  // Pass 1: locate interface crossings on all patch edges.  Each edge is
  // processed once, so the moved midpoint positions are conforming by
  // construction.  Horizontal edge (i,j) runs +x from corner (i,j);
  // vertical edge (i,j) runs +y.
  std::vector<EdgeCut> hcut(n_ * nc), vcut(nc * n_);
  std::vector<int8_t> move_flag(m * m, kKept);
  const double eps = options_.snap_tol;

  const auto process_edge = [&](EdgeCut& ec, int ax, int ay, int bx, int by) {
    const Vec2 a = node_pos_[node_id(2 * ax, 2 * ay)];
    const Vec2 b = node_pos_[node_id(2 * bx, 2 * by)];
    ec.cut = true;
    ec.t = find_edge_cut(level_set, a, b);
    if (ec.t < eps) {
      ec.snap = 0;
    } else if (ec.t > 1.0 - eps) {
      ec.snap = 1;
    } else {
      const int mid = node_id(ax + bx, ay + by);
      node_pos_[mid] = lerp(a, b, ec.t);
      move_flag[mid] = kCutMove;
    }
  };

  for (int j = 0; j < nc; ++j)
    for (int i = 0; i < n_; ++i)
      if (col(i, j) * col(i + 1, j) < 0)
        process_edge(hcut[j * n_ + i], i, j, i + 1, j);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < nc; ++i)
      if (col(i, j) * col(i, j + 1) < 0)
        process_edge(vcut[j * nc + i], i, j, i, j + 1);

  // Pass 2: classify each patch and merge its local node placement into the
  // global array.  Patch order is row-major, which makes the first-writer
  // rule for repair moves deterministic.
  patches_.resize(n_ * n_);
  counts_.fill(0);

  // Chords lying on a patch edge can be produced by both patches sharing
  // that edge (or by only one of them, when the other side reads uniformly
  // non-negative).  Deduplicate by global edge so each chord is integrated
  // exactly once.
  std::vector<int8_t> hedge_claimed(n_ * nc, 0), vedge_claimed(nc * n_, 0);

  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      // Edge records in local edge order: bottom, right, top, left.
      const EdgeCut* ec[4] = {&hcut[j * n_ + i], &vcut[j * nc + (i + 1)],
                              &hcut[(j + 1) * n_ + i], &vcut[j * nc + i]};
      int cut_edges[4], n_cut = 0;
      for (int e = 0; e < 4; ++e)
        if (ec[e]->cut) cut_edges[n_cut++] = e;

      PatchShape shape;
      if (n_cut == 0) {
        shape = build_patch_uncut();
      } else if (n_cut != 2) {
        throw InvalidCutError("patch (" + std::to_string(i) + "," +
                              std::to_string(j) + ") has " +
                              std::to_string(n_cut) + " cut edges");
      } else {
        const int e1 = cut_edges[0], e2 = cut_edges[1];
        // Snapped cuts give interface vertices (local corner ids).
        int vtx[2], n_vtx = 0;
        int interior_edge = -1;
        double interior_t = 0.0;
        for (int k = 0; k < 2; ++k) {
          const int e = cut_edges[k];
          if (ec[e]->snap >= 0) {
            vtx[n_vtx++] = kEdge[e][ec[e]->snap];
          } else {
            interior_edge = e;
            interior_t = ec[e]->t;
          }
        }

        if (n_vtx == 0) {
          if ((e1 == 0 && e2 == 2) || (e1 == 1 && e2 == 3)) {
            // Opposite edges: configuration A.  Canonical first edge is the
            // bottom (vertical chord) or the left one (horizontal chord).
            const Axis axis = e1 == 0 ? Axis::Vertical : Axis::Horizontal;
            const double c = axis == Axis::Vertical ? ec[0]->t : ec[3]->t;
            const double d = axis == Axis::Vertical ? ec[2]->t : ec[1]->t;
            shape = build_patch_A(axis, c, d, options_.mode);
          } else {
            // Adjacent edges: configuration B; the shared corner is isolated.
            const int he = (e1 == 0 || e1 == 2) ? e1 : e2;
            const int ve = (e1 == 1 || e1 == 3) ? e1 : e2;
            int iso = -1;
            for (int a : {kEdge[he][0], kEdge[he][1]})
              for (int b : {kEdge[ve][0], kEdge[ve][1]})
                if (a == b) iso = a;
            assert(iso >= 0);
            const double u = he == e1 ? ec[e1]->t : ec[e2]->t;
            const double v = ve == e1 ? ec[e1]->t : ec[e2]->t;
            shape = build_patch_B(iso, u, v, options_.mode, options_.b_rule);
          }
        } else if (n_vtx == 1) {
          const int v0 = vtx[0];
          if (v0 == kEdge[interior_edge][0] || v0 == kEdge[interior_edge][1]) {
            shape = build_patch_q1i(v0, interior_edge, interior_t);
          } else {
            shape = build_patch_C(v0, interior_edge, interior_t, options_.mode);
          }
        } else {
          if (vtx[0] == vtx[1]) {
            unsigned mask = 0;
            for (int b = 0; b < 4; ++b)
              if (kMaskCorner[b] == vtx[0]) mask = 1u << b;
            shape = build_patch_q1(mask);
          } else if ((vtx[0] == 0 && vtx[1] == 8) || (vtx[0] == 8 && vtx[1] == 0)) {
            shape = build_patch_D(DiagKind::Main);
          } else if ((vtx[0] == 2 && vtx[1] == 6) || (vtx[0] == 6 && vtx[1] == 2)) {
            shape = build_patch_D(DiagKind::Anti);
          } else {
            // Adjacent corners: interface along the connecting edge.
            unsigned mask = 0;
            for (int b = 0; b < 4; ++b)
              if (kMaskCorner[b] == vtx[0] || kMaskCorner[b] == vtx[1])
                mask |= 1u << b;
            shape = build_patch_q1(mask);
          }
        }
      }

      PatchInfo& pi = patches_[patch_index(i, j)];
      pi.femtype = shape.femtype;
      pi.diag = shape.diag;
      pi.config = shape.config;
      counts_[static_cast<int>(shape.config)] += 1;

      // Global node ids of the 9 local nodes.
      for (int ky = 0; ky < 3; ++ky)
        for (int kx = 0; kx < 3; ++kx)
          pi.nodes[3 * ky + kx] = node_id(2 * i + kx, 2 * j + ky);

      // Merge moved positions.  Cut moves were already applied edge-wise in
      // pass 1; center moves are patch-private; repair moves follow a
      // first-writer-wins rule on shared midpoints.
      for (int l = 0; l < 9; ++l) {
        if (shape.moved[l] == kKept) continue;
        const int g = pi.nodes[l];
        const Vec2 phys{lower_.x + h_ * (i + shape.node[l].x),
                        lower_.y + h_ * (j + shape.node[l].y)};
        if (shape.moved[l] == kCenterMove) {
          node_pos_[g] = phys;
        } else if (shape.moved[l] == kRepairMove) {
          if (move_flag[g] == kKept) {
            node_pos_[g] = phys;
            move_flag[g] = kRepairMove;
          }
        } else {
          assert(distance(node_pos_[g], phys) <= 1e-9 * h_);
        }
      }

      // Calibrate the chord side signs against the level-set corner colors.
      const int8_t cols[4] = {col(i, j), col(i + 1, j), col(i, j + 1),
                              col(i + 1, j + 1)};  // bl, br, tl, tr
      int flip = 0;
      for (int b = 0; b < 4 && flip == 0; ++b) {
        const int l = kMaskCorner[b];
        if (shape.chi[l] != 0) flip = shape.chi[l] == cols[b] ? 1 : -1;
      }
      assert(flip != 0);
      for (int l = 0; l < 9; ++l)
        pi.chi[l] = static_cast<int8_t>(flip * shape.chi[l]);

      // Sub-cell domains from the nodal side signs.
      const int nsc = n_subcells(pi.femtype);
      const auto tri = triangle_table(pi.femtype);
      for (int sc = 0; sc < nsc; ++sc) {
        int dom = 0;
        const int nv = pi.femtype == FemType::P0 ? 4 : 3;
        for (int k = 0; k < nv && dom == 0; ++k) {
          const int l = pi.femtype == FemType::P0 ? kSubQuad[sc][k] : tri[sc][k];
          if (pi.chi[l] != 0) dom = pi.chi[l] < 0 ? 1 : 2;
        }
        assert(dom != 0);
        pi.subdomain[sc] = static_cast<int8_t>(dom);
      }

      // Interface chord segments.  A chord lying on a patch edge is kept by
      // the first patch (row-major order) that claims that global edge.
      pi.n_segments = 0;
      if (shape.n_segments > 0) {
        bool keep = true;
        if (shape.segment_edge >= 0) {
          int8_t* claimed;
          if (shape.segment_edge == 0 || shape.segment_edge == 2) {
            const int jj = j + (shape.segment_edge == 2 ? 1 : 0);
            claimed = &hedge_claimed[jj * n_ + i];
          } else {
            const int ii = i + (shape.segment_edge == 1 ? 1 : 0);
            claimed = &vedge_claimed[j * nc + ii];
          }
          keep = (*claimed == 0);
          *claimed = 1;
        }
        if (keep) {
          pi.n_segments = shape.n_segments;
          pi.segment = shape.segment;
        }
      }
    }
}

MeshStatistics PatchMesh::statistics() const {
  MeshStatistics st;
  bool first = true;
  for (int p = 0; p < n_patches(); ++p) {
    const int nsc = n_subcells(patches_[p].femtype);
    for (int sc = 0; sc < nsc; ++sc) {
      std::array<Vec2, 4> v;
      const int nv = subcell_vertices(p, sc, v);
      double area;
      if (nv == 4) {
        area = std::abs(quad_area(v[0], v[1], v[2], v[3]));
      } else {
        area = std::abs(triangle_area(v[0], v[1], v[2]));
      }
      double emin = 0.0, emax = 0.0;
      for (int k = 0; k < nv; ++k) {
        const double e = distance(v[k], v[(k + 1) % nv]);
        if (k == 0) {
          emin = emax = e;
        } else {
          emin = std::min(emin, e);
          emax = std::max(emax, e);
        }
      }
      if (first) {
        st.area_max = st.area_min = area;
        st.edge_max = emax;
        st.edge_min = emin;
        st.aspect_max = emax / emin;
        first = false;
      } else {
        st.area_max = std::max(st.area_max, area);
        st.area_min = std::min(st.area_min, area);
        st.edge_max = std::max(st.edge_max, emax);
        st.edge_min = std::min(st.edge_min, emin);
        st.aspect_max = std::max(st.aspect_max, emax / emin);
      }
    }
  }
  st.area_ratio = st.area_max / st.area_min;
  return st;
}

}  // namespace locmodfe
