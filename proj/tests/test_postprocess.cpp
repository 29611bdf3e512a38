#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "locmodfe/postprocess.hpp"
#include "locmodfe/problems.hpp"
#include "support/oracles.hpp"

using namespace locmodfe;

namespace {

InterfaceProblem exact_only(std::function<double(const Vec2&)> u,
                            std::function<Vec2(const Vec2&)> g) {
  InterfaceProblem p;
  p.has_exact = true;
  p.u1 = p.u2 = u;
  p.grad_u1 = p.grad_u2 = g;
  p.f1 = p.f2 = [](const Vec2&) { return 0.0; };
  p.dirichlet = u;
  return p;
}

}  // namespace

TEST_CASE("error norms of u = xy on an uncut patch are exact") {
  // Zero discrete solution: the error is u itself.  The tensor Gauss rule
  // integrates (xy)^2 and |grad(xy)|^2 exactly on [0,1]^2:
  //   ||u||^2 = 1/9,  |u|_H1^2 = 2/3.
  CircleLevelSet far({5.0, 5.0}, 0.5);
  const PatchMesh mesh(far, {0.0, 0.0}, 1.0, 1, {});
  const auto prob = exact_only([](const Vec2& p) { return p.x * p.y; },
                               [](const Vec2& p) { return Vec2{p.y, p.x}; });
  std::vector<double> zero(mesh.n_nodes(), 0.0);
  for (BasisKind basis : {BasisKind::Standard, BasisKind::Hierarchical}) {
    const auto e = compute_errors(mesh, zero, basis, prob);
    CHECK(e.l2 == doctest::Approx(std::sqrt(1.0 / 9.0)).epsilon(1e-13));
    CHECK(e.h1 == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
  }
}

TEST_CASE("error norms of u = x + 2y on a cut patch are exact") {
  // The 3-point triangle rule is exact for quadratics on every triangle, so
  // the result is independent of how the interface splits the patch:
  //   ||u||^2 = 8/3,  |u|_H1^2 = 5.
  LineLevelSet ls({1.0, 0.0}, -0.37);
  for (PlacementMode mode :
       {PlacementMode::Standard, PlacementMode::Hierarchical}) {
    PatchMesh::Options opt;
    opt.mode = mode;
    const PatchMesh mesh(ls, {0.0, 0.0}, 1.0, 1, opt);
    REQUIRE(mesh.config_count(CutConfig::A) == 1);
    const auto prob =
        exact_only([](const Vec2& p) { return p.x + 2.0 * p.y; },
                   [](const Vec2&) { return Vec2{1.0, 2.0}; });
    std::vector<double> zero(mesh.n_nodes(), 0.0);
    const auto e = compute_errors(mesh, zero, BasisKind::Standard, prob);
    CHECK(e.l2 == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-13));
    CHECK(e.h1 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
  }
}

TEST_CASE("interpolation reproduces linear functions to rounding") {
  CircleLevelSet circle({0.0, 0.0}, 0.5);
  const auto g = [](const Vec2& p) { return 0.7 - 1.2 * p.x + 0.4 * p.y; };
  const auto prob =
      exact_only(g, [](const Vec2&) { return Vec2{-1.2, 0.4}; });
  for (PlacementMode mode :
       {PlacementMode::Standard, PlacementMode::Hierarchical}) {
    PatchMesh::Options opt;
    opt.mode = mode;
    const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, 8, opt);
    for (BasisKind basis : {BasisKind::Standard, BasisKind::Hierarchical}) {
      const auto coef = interpolate(mesh, basis, g);
      const auto e = compute_errors(mesh, coef, basis, prob);
      CHECK(e.l2 <= 1e-12);
      CHECK(e.h1 <= 1e-11);
    }
  }
}

TEST_CASE("nodal_values inverts the hierarchical expansion") {
  CircleLevelSet circle({0.0, 1e-3}, 0.5);
  PatchMesh::Options opt;
  opt.mode = PlacementMode::Hierarchical;
  const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, 8, opt);
  const auto g = [](const Vec2& p) {
    return std::sin(p.x) + 0.3 * p.y * p.y;
  };
  const auto coef = interpolate(mesh, BasisKind::Hierarchical, g);
  const auto nodal = nodal_values(mesh, BasisKind::Hierarchical, coef);
  for (int i = 0; i < mesh.n_nodes(); ++i)
    CHECK(nodal[i] == doctest::Approx(g(mesh.node_position(i))).epsilon(1e-12));

  // Standard basis: nodal values are the coefficients themselves.
  const auto coef_s = interpolate(mesh, BasisKind::Standard, g);
  const auto nodal_s = nodal_values(mesh, BasisKind::Standard, coef_s);
  for (int i = 0; i < mesh.n_nodes(); ++i) CHECK(nodal_s[i] == coef_s[i]);
}

TEST_CASE("hierarchical and standard interpolants are the same function") {
  CircleLevelSet circle({0.0, 0.0}, 0.5);
  PatchMesh::Options opt;
  opt.mode = PlacementMode::Hierarchical;
  const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, 4, opt);
  const auto g = [](const Vec2& p) { return p.x * p.x - 0.5 * p.y + 0.25; };
  const auto ch = interpolate(mesh, BasisKind::Hierarchical, g);
  const auto cs = interpolate(mesh, BasisKind::Standard, g);

  FeValues fh(BasisKind::Hierarchical), fs(BasisKind::Standard);
  for (int p = 0; p < mesh.n_patches(); ++p) {
    fh.reinit(mesh, p);
    fs.reinit(mesh, p);
    const auto& nodes = mesh.patch(p).nodes;
    for (int q = 0; q < fh.n_q(); ++q) {
      double uh = 0.0, us = 0.0;
      for (int i = 0; i < 9; ++i) {
        uh += ch[nodes[i]] * fh.shape_value(i, q);
        us += cs[nodes[i]] * fs.shape_value(i, q);
      }
      CHECK(uh == doctest::Approx(us).epsilon(1e-12));
    }
  }
}

TEST_CASE("convergence_rate") {
  CHECK(convergence_rate(4e-2, 1e-2) == doctest::Approx(2.0));
  CHECK(convergence_rate(2e-3, 1e-3) == doctest::Approx(1.0));
}

TEST_CASE("VTK output has the expected structure") {
  CircleLevelSet circle({0.0, 0.0}, 0.5);
  const PatchMesh mesh(circle, {-1.0, -1.0}, 2.0, 4, {});
  CHECK(mesh.config_count(CutConfig::D) == 4);
  CHECK(mesh.config_count(CutConfig::Uncut) == 12);

  std::vector<double> nodal(mesh.n_nodes());
  for (int i = 0; i < mesh.n_nodes(); ++i)
    nodal[i] = mesh.node_position(i).x;
  const std::string path = "test_postprocess_out.vtk";
  write_vtk(path, mesh, nodal);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  CHECK(text.find("# vtk DataFile Version 3.0") == 0);
  CHECK(text.find("DATASET UNSTRUCTURED_GRID") != std::string::npos);
  CHECK(text.find("POINTS 81 double") != std::string::npos);
  // 12 uncut patches x 4 quads + 4 cut patches x 8 triangles = 80 cells;
  // connectivity list size 12*4*5 + 4*8*4 = 368.
  CHECK(text.find("CELLS 80 368") != std::string::npos);
  CHECK(text.find("CELL_TYPES 80") != std::string::npos);
  CHECK(text.find("SCALARS solution double 1") != std::string::npos);
  CHECK(text.find("LOOKUP_TABLE default") != std::string::npos);
  CHECK(text.find("SCALARS domain int 1") != std::string::npos);
  CHECK(text.find("SCALARS femtype int 1") != std::string::npos);
  std::remove(path.c_str());
}
