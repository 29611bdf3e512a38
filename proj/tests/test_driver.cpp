#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "locmodfe/driver.hpp"

using namespace locmodfe;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solver list parsing") {
  const auto all = parse_solver_list("cg,dpcg,ssor");
  REQUIRE(all.size() == 3);
  CHECK(all[0] == SolverKind::CG);
  CHECK(all[1] == SolverKind::PCGJacobi);
  CHECK(all[2] == SolverKind::PCGSSOR);

  const auto one = parse_solver_list("ssor");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == SolverKind::PCGSSOR);

  CHECK_THROWS(parse_solver_list("cg,bogus"));
}

TEST_CASE("basis selection from config") {
  RunConfig c;
  c.basis = "both";
  CHECK(bases_from_config(c).size() == 2);
  c.basis = "standard";
  REQUIRE(bases_from_config(c).size() == 1);
  CHECK(bases_from_config(c)[0] == BasisKind::Standard);
  c.basis = "hierarchical";
  CHECK(bases_from_config(c)[0] == BasisKind::Hierarchical);
  c.basis = "nope";
  CHECK_THROWS(bases_from_config(c));
}

TEST_CASE("parameter file loading") {
  const std::string path = "test_driver_params.cfg";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "test_case = 2\n"
        << "level_min = 1\n"
        << "level_max = 3\n"
        << "basis = hierarchical\n"
        << "solvers = dpcg,ssor\n"
        << "stride = 250\n"
        << "kappa1 = 0.25\n"
        << "flux_jump = false\n"
        << "b_midpoint = edge-average\n"
        << "tol = 1e-10\n"
        << "out_dir =\n";
  }
  RunConfig c;
  load_param_file(path, c);
  CHECK(c.test_case == 2);
  CHECK(c.level_min == 1);
  CHECK(c.level_max == 3);
  CHECK(c.basis == "hierarchical");
  REQUIRE(c.solvers.size() == 2);
  CHECK(c.solvers[0] == SolverKind::PCGJacobi);
  CHECK(c.stride == 250);
  CHECK(c.kappa1 == doctest::Approx(0.25));
  CHECK_FALSE(c.flux_jump);
  CHECK(c.b_midpoint == BMidpointRule::EdgeAverage);
  CHECK(c.tol == doctest::Approx(1e-10));
  CHECK(c.out_dir.empty());
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "no_such_key = 1\n";
  }
  RunConfig c2;
  CHECK_THROWS(load_param_file(path, c2));
  std::remove(path.c_str());
}

TEST_CASE("fitted_rate recovers exact slopes") {
  std::vector<int> levels = {1, 2, 3, 4};
  std::vector<double> e2, e1;
  for (int l : levels) {
    e2.push_back(3.0 * std::pow(2.0, -2.0 * l));
    e1.push_back(0.5 * std::pow(2.0, -1.0 * l));
  }
  CHECK(fitted_rate(levels, e2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fitted_rate(levels, e1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("refinement study: errors shrink at the expected rates") {
  RunConfig c;
  c.test_case = 1;
  c.level_min = 0;
  c.level_max = 2;
  c.basis = "both";
  c.solvers = {SolverKind::PCGJacobi};
  c.out_dir = "test_driver_out1";
  const auto res = run_example1(c);
  // 3 levels x 2 bases x 1 solver.
  REQUIRE(res.rows.size() == 6);
  for (const auto& r : res.rows) {
    CHECK(r.converged);
    CHECK(r.iterations > 0);
    CHECK(r.l2_error > 0.0);
    CHECK(r.h1_error > r.l2_error);  // gradients converge more slowly
    CHECK(r.dofs == (8 * (1 << r.level) + 1) * (8 * (1 << r.level) + 1));
    CHECK(r.patches == 16 * (1 << (2 * r.level)));
  }
  // Rates appear from the second level on and are roughly 2 / 1.
  for (const auto& r : res.rows) {
    if (r.level == c.level_min) {
      CHECK_FALSE(r.has_rates);
    } else {
      CHECK(r.has_rates);
      CHECK(r.l2_rate > 1.4);
      CHECK(r.l2_rate < 2.6);
      CHECK(r.h1_rate > 0.6);
      CHECK(r.h1_rate < 1.5);
    }
  }

  const std::string csv = slurp("test_driver_out1/example1.csv");
  CHECK(csv.find("# locmodfe csv v1") == 0);
  CHECK(csv.find("level,patches,dofs,solver,basis,iterations,l2_error,"
                 "h1_error,l2_rate,h1_rate,converged") != std::string::npos);

  // Byte-identical rerun.
  const auto res2 = run_example1(c);
  CHECK(slurp("test_driver_out1/example1.csv") == csv);
  std::remove("test_driver_out1/example1.csv");
}

TEST_CASE("interface sweep: rows, stats files, determinism") {
  RunConfig c;
  c.test_case = 2;
  c.sweep_level = 1;  // small and fast; 8x8 patches
  c.n_sweep = 1000;
  c.stride = 500;  // k = 0, 500
  c.basis = "hierarchical";
  c.solvers = {SolverKind::PCGSSOR};
  c.out_dir = "test_driver_out2";
  const auto res = run_example2(c);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].k == 0);
  CHECK(res.rows[1].k == 500);
  const double hp = 2.0 / 8.0;
  CHECK(res.rows[1].y_offset == doctest::Approx(0.5 * hp));
  for (const auto& r : res.rows) {
    CHECK(r.converged);
    CHECK(r.iterations > 0);
  }
  REQUIRE(res.stats.size() == 4);
  CHECK(res.stats[0].k == 0);
  CHECK(res.stats[1].k == 10);
  CHECK(res.stats[2].k == 50);
  CHECK(res.stats[3].k == 990);
  for (const auto& s : res.stats) {
    CHECK(s.stats.area_min > 0.0);
    CHECK(s.stats.area_ratio >= 1.0);
    CHECK(s.stats.aspect_max >= 1.0);
  }

  const std::string csv = slurp("test_driver_out2/example2.csv");
  CHECK(csv.find("# locmodfe csv v1") == 0);
  CHECK(csv.find("k,y_offset,solver,basis,iterations,converged") !=
        std::string::npos);
  for (int k : {0, 10, 50, 990}) {
    const std::string p =
        "test_driver_out2/stats_k" + std::to_string(k) + ".csv";
    const std::string s = slurp(p);
    CHECK(s.find("# locmodfe csv v1") == 0);
    CHECK(s.find("k,y_offset,area_max,area_min,area_ratio,edge_max,edge_min,"
                 "aspect_max") != std::string::npos);
    std::remove(p.c_str());
  }
  std::remove("test_driver_out2/example2.csv");
}
