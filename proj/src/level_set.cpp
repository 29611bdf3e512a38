#include "locmodfe/level_set.hpp"

#include <cmath>
#include <string>

namespace locmodfe {

double find_edge_cut(const LevelSet& chi, const Vec2& a, const Vec2& b) {
  const auto f = [&](double s) { return chi.value(a + s * (b - a)); };
  const auto df = [&](double s) {
    const Vec2 d = b - a;
    const Vec2 g = chi.gradient(a + s * d);
    return dot(g, d);
  };

  const double fa = f(0.0);
  const double fb = f(1.0);
  if (fa * fb > 0.0)
    throw NoConvergenceError("find_edge_cut: no sign change on edge");

  constexpr double tol = 1e-12;
  constexpr int newton_cap = 50;
  constexpr int bisect_cap = 200;

  // Newton from the edge midpoint; fall back to bisection if the iterate
  // leaves a safety interval or the derivative degenerates.
  double s = 0.5;
  bool newton_ok = true;
  for (int it = 0; it < newton_cap; ++it) {
    const double fs = f(s);
    if (std::abs(fs) <= tol) return s;
    const double dfs = df(s);
    if (std::abs(dfs) < 1e-14) {
      newton_ok = false;
      break;
    }
    s -= fs / dfs;
    if (s < -0.1 || s > 1.1) {
      newton_ok = false;
      break;
    }
  }
  if (newton_ok && std::abs(f(s)) <= tol) return s;

  // Bisection on the original bracket.
  double lo = 0.0, hi = 1.0;
  double flo = fa;
  if (flo == 0.0) return 0.0;
  if (fb == 0.0) return 1.0;
  for (int it = 0; it < bisect_cap; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  throw NoConvergenceError("find_edge_cut: root iteration did not converge");
}

}  // namespace locmodfe
