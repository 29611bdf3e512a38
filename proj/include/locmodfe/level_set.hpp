// Level-set descriptions of the interface and root finding along mesh edges.
//
// The interface Gamma is the zero contour of a scalar function chi.  The
// subdomain with chi < 0 is domain 1, the subdomain with chi > 0 is domain 2.
#pragma once

#include <memory>
#include <stdexcept>

#include "locmodfe/geometry.hpp"

namespace locmodfe {

class LevelSet {
 public:
  virtual ~LevelSet() = default;
  virtual double value(const Vec2& p) const = 0;
  virtual Vec2 gradient(const Vec2& p) const = 0;
};

// chi(p) = |p - center|^2 - radius^2.  Interior of the circle is domain 1.
class CircleLevelSet : public LevelSet {
 public:
  CircleLevelSet(Vec2 center, double radius) : center_(center), radius_(radius) {}

  double value(const Vec2& p) const override {
    const Vec2 d = p - center_;
    return d.x * d.x + d.y * d.y - radius_ * radius_;
  }
  Vec2 gradient(const Vec2& p) const override { return 2.0 * (p - center_); }

  const Vec2& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Vec2 center_;
  double radius_;
};

// chi(p) = dot(normal, p) + offset.  Useful for tests with straight interfaces.
class LineLevelSet : public LevelSet {
 public:
  LineLevelSet(Vec2 normal, double offset) : normal_(normal), offset_(offset) {}

  double value(const Vec2& p) const override { return dot(normal_, p) + offset_; }
  Vec2 gradient(const Vec2&) const override { return normal_; }

 private:
  Vec2 normal_;
  double offset_;
};

struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finds s in [0,1] with chi((1-s) a + s b) = 0 by a damped Newton iteration
// with bisection fallback.  Requires a sign change of chi between a and b.
// The result satisfies |chi| <= 1e-12 at the returned point.
double find_edge_cut(const LevelSet& chi, const Vec2& a, const Vec2& b);

}  // namespace locmodfe
