// Small 2D vector and line-geometry helpers used throughout the library.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace locmodfe {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// z-component of the cross product of two plane vectors.
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Intersection of the line through (a1,a2) with the line through (b1,b2).
// Throws if the lines are (numerically) parallel.
inline Vec2 line_intersection(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                              const Vec2& b2) {
  const Vec2 da = a2 - a1;
  const Vec2 db = b2 - b1;
  const double denom = cross(da, db);
  if (std::abs(denom) < 1e-14 * (norm(da) * norm(db)))
    throw std::runtime_error("line_intersection: lines are parallel");
  const double t = cross(b1 - a1, db) / denom;
  return a1 + t * da;
}

// Interior angle at vertex b of the polygon corner a-b-c, in degrees.
inline double angle_deg(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Vec2 u = a - b;
  const Vec2 v = c - b;
  const double cs = dot(u, v) / (norm(u) * norm(v));
  return std::acos(std::min(1.0, std::max(-1.0, cs))) * 180.0 / M_PI;
}

// Signed area of a triangle (positive for counter-clockwise orientation).
inline double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * cross(b - a, c - a);
}

// Signed area of a quadrilateral given in order a-b-c-d (shoelace formula).
inline double quad_area(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  return 0.5 * (cross(a, b) + cross(b, c) + cross(c, d) + cross(d, a));
}

// Largest interior angle of a triangle, in degrees.
inline double max_angle_triangle(const Vec2& a, const Vec2& b, const Vec2& c) {
  return std::max({angle_deg(c, a, b), angle_deg(a, b, c), angle_deg(b, c, a)});
}

// Largest interior angle of a quadrilateral a-b-c-d, in degrees.
inline double max_angle_quad(const Vec2& a, const Vec2& b, const Vec2& c,
                             const Vec2& d) {
  return std::max({angle_deg(d, a, b), angle_deg(a, b, c), angle_deg(b, c, d),
                   angle_deg(c, d, a)});
}

}  // namespace locmodfe
