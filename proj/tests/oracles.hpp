#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <cmath>
#include <random>

#include "trigbash/geom.hpp"
#include "trigbash/sampling.hpp"

namespace oracles {

using trigbash::Point;
using trigbash::Vec2;

// Cramer's rule intersection of two lines given by point + direction.
inline Point intersect_pd(const Point& p1, const Vec2& d1, const Point& p2, const Vec2& d2) {
  double det = d1.x() * (-d2.y()) - (-d2.x()) * d1.y();
  Vec2 rhs = p2 - p1;
  double t = (rhs.x() * (-d2.y()) - (-d2.x()) * rhs.y()) / det;
  return p1 + t * d1;
}

// Unsigned angle at v from the normalized dot product, acos route.
inline double angle_acos(const Point& v, const Point& a, const Point& b) {
  Vec2 u = a - v, w = b - v;
  double c = u.dot(w) / (u.norm() * w.norm());
  c = std::max(-1.0, std::min(1.0, c));
  return std::acos(c);
}

// Circumcenter by the explicit determinant formula (not perpendicular
// bisector intersections).
inline Point circumcenter_det(const Point& a, const Point& b, const Point& c) {
  double ax = a.x(), ay = a.y(), bx = b.x(), by = b.y(), cx = c.x(), cy = c.y();
  double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
               (cx * cx + cy * cy) * (ay - by)) /
              d;
  double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
               (cx * cx + cy * cy) * (bx - ax)) /
              d;
  return Point(ux, uy);
}

// Strictly-increasing-grid search for sin(x)/sin(t-x) = r on a 1e6 grid,
// refined by plain bisection on the bracketing cell.
inline double ratio_angle_grid(double t, double r, int n = 1000000) {
  auto f = [&](double x) { return std::sin(x) / std::sin(t - x); };
  double prev_x = t / n, prev_v = f(prev_x) - r;
  for (int i = 2; i < n; ++i) {
    double x = t * i / n;
    double v = f(x) - r;
    if (prev_v < 0 && v >= 0) {
      double lo = prev_x, hi = x;
      for (int k = 0; k < 200; ++k) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < r ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_x = x;
    prev_v = v;
  }
  return -1.0;
}

inline trigbash::Triangle random_triangle(trigbash::Rng& rng, double min_angle_deg = 10.0) {
  trigbash::TriangleConstraints cs;
  cs.min_angle = min_angle_deg * M_PI / 180.0;
  return trigbash::sample_triangle(cs, rng);
}

}  // namespace oracles
