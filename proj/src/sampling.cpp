#include "trigbash/sampling.hpp"

#include <cmath>

namespace trigbash {

uint64_t splitmix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

Point Similarity::apply(const Point& p) const {
  double ca = std::cos(rot), sa = std::sin(rot);
  return Point(scale * (ca * p.x() - sa * p.y()) + shift.x(),
               scale * (sa * p.x() + ca * p.y()) + shift.y());
}

static constexpr double kScaleneMargin = 5.0 * M_PI / 180.0;
static constexpr double kOrderMargin = 0.98;  // side1 < 0.98 * side2

static bool angles_admissible(const double ang[3], const TriangleConstraints& cs) {
  for (int i = 0; i < 3; ++i)
    if (ang[i] < cs.min_angle) return false;
  if (cs.acute && (ang[0] >= M_PI_2 || ang[1] >= M_PI_2 || ang[2] >= M_PI_2)) return false;
  if (cs.obtuse_at >= 0 && ang[cs.obtuse_at] <= M_PI_2) return false;
  if (cs.scalene) {
    if (std::abs(ang[0] - ang[1]) < kScaleneMargin || std::abs(ang[1] - ang[2]) < kScaleneMargin ||
        std::abs(ang[0] - ang[2]) < kScaleneMargin)
      return false;
  }
  // side lengths are proportional to the sine of the opposite angle
  for (auto [i, j] : cs.orders)
    if (!(std::sin(ang[i]) < kOrderMargin * std::sin(ang[j]))) return false;
  return true;
}

Triangle sample_triangle(const TriangleConstraints& cs, Rng& rng, bool apply_similarity) {
  double ang[3];
  bool found = false;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // uniform on the angle simplex
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    ang[0] = M_PI * u;
    ang[1] = M_PI * v;
    ang[2] = M_PI * (1.0 - u - v);
    if (cs.isosceles) {
      // equal sides opposite (i, j): force those two angles equal, keeping
      // the remaining angle as drawn
      auto [i, j] = *cs.isosceles;
      int k = 3 - i - j;
      double rest = M_PI - ang[k];
      ang[i] = ang[j] = 0.5 * rest;
    }
    if (angles_admissible(ang, cs)) {
      found = true;
      break;
    }
  }
  if (!found)
    throw GeomError(ErrKind::BadArgument,
                    "sample_triangle: constraints unsatisfiable after 10000 attempts");
  // canonical counterclockwise placement: B = (0,0), C = (1,0), A above
  double side_c = std::sin(ang[2]) / std::sin(ang[0]);  // |AB| with |BC| = 1
  Point a(side_c * std::cos(ang[1]), side_c * std::sin(ang[1]));
  Point b(0.0, 0.0), c(1.0, 0.0);
  if (!apply_similarity) return {a, b, c};
  Similarity sim;
  sim.rot = rng.uniform(0.0, 2.0 * M_PI);
  sim.scale = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
  sim.shift = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return {sim.apply(a), sim.apply(b), sim.apply(c)};
}

Point sample_on_segment(const Point& p, const Point& q, Rng& rng) {
  return p + rng.uniform() * (q - p);
}

Point sample_on_line(const Point& p, const Point& q, Rng& rng) {
  return p + rng.uniform(-0.5, 1.5) * (q - p);
}

Point sample_on_circle(const Circle& c, Rng& rng) {
  double t = rng.uniform(0.0, 2.0 * M_PI);
  return c.center + c.radius * Vec2(std::cos(t), std::sin(t));
}

Point sample_on_arc(const Circle& c, const Point& p, const Point& q, const Point& witness,
                    Rng& rng) {
  auto dir_angle = [&](const Point& x) {
    Vec2 v = x - c.center;
    if (v.norm() <= 1e-12 * std::max(1.0, c.radius))
      throw GeomError(ErrKind::BadArgument, "arc locus direction point at circle center");
    return std::atan2(v.y(), v.x());
  };
  double ta = dir_angle(p), tb = dir_angle(q), tw = dir_angle(witness);
  auto fwd = [](double from, double to) {  // ccw sweep from `from` to `to`
    double d = to - from;
    while (d < 0) d += 2.0 * M_PI;
    while (d >= 2.0 * M_PI) d -= 2.0 * M_PI;
    return d;
  };
  double span = fwd(ta, tb);
  double t;
  if (fwd(ta, tw) <= span) {
    t = ta + rng.uniform() * span;  // witness inside ccw arc a->b
  } else {
    t = tb + rng.uniform() * (2.0 * M_PI - span);
  }
  return c.center + c.radius * Vec2(std::cos(t), std::sin(t));
}

}  // namespace trigbash
