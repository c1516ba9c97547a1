#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trigbash/geom.hpp"

namespace trigbash {

/// SplitMix64 finalizer; the per-trial seed splitting rule is
/// mix_seed(seed, i) = splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15).
uint64_t splitmix64(uint64_t x);
uint64_t mix_seed(uint64_t seed, uint64_t index);

/// Deterministic uniform generator built on xoshiro-free splitmix stream so
/// results are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(splitmix64(seed ^ 0xA5A5A5A5A5A5A5A5ull)) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return splitmix64(state_);
  }
  /// uniform in [0, 1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  uint64_t state_;
};

/// Closed constraint vocabulary for free triangles: acute, obtuse_at <vertex>,
/// scalene, isosceles <pair>, min_angle <angle>, order <side> < <side>.
/// Sides are vertex-index pairs; side {i,j} is opposite vertex 3-i-j.
struct TriangleConstraints {
  bool acute = false;
  int obtuse_at = -1;                                   // vertex index or -1
  bool scalene = false;                                 // pairwise angles differ by >= 5 deg
  std::optional<std::pair<int, int>> isosceles;         // equal sides (as opposite-vertex idx)
  double min_angle = 0.0;                               // radians
  std::vector<std::pair<int, int>> orders;              // side(opp i) < side(opp j)
};

struct Similarity {
  double rot = 0.0, scale = 1.0;
  Vec2 shift = Vec2::Zero();
  Point apply(const Point& p) const;
};

/// Angle-space rejection sampling: draw vertex angles uniformly on the
/// simplex, place the triangle counterclockwise at canonical position and
/// scale, then apply a random orientation-preserving similarity.
Triangle sample_triangle(const TriangleConstraints& cs, Rng& rng, bool apply_similarity = true);

/// Angles drawn for the last accepted sample are not exposed; re-derive from
/// vertices where tests need them.

Point sample_on_segment(const Point& p, const Point& q, Rng& rng);
Point sample_on_line(const Point& p, const Point& q, Rng& rng);  // param U(-0.5, 1.5)
Point sample_on_circle(const Circle& c, Rng& rng);
/// Uniform on the arc from P-direction to Q-direction that contains the
/// witness direction (all three projected radially onto the circle).
Point sample_on_arc(const Circle& c, const Point& p, const Point& q, const Point& witness,
                    Rng& rng);

}  // namespace trigbash
