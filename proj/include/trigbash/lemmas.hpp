#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigbash/constructions.hpp"
#include "trigbash/geom.hpp"

namespace trigbash {

struct ResidualSet {
  std::vector<std::pair<std::string, double>> values;
  double max_abs = 0.0;

  void add(std::string label, double residual) {
    max_abs = std::max(max_abs, std::abs(residual));
    values.emplace_back(std::move(label), residual);
  }
};

/// Cevian feet: d on line BC, e on line CA, f on line AB.
struct CevianTriple {
  Point d, e, f;
};

/// a/sin A - 2R and cyclic, with R from the circumcircle.
ResidualSet law_of_sines_residuals(const Triangle& t);

/// a^2 - b^2 - c^2 + 2bc cos A and cyclic.
ResidualSet law_of_cosines_residuals(const Triangle& t);

/// The six double-angle and sum/difference identities evaluated at (x, y).
ResidualSet trig_identity_residuals(double x, double y);

/// |BM/MC - (AB/AC) (sin BAM / sin MAC)| relative to BM/MC, M inside BC.
double ratio_lemma_residual(const Point& a, const Point& b, const Point& c, const Point& m,
                            const TolerancePolicy& tol = {});

struct PerpCriterion {
  double gap;  // (AB^2 - AD^2) - (BC^2 - CD^2)
  bool perp;   // line AC perpendicular to line BD
};
PerpCriterion perpendicularity_criterion(const Point& a, const Point& b, const Point& c,
                                         const Point& d, const TolerancePolicy& tol = {});

/// |(BD/DC)(BE/EC) - AB^2/AC^2| relative, for isogonal cevians AD, AE.
double steiner_residual(const Point& a, const Point& b, const Point& c, const Point& d,
                        const Point& e);

/// Tangent-intersection symmedian: angle symmetry at A plus the directed
/// foot ratio BT/TC - (AB/AC)^2.
ResidualSet symmedian_checks(const Point& a, const Point& b, const Point& c,
                             const TolerancePolicy& tol = {});

/// The unique alpha in (0, t) with sin(alpha)/sin(t - alpha) = r; the ratio
/// function is strictly increasing on (0, t).
Angle solve_ratio_angle(Angle t, double r);

/// Signed product of directed ratios for a cevian triple: +1 iff AD, BE, CF
/// concur, -1 iff D, E, F are collinear.
double ceva_product(const Point& a, const Point& b, const Point& c, const CevianTriple& t,
                    const TolerancePolicy& tol = {});

/// sin DAB/sin DAC * sin EBC/sin EBA * sin FCA/sin FCB for interior cevian
/// points.
double trig_ceva_product(const Point& a, const Point& b, const Point& c, const CevianTriple& t,
                         const TolerancePolicy& tol = {});

struct MedianParallel {
  bool parallel;    // EF parallel to BC
  bool concurrent;  // AM, BF, CE concurrent (M = midpoint of BC)
};
MedianParallel median_parallel_equiv(const Point& a, const Point& b, const Point& c,
                                     const Point& e, const Point& f,
                                     const TolerancePolicy& tol = {});

struct DesarguesResult {
  bool central;  // vertex joins concurrent
  bool axial;    // side intersections collinear (parallels meet at infinity)
};
DesarguesResult desargues_check(const Triangle& t1, const Triangle& t2,
                                const TolerancePolicy& tol = {});

/// |MX - MY| / |XY| for X = AD ^ PQ, Y = BC ^ PQ through the chord midpoint M.
double butterfly_residual(const Circle& c, const Point& p, const Point& q, const Point& a,
                          const Point& b, const Point& cc, const Point& d,
                          const TolerancePolicy& tol = {});

/// Cyclic product sin(theta_i)/sin(phi_i) around an interior point of a
/// simple polygon; equals 1.
double polygon_sine_product(std::span<const Point> vertices, const Point& k);

bool polygon_is_simple(std::span<const Point> vertices);
bool point_in_polygon(const Point& k, std::span<const Point> vertices);
bool polygon_is_convex(std::span<const Point> vertices);

}  // namespace trigbash
