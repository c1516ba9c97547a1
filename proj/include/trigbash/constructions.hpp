#pragma once

#include <functional>
#include <utility>
#include <variant>

#include "trigbash/geom.hpp"

namespace trigbash {

enum class CenterKind {
  Centroid,
  Circumcenter,
  Incenter,
  Orthocenter,
  ExcenterA,  // opposite the first vertex
  ExcenterB,
  ExcenterC,
  SymmedianPoint,
};

/// Incircle or excircle with its three tangency points (touch_d on BC,
/// touch_e on CA, touch_f on AB).
struct IncircleResult {
  Circle circle;
  Point touch_d, touch_e, touch_f;
};

/// Circle tangent to lines AB and AC and internally tangent to the
/// circumcircle. touch_k on AB, touch_l on AC, touch_m on the circumcircle.
struct MixtilinearResult {
  Circle circle;
  Point touch_k, touch_l, touch_m;
};

struct SecondIntersection {
  Point point;
  bool tangent = false;  // line touches the circle at `known`
};

Point line_line_intersect(const Line& l1, const Line& l2, const TolerancePolicy& tol = {});

SecondIntersection second_intersection(const Line& l, const Circle& c, const Point& known);

Circle circumcircle(const Point& a, const Point& b, const Point& c);
IncircleResult incircle(const Point& a, const Point& b, const Point& c);
IncircleResult excircle(const Point& a, const Point& b, const Point& c, int opposite_vertex);
Point triangle_center(const Point& a, const Point& b, const Point& c, CenterKind kind);

/// The point of `c` on the arc PQ that contains side_witness, equidistant
/// along the circle from P and Q.
Point arc_midpoint(const Circle& c, const Point& p, const Point& q, const Point& side_witness,
                   const TolerancePolicy& tol = {});

Line tangent_line(const Circle& c, const Point& p);

/// Tangency points from an external point, ordered by angle about the center.
std::pair<Point, Point> tangents_from(const Circle& c, const Point& p,
                                      const TolerancePolicy& tol = {});

Point foot(const Point& p, const Line& l);
Point reflect(const Point& p, const Line& l);
Point midpoint(const Point& p, const Point& q);
Point antipode(const Point& p, const Circle& c);

/// The point of `c` nearest to P (on the ray from the center through P).
Point closest_point(const Circle& c, const Point& p);

enum class ThroughMode { Parallel, Perpendicular };
Line through(const Point& p, const Line& l, ThroughMode mode);
Line perp_bisector(const Point& p, const Point& q);

/// Reflection of a line through A across the internal bisector of angle A.
Line isogonal_line(const Point& a, const Point& b, const Point& c, const Line& l);

/// Line through origin whose direction is origin->through rotated by
/// orientation * theta.
Line rotate_ray(const Point& origin, const Point& through_pt, Angle theta, int orientation);
Point rotate_point(const Point& p, const Point& center, Angle theta, int orientation);

MixtilinearResult mixtilinear_incircle(const Point& a, const Point& b, const Point& c);

using Curve = std::variant<Line, Circle>;

Point curve_point(const Curve& curve, double t);
double curve_param(const Curve& curve, const Point& p);

/// Bisection for f(X(t)) = 0 on the parameterized curve segment [t_lo, t_hi].
/// The bracket is caller-supplied and must straddle a sign change.
Point solve_on_curve(const Curve& curve, const std::function<double(const Point&)>& f,
                     double t_lo, double t_hi);

}  // namespace trigbash
