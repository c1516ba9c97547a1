#include "trigbash/constructions.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace trigbash {

Point line_line_intersect(const Line& l1, const Line& l2, const TolerancePolicy& tol) {
  double det = cross2(l1.normal(), l2.normal());
  if (std::abs(det) <= tol.rel_eps) {
    double angle = std::asin(std::min(1.0, std::abs(det)));
    throw GeomError(ErrKind::ParallelLines, "line_line_intersect on near-parallel lines", angle);
  }
  Eigen::Matrix2d m;
  m << l1.normal().x(), l1.normal().y(), l2.normal().x(), l2.normal().y();
  return m.partialPivLu().solve(Vec2(l1.offset(), l2.offset()));
}

SecondIntersection second_intersection(const Line& l, const Circle& c, const Point& known) {
  double s = std::max(local_scale({known, c.center}), c.radius);
  if (std::abs((known - c.center).norm() - c.radius) > 1e-9 * s)
    throw GeomError(ErrKind::NotOnCircle, "second_intersection: known point not on circle");
  if (std::abs(l.signed_dist(known)) > 1e-9 * s)
    throw GeomError(ErrKind::NotOnLine, "second_intersection: known point not on line");
  // points on l: known + t * dir; monic quadratic t^2 + b t + cc = 0
  Vec2 d = l.direction();
  double b = 2.0 * d.dot(known - c.center);
  double cc = (known - c.center).squaredNorm() - c.radius * c.radius;
  double disc = b * b - 4.0 * cc;
  double tang_thr = 1e-10 * s;
  if (disc < tang_thr * tang_thr) return {known, true};
  double root = std::sqrt(disc);
  double t1 = 0.5 * (-b + root), t2 = 0.5 * (-b - root);
  double t = std::abs(t1) > std::abs(t2) ? t1 : t2;  // the root away from `known`
  return {known + t * d, false};
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
  require_nondegenerate({a, b, c});
  Point o = line_line_intersect(perp_bisector(a, b), perp_bisector(b, c));
  return Circle(o, (a - o).norm());
}

static IncircleResult tangent_circle(const Point& a, const Point& b, const Point& c,
                                     const Point& center) {
  Line bc = Line::through(b, c), ca = Line::through(c, a), ab = Line::through(a, b);
  double r = std::abs(bc.signed_dist(center));
  return {Circle(center, r), foot(center, bc), foot(center, ca), foot(center, ab)};
}

IncircleResult incircle(const Point& a, const Point& b, const Point& c) {
  require_nondegenerate({a, b, c});
  return tangent_circle(a, b, c, triangle_center(a, b, c, CenterKind::Incenter));
}

IncircleResult excircle(const Point& a, const Point& b, const Point& c, int opposite_vertex) {
  require_nondegenerate({a, b, c});
  CenterKind kind = opposite_vertex == 0   ? CenterKind::ExcenterA
                    : opposite_vertex == 1 ? CenterKind::ExcenterB
                                           : CenterKind::ExcenterC;
  if (opposite_vertex < 0 || opposite_vertex > 2)
    throw GeomError(ErrKind::BadArgument, "excircle vertex index out of range");
  return tangent_circle(a, b, c, triangle_center(a, b, c, kind));
}

Point triangle_center(const Point& a, const Point& b, const Point& c, CenterKind kind) {
  require_nondegenerate({a, b, c});
  Triangle t{a, b, c};
  double la = t.side_a(), lb = t.side_b(), lc = t.side_c();
  switch (kind) {
    case CenterKind::Centroid:
      return (a + b + c) / 3.0;
    case CenterKind::Circumcenter:
      return line_line_intersect(perp_bisector(a, b), perp_bisector(b, c));
    case CenterKind::Incenter:
      return (la * a + lb * b + lc * c) / (la + lb + lc);
    case CenterKind::Orthocenter:
      return line_line_intersect(through(a, Line::through(b, c), ThroughMode::Perpendicular),
                                 through(b, Line::through(c, a), ThroughMode::Perpendicular));
    case CenterKind::ExcenterA:
      return (-la * a + lb * b + lc * c) / (-la + lb + lc);
    case CenterKind::ExcenterB:
      return (la * a - lb * b + lc * c) / (la - lb + lc);
    case CenterKind::ExcenterC:
      return (la * a + lb * b - lc * c) / (la + lb - lc);
    case CenterKind::SymmedianPoint:
      return (la * la * a + lb * lb * b + lc * lc * c) / (la * la + lb * lb + lc * lc);
  }
  throw GeomError(ErrKind::BadArgument, "unknown center kind");
}

Point arc_midpoint(const Circle& c, const Point& p, const Point& q, const Point& side_witness,
                   const TolerancePolicy& tol) {
  double s = std::max(local_scale({p, q, side_witness}), c.radius);
  for (const Point* x : {&p, &q, &side_witness})
    if (std::abs((*x - c.center).norm() - c.radius) > 1e-9 * s)
      throw GeomError(ErrKind::NotOnCircle, "arc_midpoint: point not on circle");
  if (dist(p, q) <= 1e-12 * s)
    throw GeomError(ErrKind::CoincidentPoints, "arc_midpoint with P = Q");
  Line chord = Line::through(p, q);
  double sw = chord.signed_dist(side_witness);
  if (std::abs(sw) <= tol.abs_floor * s)
    throw GeomError(ErrKind::BadArgument, "arc_midpoint witness lies on chord PQ");
  Vec2 u = perp_bisector(p, q).direction();
  Point m1 = c.center + c.radius * u;
  return chord.signed_dist(m1) * sw > 0 ? m1 : Point(c.center - c.radius * u);
}

Line tangent_line(const Circle& c, const Point& p) {
  double s = std::max(local_scale({p, c.center}), c.radius);
  Vec2 v = p - c.center;
  if (std::abs(v.norm() - c.radius) > 1e-9 * s)
    throw GeomError(ErrKind::NotOnCircle, "tangent_line: point not on circle");
  Vec2 n = v / v.norm();
  return Line(n, n.dot(p));
}

std::pair<Point, Point> tangents_from(const Circle& c, const Point& p,
                                      const TolerancePolicy& tol) {
  Vec2 v = p - c.center;
  double d = v.norm();
  if (d <= c.radius * (1.0 + tol.rel_eps))
    throw GeomError(ErrKind::InsideCircle, "tangents_from: point inside or on circle");
  double cos_t = c.radius / d, sin_t = std::sqrt(1.0 - cos_t * cos_t);
  Vec2 u = v / d;
  Vec2 r1 = c.radius * Vec2(cos_t * u.x() - sin_t * u.y(), sin_t * u.x() + cos_t * u.y());
  Vec2 r2 = c.radius * Vec2(cos_t * u.x() + sin_t * u.y(), -sin_t * u.x() + cos_t * u.y());
  Point t1 = c.center + r1, t2 = c.center + r2;
  double a1 = std::atan2(r1.y(), r1.x()), a2 = std::atan2(r2.y(), r2.x());
  return a1 <= a2 ? std::make_pair(t1, t2) : std::make_pair(t2, t1);
}

Point foot(const Point& p, const Line& l) { return p - l.signed_dist(p) * l.normal(); }

Point reflect(const Point& p, const Line& l) { return p - 2.0 * l.signed_dist(p) * l.normal(); }

Point midpoint(const Point& p, const Point& q) { return 0.5 * (p + q); }

Point antipode(const Point& p, const Circle& c) {
  double s = std::max(local_scale({p, c.center}), c.radius);
  if (std::abs((p - c.center).norm() - c.radius) > 1e-9 * s)
    throw GeomError(ErrKind::NotOnCircle, "antipode: point not on circle");
  return 2.0 * c.center - p;
}

Point closest_point(const Circle& c, const Point& p) {
  Vec2 v = p - c.center;
  if (v.norm() <= 1e-12 * std::max(local_scale({p, c.center}), c.radius))
    throw GeomError(ErrKind::CoincidentPoints, "closest_point from the circle center");
  return c.center + c.radius * v.normalized();
}

Line through(const Point& p, const Line& l, ThroughMode mode) {
  Vec2 n = mode == ThroughMode::Parallel ? l.normal() : l.direction();
  return Line(n, n.dot(p));
}

Line perp_bisector(const Point& p, const Point& q) {
  return through(midpoint(p, q), Line::through(p, q), ThroughMode::Perpendicular);
}

Line isogonal_line(const Point& a, const Point& b, const Point& c, const Line& l) {
  require_nondegenerate({a, b, c});
  double s = local_scale({a, b, c});
  if (std::abs(l.signed_dist(a)) > 1e-9 * s)
    throw GeomError(ErrKind::NotOnLine, "isogonal_line: line does not pass through A");
  Vec2 w = (b - a).normalized() + (c - a).normalized();
  w.normalize();  // internal bisector direction
  Vec2 u = l.direction();
  Vec2 u2 = 2.0 * u.dot(w) * w - u;
  return Line::from_point_dir(a, u2);
}

static Vec2 rotated(const Vec2& v, double theta) {
  double ca = std::cos(theta), sa = std::sin(theta);
  return Vec2(ca * v.x() - sa * v.y(), sa * v.x() + ca * v.y());
}

Line rotate_ray(const Point& origin, const Point& through_pt, Angle theta, int orientation) {
  if (dist(origin, through_pt) <= 1e-12 * local_scale({origin, through_pt}))
    throw GeomError(ErrKind::CoincidentPoints, "rotate_ray with coincident points");
  return Line::from_point_dir(origin, rotated(through_pt - origin, orientation * theta.radians));
}

Point rotate_point(const Point& p, const Point& center, Angle theta, int orientation) {
  return center + rotated(p - center, orientation * theta.radians);
}

MixtilinearResult mixtilinear_incircle(const Point& a, const Point& b, const Point& c) {
  require_nondegenerate({a, b, c});
  Circle cc = circumcircle(a, b, c);
  Vec2 w = (b - a).normalized() + (c - a).normalized();
  w.normalize();
  double sin_half = std::sin(0.5 * angle_at(a, b, c).radians);
  Point incenter = triangle_center(a, b, c, CenterKind::Incenter);
  // center X(t) = A + t w has radius r(t) = t sin(A/2); internal tangency gap
  // g(t) = |O - X| + r - R is convex with g(0) = 0, g'(0) < 0, so the unique
  // positive root lies between the incenter parameter (where g = |OI| + r - R
  // < 0 by Euler's inequality) and the exit of the bisector from the circle.
  auto gap = [&](double t) {
    Point x = a + t * w;
    return (cc.center - x).norm() + t * sin_half - cc.radius;
  };
  double lo = (incenter - a).dot(w);
  double hi = 2.0 * w.dot(cc.center - a);
  double glo = gap(lo), ghi = gap(hi);
  if (!(glo < 0 && ghi > 0))
    throw GeomError(ErrKind::BracketingFailure,
                    "mixtilinear_incircle bracket [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] does not straddle tangency");
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (gap(mid) < 0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  Point center = a + t * w;
  Circle circle(center, t * sin_half);
  Point touch_m = cc.center + cc.radius * (center - cc.center).normalized();
  return {circle, foot(center, Line::through(a, b)), foot(center, Line::through(a, c)), touch_m};
}

Point curve_point(const Curve& curve, double t) {
  if (const Line* l = std::get_if<Line>(&curve)) return l->offset() * l->normal() + t * l->direction();
  const Circle& c = std::get<Circle>(curve);
  return c.center + c.radius * Vec2(std::cos(t), std::sin(t));
}

double curve_param(const Curve& curve, const Point& p) {
  if (const Line* l = std::get_if<Line>(&curve)) return l->direction().dot(p - l->offset() * l->normal());
  const Circle& c = std::get<Circle>(curve);
  Vec2 v = p - c.center;
  return std::atan2(v.y(), v.x());
}

Point solve_on_curve(const Curve& curve, const std::function<double(const Point&)>& f,
                     double t_lo, double t_hi) {
  double lo = std::min(t_lo, t_hi), hi = std::max(t_lo, t_hi);
  double flo = f(curve_point(curve, lo));
  double fhi = f(curve_point(curve, hi));
  if (flo == 0.0) return curve_point(curve, lo);
  if (fhi == 0.0) return curve_point(curve, hi);
  if ((flo < 0) == (fhi < 0))
    throw GeomError(ErrKind::NoSignChange, "solve_on_curve: no sign change across bracket");
  bool converged = false;
  for (int it = 0; it < 200 && !converged; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      converged = true;
      break;
    }
    double fm = f(curve_point(curve, mid));
    if (fm == 0.0) {
      lo = hi = mid;
      converged = true;
      break;
    }
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  if (!converged)
    throw GeomError(ErrKind::MaxIterations, "solve_on_curve: 200 bisections exceeded");
  return curve_point(curve, 0.5 * (lo + hi));
}

}  // namespace trigbash
