#include "trigbash/geom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

namespace trigbash {

Line Line::through(const Point& p, const Point& q) {
  Vec2 t = q - p;
  double len = t.norm();
  if (len <= 1e-12 * local_scale({p, q}))
    throw GeomError(ErrKind::CoincidentPoints, "line through coincident points");
  Vec2 n = perp(t / len);
  return Line(n, n.dot(p));
}

Line Line::from_point_dir(const Point& p, const Vec2& dir) {
  double len = dir.norm();
  if (len < 1e-14) throw GeomError(ErrKind::BadArgument, "zero direction");
  Vec2 n = perp(dir / len);
  return Line(n, n.dot(p));
}

double dist(const Point& p, const Point& q) { return (p - q).norm(); }

double signed_area(const Point& a, const Point& b, const Point& c) {
  return 0.5 * cross2(b - a, c - a);
}

Angle angle_at(const Point& a, const Point& b, const Point& c) {
  Vec2 u = b - a, w = c - a;
  double s = local_scale({a, b, c});
  if (u.norm() <= 1e-12 * s || w.norm() <= 1e-12 * s)
    throw GeomError(ErrKind::CoincidentPoints, "angle_at with coincident points");
  return Angle{std::atan2(std::abs(cross2(u, w)), u.dot(w))};
}

double directed_ratio(const Point& x, const Point& p, const Point& q,
                      const TolerancePolicy& tol) {
  double s = local_scale({x, p, q});
  if (dist(p, q) <= 1e-12 * s)
    throw GeomError(ErrKind::CoincidentPoints, "directed_ratio with P = Q");
  if (std::abs(signed_area(x, p, q)) > tol.rel_eps * s * s)
    throw GeomError(ErrKind::NotCollinear, "directed_ratio point off line PQ");
  Vec2 u = q - p;
  double t = (x - p).dot(u) / u.squaredNorm();
  if (std::abs(1.0 - t) <= tol.abs_floor)
    throw GeomError(ErrKind::CoincidentPoints, "directed_ratio with X = Q");
  return t / (1.0 - t);
}

bool is_collinear(std::span<const Point> pts, const TolerancePolicy& tol) {
  if (pts.size() < 3) throw GeomError(ErrKind::BadArgument, "is_collinear needs >= 3 points");
  double worst = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t k = j + 1; k < pts.size(); ++k)
        worst = std::max(worst, std::abs(signed_area(pts[i], pts[j], pts[k])));
  return worst <= tol.area_tol();
}

bool is_collinear(std::initializer_list<Point> pts, const TolerancePolicy& tol) {
  std::vector<Point> v(pts);
  return is_collinear(std::span<const Point>(v), tol);
}

bool is_concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4,
                  const TolerancePolicy& tol) {
  const Point pts[] = {p1, p2, p3, p4};
  double s = scale_of(pts);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (dist(pts[i], pts[j]) <= 1e-12 * s)
        throw GeomError(ErrKind::CoincidentPoints, "is_concyclic with coincident points");
  // circle through the first three; collinear first three means no circle
  if (std::abs(signed_area(p1, p2, p3)) <= tol.abs_floor * s * s) return false;
  Vec2 m1 = 0.5 * (p1 + p2), m2 = 0.5 * (p2 + p3);
  Vec2 d1 = p2 - p1, d2 = p3 - p2;
  Eigen::Matrix2d m;
  m << d1.x(), d1.y(), d2.x(), d2.y();
  Vec2 rhs(d1.dot(m1), d2.dot(m2));
  Vec2 center = m.partialPivLu().solve(rhs);
  double r = (p1 - center).norm();
  return std::abs((p4 - center).norm() - r) <= tol.rel_eps * s;
}

bool is_perpendicular(const Line& l1, const Line& l2, const TolerancePolicy& tol) {
  return std::abs(l1.normal().dot(l2.normal())) <= tol.rel_eps;
}

bool is_parallel(const Line& l1, const Line& l2, const TolerancePolicy& tol) {
  return std::abs(cross2(l1.normal(), l2.normal())) <= tol.rel_eps;
}

double scale_of(std::span<const Point> pts) {
  if (pts.empty()) return 1.0;
  double xmin = pts[0].x(), xmax = xmin, ymin = pts[0].y(), ymax = ymin;
  for (const Point& p : pts) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  double d = std::hypot(xmax - xmin, ymax - ymin);
  return d > 0 ? d : 1.0;
}

double local_scale(std::initializer_list<Point> pts) {
  double m = 1.0;
  for (const Point& p : pts) m = std::max({m, std::abs(p.x()), std::abs(p.y())});
  return m;
}

bool triangle_nondegenerate(const Triangle& t, const TolerancePolicy& tol) {
  const Point pts[] = {t.a, t.b, t.c};
  double sc = scale_of(pts);
  return std::abs(signed_area(t.a, t.b, t.c)) > tol.abs_floor * sc * sc;
}

void require_nondegenerate(const Triangle& t) {
  if (!triangle_nondegenerate(t))
    throw GeomError(ErrKind::DegenerateTriangle, "degenerate triangle");
}

}  // namespace trigbash
