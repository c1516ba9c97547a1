#pragma once

#include <Eigen/Core>

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace trigbash {

using Point = Eigen::Vector2d;
using Vec2 = Eigen::Vector2d;

inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }
inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

enum class ErrKind {
  CoincidentPoints,
  ParallelLines,
  NotOnCircle,
  NotOnLine,
  NotCollinear,
  DegenerateTriangle,
  InsideCircle,
  NoSignChange,
  MaxIterations,
  BracketingFailure,
  BadArgument,
};

/// Thrown by constructions and predicates on violated preconditions. The scene
/// evaluator converts these into degenerate samples; they are not verdicts.
class GeomError : public std::runtime_error {
 public:
  GeomError(ErrKind kind, const std::string& msg, double detail = 0.0)
      : std::runtime_error(msg), kind_(kind), detail_(detail) {}
  ErrKind kind() const { return kind_; }
  double detail() const { return detail_; }  // e.g. near-parallel angle

 private:
  ErrKind kind_;
  double detail_;
};

/// Unsigned plane angle in radians. angle_at produces values in (0, pi).
struct Angle {
  double radians = 0.0;
};

inline Angle radians(double r) { return Angle{r}; }
inline Angle degrees(double d) { return Angle{d * M_PI / 180.0}; }

/// Relative/absolute tolerance pair plus the configuration scale (bounding-box
/// diameter of the sample) that makes verdicts similarity-invariant.
struct TolerancePolicy {
  double rel_eps = 1e-9;
  double abs_floor = 1e-12;
  double scale = 1.0;

  double length_tol() const { return rel_eps * scale; }
  double area_tol() const { return rel_eps * scale * scale; }
  TolerancePolicy with_scale(double s) const {
    TolerancePolicy t = *this;
    t.scale = s;
    return t;
  }
  void validate() const {
    if (!(rel_eps > abs_floor && abs_floor > 0))
      throw GeomError(ErrKind::BadArgument, "tolerance policy requires rel_eps > abs_floor > 0");
  }
};

/// Infinite line {p : n.p = d} with unit normal n.
class Line {
 public:
  Line(const Vec2& normal, double offset) : normal_(normal), offset_(offset) {
    double n = normal_.norm();
    if (n < 1e-14) throw GeomError(ErrKind::BadArgument, "line normal is zero");
    normal_ /= n;
    offset_ /= n;
  }

  static Line through(const Point& p, const Point& q);
  static Line from_point_dir(const Point& p, const Vec2& dir);

  const Vec2& normal() const { return normal_; }
  double offset() const { return offset_; }
  // oriented so that through(P, Q).direction() points from P to Q
  Vec2 direction() const { return Vec2(normal_.y(), -normal_.x()); }
  double signed_dist(const Point& p) const { return normal_.dot(p) - offset_; }
  bool contains(const Point& p, const TolerancePolicy& tol) const {
    return std::abs(signed_dist(p)) <= tol.length_tol();
  }

 private:
  Vec2 normal_;
  double offset_;
};

struct Circle {
  Point center;
  double radius;

  Circle(const Point& c, double r) : center(c), radius(r) {
    if (!(r > 0)) throw GeomError(ErrKind::BadArgument, "circle radius must be positive");
  }
  bool contains(const Point& p, const TolerancePolicy& tol) const {
    return std::abs((p - center).norm() - radius) <= tol.length_tol();
  }
};

struct Triangle {
  Point a, b, c;

  double side_a() const { return (b - c).norm(); }  // |BC|
  double side_b() const { return (c - a).norm(); }  // |CA|
  double side_c() const { return (a - b).norm(); }  // |AB|
};

double dist(const Point& p, const Point& q);
double signed_area(const Point& a, const Point& b, const Point& c);

/// Unsigned angle BAC at vertex a, in (0, pi) for nondegenerate input.
Angle angle_at(const Point& a, const Point& b, const Point& c);

/// Signed ratio PX/XQ along line PQ; positive iff x lies strictly between.
double directed_ratio(const Point& x, const Point& p, const Point& q,
                      const TolerancePolicy& tol = {});

bool is_collinear(std::span<const Point> pts, const TolerancePolicy& tol);
bool is_collinear(std::initializer_list<Point> pts, const TolerancePolicy& tol);
bool is_concyclic(const Point& p1, const Point& p2, const Point& p3, const Point& p4,
                  const TolerancePolicy& tol);
bool is_perpendicular(const Line& l1, const Line& l2, const TolerancePolicy& tol);
bool is_parallel(const Line& l1, const Line& l2, const TolerancePolicy& tol);

/// Diameter (diagonal) of the bounding box of a point set; the TolerancePolicy
/// scale for a sample.
double scale_of(std::span<const Point> pts);

/// Local scale helper used by precondition checks inside operations.
double local_scale(std::initializer_list<Point> pts);

bool triangle_nondegenerate(const Triangle& t, const TolerancePolicy& tol = {});
void require_nondegenerate(const Triangle& t);

}  // namespace trigbash
