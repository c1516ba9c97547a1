#include "trigbash/lemmas.hpp"

#include <algorithm>
#include <cmath>

namespace trigbash {

ResidualSet law_of_sines_residuals(const Triangle& t) {
  require_nondegenerate(t);
  Circle cc = circumcircle(t.a, t.b, t.c);
  double two_r = 2.0 * cc.radius;
  ResidualSet rs;
  rs.add("a/sinA - 2R", t.side_a() / std::sin(angle_at(t.a, t.b, t.c).radians) - two_r);
  rs.add("b/sinB - 2R", t.side_b() / std::sin(angle_at(t.b, t.c, t.a).radians) - two_r);
  rs.add("c/sinC - 2R", t.side_c() / std::sin(angle_at(t.c, t.a, t.b).radians) - two_r);
  return rs;
}

ResidualSet law_of_cosines_residuals(const Triangle& t) {
  require_nondegenerate(t);
  double a = t.side_a(), b = t.side_b(), c = t.side_c();
  ResidualSet rs;
  rs.add("a^2", a * a - b * b - c * c + 2 * b * c * std::cos(angle_at(t.a, t.b, t.c).radians));
  rs.add("b^2", b * b - c * c - a * a + 2 * c * a * std::cos(angle_at(t.b, t.c, t.a).radians));
  rs.add("c^2", c * c - a * a - b * b + 2 * a * b * std::cos(angle_at(t.c, t.a, t.b).radians));
  return rs;
}

ResidualSet trig_identity_residuals(double x, double y) {
  ResidualSet rs;
  double sx = std::sin(x), cx = std::cos(x), sy = std::sin(y), cy = std::cos(y);
  rs.add("sin2x", std::sin(2 * x) - 2 * sx * cx);
  double c2x = std::cos(2 * x);
  rs.add("cos2x", std::max(std::abs(c2x - (2 * cx * cx - 1)), std::abs(c2x - (1 - 2 * sx * sx))));
  rs.add("sin(x+y)", std::sin(x + y) - (sx * cy + cx * sy));
  rs.add("sin(x-y)", std::sin(x - y) - (sx * cy - cx * sy));
  rs.add("cos(x+y)", std::cos(x + y) - (cx * cy - sx * sy));
  rs.add("cos(x-y)", std::cos(x - y) - (cx * cy + sx * sy));
  return rs;
}

double ratio_lemma_residual(const Point& a, const Point& b, const Point& c, const Point& m,
                            const TolerancePolicy& tol) {
  double r = directed_ratio(m, b, c, tol);  // throws if M off line BC or M = C
  if (r <= 0) throw GeomError(ErrKind::BadArgument, "ratio_lemma: M outside segment BC");
  double s = local_scale({b, c, m});
  if (dist(m, b) <= 1e-12 * s || dist(m, c) <= 1e-12 * s)
    throw GeomError(ErrKind::CoincidentPoints, "ratio_lemma: M at an endpoint");
  double lhs = dist(b, m) / dist(m, c);
  double rhs = (dist(a, b) / dist(a, c)) * std::sin(angle_at(a, b, m).radians) /
               std::sin(angle_at(a, m, c).radians);
  return std::abs(lhs - rhs) / lhs;
}

PerpCriterion perpendicularity_criterion(const Point& a, const Point& b, const Point& c,
                                         const Point& d, const TolerancePolicy& tol) {
  double s = local_scale({a, b, c, d});
  if (dist(a, c) <= 1e-12 * s || dist(b, d) <= 1e-12 * s)
    throw GeomError(ErrKind::CoincidentPoints, "perpendicularity_criterion: A=C or B=D");
  auto sq = [](const Point& p, const Point& q) { return (p - q).squaredNorm(); };
  double gap = (sq(a, b) - sq(a, d)) - (sq(b, c) - sq(c, d));
  bool perp = is_perpendicular(Line::through(a, c), Line::through(b, d), tol);
  return {gap, perp};
}

double steiner_residual(const Point& a, const Point& b, const Point& c, const Point& d,
                        const Point& e) {
  double bad = angle_at(a, b, d).radians, eac = angle_at(a, e, c).radians;
  if (std::abs(bad - eac) > 1e-9)
    throw GeomError(ErrKind::BadArgument, "steiner_residual: AD, AE are not isogonal", bad - eac);
  double lhs = (dist(b, d) / dist(d, c)) * (dist(b, e) / dist(e, c));
  double rhs = (dist(a, b) * dist(a, b)) / (dist(a, c) * dist(a, c));
  return std::abs(lhs - rhs) / rhs;
}

ResidualSet symmedian_checks(const Point& a, const Point& b, const Point& c,
                             const TolerancePolicy& tol) {
  require_nondegenerate({a, b, c});
  Circle cc = circumcircle(a, b, c);
  Line tb = tangent_line(cc, b), tc = tangent_line(cc, c);
  if (is_parallel(tb, tc, TolerancePolicy{}.with_scale(1.0)))
    throw GeomError(ErrKind::ParallelLines, "symmedian_checks: tangents parallel (right angle at A)");
  Point x = line_line_intersect(tb, tc);
  Point m = midpoint(b, c);
  // T is the symmedian foot; the ray A->T always lies inside angle A, so the
  // angle symmetry is measured through it (X itself sits on the opposite ray
  // when the angle at A is obtuse).
  Point t = line_line_intersect(Line::through(a, x), Line::through(b, c));
  ResidualSet rs;
  rs.add("BAX-CAM", angle_at(a, b, t).radians - angle_at(a, c, m).radians);
  rs.add("CAX-BAM", angle_at(a, c, t).radians - angle_at(a, b, m).radians);
  double k = dist(a, b) / dist(a, c);
  rs.add("BT/TC-(AB/AC)^2", directed_ratio(t, b, c, tol) - k * k);
  return rs;
}

Angle solve_ratio_angle(Angle t, double r) {
  double tt = t.radians;
  if (!(tt > 0 && tt < M_PI))
    throw GeomError(ErrKind::BadArgument, "solve_ratio_angle: t outside (0, pi)");
  if (!(r > 0)) throw GeomError(ErrKind::BadArgument, "solve_ratio_angle: r must be positive");
  auto f = [&](double x) { return std::sin(x) / std::sin(tt - x); };
  // f is strictly increasing from 0 to +inf on (0, t)
  double lo = 0.0, hi = tt;
  for (int i = 0; i < 300; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < r ? lo : hi) = mid;
  }
  double alpha = 0.5 * (lo + hi);
  if (std::abs(f(alpha) - r) > 1e-11 * r)
    throw GeomError(ErrKind::MaxIterations, "solve_ratio_angle did not converge");
  return Angle{alpha};
}

double ceva_product(const Point& a, const Point& b, const Point& c, const CevianTriple& t,
                    const TolerancePolicy& tol) {
  double s = local_scale({a, b, c});
  for (auto [x, u, v] : {std::tuple{t.d, b, c}, std::tuple{t.e, c, a}, std::tuple{t.f, a, b}}) {
    if (dist(x, u) <= 1e-12 * s || dist(x, v) <= 1e-12 * s)
      throw GeomError(ErrKind::CoincidentPoints, "ceva_product: cevian point at a vertex");
  }
  return directed_ratio(t.d, b, c, tol) * directed_ratio(t.e, c, a, tol) *
         directed_ratio(t.f, a, b, tol);
}

double trig_ceva_product(const Point& a, const Point& b, const Point& c, const CevianTriple& t,
                         const TolerancePolicy& tol) {
  for (auto [x, u, v] : {std::tuple{t.d, b, c}, std::tuple{t.e, c, a}, std::tuple{t.f, a, b}}) {
    if (directed_ratio(x, u, v, tol) <= 0)
      throw GeomError(ErrKind::BadArgument, "trig_ceva_product: point outside its side");
  }
  auto ratio = [](const Point& v, const Point& p, const Point& x, const Point& q) {
    return std::sin(angle_at(v, x, p).radians) / std::sin(angle_at(v, x, q).radians);
  };
  // sin DAB/sin DAC * sin EBC/sin EBA * sin FCA/sin FCB
  return ratio(a, b, t.d, c) * ratio(b, c, t.e, a) * ratio(c, a, t.f, b);
}

MedianParallel median_parallel_equiv(const Point& a, const Point& b, const Point& c,
                                     const Point& e, const Point& f,
                                     const TolerancePolicy& tol) {
  if (directed_ratio(e, a, b, tol) <= 0 || directed_ratio(f, a, c, tol) <= 0)
    throw GeomError(ErrKind::BadArgument, "median_parallel_equiv: E or F outside its side");
  Point m = midpoint(b, c);
  bool parallel = is_parallel(Line::through(e, f), Line::through(b, c), tol);
  Point x = line_line_intersect(Line::through(b, f), Line::through(c, e));
  const Point pts[] = {a, b, c, e, f, m, x};
  bool concurrent =
      std::abs(Line::through(a, m).signed_dist(x)) <= tol.rel_eps * scale_of(pts);
  return {parallel, concurrent};
}

namespace {

// concurrency of three lines with parallels meeting at infinity
bool lines_concurrent(const Line& l1, const Line& l2, const Line& l3, double scale,
                      const TolerancePolicy& tol) {
  const double ang_eps = 1e-8;
  TolerancePolicy ptol = tol;
  ptol.rel_eps = ang_eps;
  int npar = is_parallel(l1, l2, ptol) + is_parallel(l2, l3, ptol) + is_parallel(l1, l3, ptol);
  if (npar == 3) return true;  // common point at infinity
  if (npar > 0) return false;
  Point p = line_line_intersect(l1, l2);
  return std::abs(l3.signed_dist(p)) <= tol.rel_eps * std::max(scale, local_scale({p}));
}

}  // namespace

DesarguesResult desargues_check(const Triangle& t1, const Triangle& t2,
                                const TolerancePolicy& tol) {
  const Point pts[] = {t1.a, t1.b, t1.c, t2.a, t2.b, t2.c};
  double sc = scale_of(pts);
  for (auto [p, q] : {std::pair{t1.a, t2.a}, {t1.b, t2.b}, {t1.c, t2.c}})
    if (dist(p, q) <= 1e-12 * sc)
      throw GeomError(ErrKind::CoincidentPoints, "desargues_check: coincident corresponding vertices");
  bool central = lines_concurrent(Line::through(t1.a, t2.a), Line::through(t1.b, t2.b),
                                  Line::through(t1.c, t2.c), sc, tol);

  const double ang_eps = 1e-8;
  TolerancePolicy ptol = tol;
  ptol.rel_eps = ang_eps;
  Line s1[3] = {Line::through(t1.b, t1.c), Line::through(t1.c, t1.a), Line::through(t1.a, t1.b)};
  Line s2[3] = {Line::through(t2.b, t2.c), Line::through(t2.c, t2.a), Line::through(t2.a, t2.b)};
  int par_mask = 0, npar = 0;
  for (int i = 0; i < 3; ++i)
    if (is_parallel(s1[i], s2[i], ptol)) {
      par_mask |= 1 << i;
      ++npar;
    }
  bool axial;
  if (npar == 3) {
    axial = true;  // axis at infinity
  } else if (npar == 2) {
    axial = false;  // two points at infinity force the third pair parallel
  } else if (npar == 1) {
    int k = par_mask == 1 ? 0 : par_mask == 2 ? 1 : 2;
    Point u = line_line_intersect(s1[(k + 1) % 3], s2[(k + 1) % 3]);
    Point v = line_line_intersect(s1[(k + 2) % 3], s2[(k + 2) % 3]);
    axial = dist(u, v) > 1e-12 * sc && is_parallel(Line::through(u, v), s1[k], ptol);
  } else {
    Point u = line_line_intersect(s1[0], s2[0]);
    Point v = line_line_intersect(s1[1], s2[1]);
    Point w = line_line_intersect(s1[2], s2[2]);
    const Point ipts[] = {u, v, w};
    axial = is_collinear({u, v, w}, tol.with_scale(std::max(sc, scale_of(ipts))));
  }
  return {central, axial};
}

double butterfly_residual(const Circle& c, const Point& p, const Point& q, const Point& a,
                          const Point& b, const Point& cc, const Point& d,
                          const TolerancePolicy& tol) {
  Point m = midpoint(p, q);
  const Point pts[] = {p, q, a, b, cc, d};
  double sc = std::max(scale_of(pts), c.radius);
  if (std::abs(Line::through(a, b).signed_dist(m)) > 1e-8 * sc ||
      std::abs(Line::through(cc, d).signed_dist(m)) > 1e-8 * sc)
    throw GeomError(ErrKind::NotOnLine, "butterfly_residual: chord misses the midpoint M");
  Line pq = Line::through(p, q);
  Line ad = Line::through(a, d), bc = Line::through(b, cc);
  if (is_parallel(ad, pq, tol) || is_parallel(bc, pq, tol))
    throw GeomError(ErrKind::ParallelLines, "butterfly_residual: AD or BC parallel to PQ");
  Point x = line_line_intersect(ad, pq);
  Point y = line_line_intersect(bc, pq);
  Vec2 u = pq.direction();
  double xs = u.dot(x - m), ys = u.dot(y - m);
  if (std::abs(xs - ys) <= 1e-12 * sc) return 0.0;  // X = Y = M (coincident chords)
  return std::abs(xs + ys) / std::abs(xs - ys);
}

bool polygon_is_simple(std::span<const Point> vertices) {
  size_t n = vertices.size();
  auto seg_intersect = [&](const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    auto o = [](const Point& a, const Point& b, const Point& c) {
      double v = cross2(b - a, c - a);
      return v > 0 ? 1 : v < 0 ? -1 : 0;
    };
    return o(p1, p2, q1) != o(p1, p2, q2) && o(q1, q2, p1) != o(q1, q2, p2);
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;  // shared endpoint
      if (seg_intersect(vertices[i], vertices[(i + 1) % n], vertices[j], vertices[(j + 1) % n]))
        return false;
    }
  return true;
}

bool point_in_polygon(const Point& k, std::span<const Point> vertices) {
  // winding by signed crossings of the horizontal ray
  size_t n = vertices.size();
  bool in = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = vertices[i];
    const Point& b = vertices[j];
    if ((a.y() > k.y()) != (b.y() > k.y()) &&
        k.x() < (b.x() - a.x()) * (k.y() - a.y()) / (b.y() - a.y()) + a.x())
      in = !in;
  }
  return in;
}

bool polygon_is_convex(std::span<const Point> vertices) {
  size_t n = vertices.size();
  if (n < 3) return false;
  int sign = 0;
  for (size_t i = 0; i < n; ++i) {
    double cr = cross2(vertices[(i + 1) % n] - vertices[i], vertices[(i + 2) % n] - vertices[(i + 1) % n]);
    int s = cr > 0 ? 1 : cr < 0 ? -1 : 0;
    if (s == 0) return false;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

double polygon_sine_product(std::span<const Point> vertices, const Point& k) {
  size_t n = vertices.size();
  if (n < 3) throw GeomError(ErrKind::BadArgument, "polygon_sine_product needs >= 3 vertices");
  if (!polygon_is_simple(vertices))
    throw GeomError(ErrKind::BadArgument, "polygon_sine_product: polygon self-intersects");
  if (!point_in_polygon(k, vertices))
    throw GeomError(ErrKind::BadArgument, "polygon_sine_product: K outside polygon");
  double prod = 1.0;
  for (size_t i = 0; i < n; ++i) {
    const Point& v = vertices[(i + 1) % n];          // A_{i+1}
    const Point& prev = vertices[i];                 // A_i
    const Point& next = vertices[(i + 2) % n];       // A_{i+2}
    prod *= std::sin(angle_at(v, k, prev).radians) / std::sin(angle_at(v, k, next).radians);
  }
  return prod;
}

}  // namespace trigbash
