#include <cmath>
#include <cstring>

#include "ops.hpp"
#include "trigbash/dsl/scene.hpp"
#include "trigbash/lemmas.hpp"

namespace trigbash::dsl {

namespace {

const Point& as_point(const Value& v) { return std::get<Point>(v); }
const Line& as_line(const Value& v) { return std::get<Line>(v); }
const Circle& as_circle(const Value& v) { return std::get<Circle>(v); }
double as_scalar(const Value& v) { return std::get<double>(v); }

double literal_radians(const Expr& e) {
  return e.deg ? e.number * M_PI / 180.0 : e.number;
}

CenterKind center_kind_of(const std::string& w) {
  if (w == "centroid") return CenterKind::Centroid;
  if (w == "circumcenter") return CenterKind::Circumcenter;
  if (w == "incenter") return CenterKind::Incenter;
  if (w == "orthocenter") return CenterKind::Orthocenter;
  if (w == "symmedian_point") return CenterKind::SymmedianPoint;
  throw GeomError(ErrKind::BadArgument, "unknown center kind " + w);
}

std::vector<Value> eval_call(const Expr& call, const Bindings& b, const Point* hole);

Value eval_one(const ExprPtr& e, const Bindings& b, const Point* hole) {
  switch (e->kind) {
    case Expr::Kind::Ident:
      return b.at(e->name);
    case Expr::Kind::Number:
      return e->number;
    case Expr::Kind::AngleLit:
      return literal_radians(*e);
    case Expr::Kind::Hole:
      if (!hole) throw GeomError(ErrKind::BadArgument, "unbound '@' hole");
      return *hole;
    case Expr::Kind::Word:
      throw GeomError(ErrKind::BadArgument, "word argument has no value");
    case Expr::Kind::Call: {
      std::vector<Value> r = eval_call(*e, b, hole);
      return r.front();
    }
  }
  throw GeomError(ErrKind::BadArgument, "unhandled expression");
}

std::vector<Value> pack(const IncircleResult& r) {
  return {Value(r.circle), Value(r.touch_d), Value(r.touch_e), Value(r.touch_f)};
}

std::vector<Value> eval_call(const Expr& call, const Bindings& b, const Point* hole) {
  const std::string& n = call.name;
  auto arg = [&](size_t i) { return eval_one(call.args[i], b, hole); };
  auto p = [&](size_t i) { return as_point(arg(i)); };
  auto l = [&](size_t i) { return as_line(arg(i)); };
  auto c = [&](size_t i) { return as_circle(arg(i)); };
  auto s = [&](size_t i) { return as_scalar(arg(i)); };

  if (n == "line") return {Value(Line::through(p(0), p(1)))};
  if (n == "circle") {
    Point ctr = p(0), thru = p(1);
    double r = dist(ctr, thru);
    if (r <= 1e-12 * local_scale({ctr, thru}))
      throw GeomError(ErrKind::CoincidentPoints, "circle through its own center");
    return {Value(Circle(ctr, r))};
  }
  if (n == "midpoint") return {Value(midpoint(p(0), p(1)))};
  if (n == "perp_bisector") return {Value(perp_bisector(p(0), p(1)))};
  if (n == "foot") return {Value(foot(p(0), l(1)))};
  if (n == "reflect") return {Value(reflect(p(0), l(1)))};
  if (n == "antipode") return {Value(antipode(p(0), c(1)))};
  if (n == "closest_point") return {Value(closest_point(c(0), p(1)))};
  if (n == "through") {
    ThroughMode mode = call.args[2]->name == "parallel" ? ThroughMode::Parallel
                                                        : ThroughMode::Perpendicular;
    return {Value(through(p(0), l(1), mode))};
  }
  if (n == "line_line_intersect") return {Value(line_line_intersect(l(0), l(1)))};
  if (n == "second_intersection") return {Value(second_intersection(l(0), c(1), p(2)).point)};
  if (n == "circumcircle") return {Value(circumcircle(p(0), p(1), p(2)))};
  if (n == "incircle") return pack(incircle(p(0), p(1), p(2)));
  if (n == "excircle") {
    int idx = -1;
    for (int i = 0; i < 3; ++i)
      if (call.args[static_cast<size_t>(i)]->name == call.args[3]->name) idx = i;
    return pack(excircle(p(0), p(1), p(2), idx));
  }
  if (n == "triangle_center")
    return {Value(triangle_center(p(0), p(1), p(2), center_kind_of(call.args[3]->name)))};
  if (n == "arc_midpoint") return {Value(arc_midpoint(c(0), p(1), p(2), p(3)))};
  if (n == "tangent_line") return {Value(tangent_line(c(0), p(1)))};
  if (n == "tangents_from") {
    auto [t1, t2] = tangents_from(c(0), p(1));
    return {Value(t1), Value(t2)};
  }
  if (n == "isogonal_line") return {Value(isogonal_line(p(0), p(1), p(2), l(3)))};
  if (n == "rotate_ray")
    return {Value(rotate_ray(p(0), p(1), Angle{s(2)}, static_cast<int>(s(3))))};
  if (n == "rotate_point")
    return {Value(rotate_point(p(0), p(1), Angle{s(2)}, static_cast<int>(s(3))))};
  if (n == "mixtilinear_incircle") {
    MixtilinearResult r = mixtilinear_incircle(p(0), p(1), p(2));
    return {Value(r.circle), Value(r.touch_k), Value(r.touch_l), Value(r.touch_m)};
  }
  if (n == "solve_on_curve") {
    Value cv = arg(0);
    Curve curve = std::holds_alternative<Line>(cv) ? Curve(as_line(cv)) : Curve(as_circle(cv));
    double t_lo = curve_param(curve, p(1));
    double t_hi = curve_param(curve, p(2));
    const ExprPtr& objective = call.args[3];
    auto f = [&](const Point& x) { return as_scalar(eval_one(objective, b, &x)); };
    return {Value(solve_on_curve(curve, f, t_lo, t_hi))};
  }
  if (n == "dist") return {Value(dist(p(0), p(1)))};
  if (n == "angle_at") return {Value(angle_at(p(0), p(1), p(2)).radians)};
  if (n == "directed_ratio") return {Value(directed_ratio(p(0), p(1), p(2)))};
  if (n == "signed_area") return {Value(signed_area(p(0), p(1), p(2)))};
  if (n == "angle_difference")
    return {Value(angle_at(p(0), p(1), p(2)).radians - angle_at(p(3), p(4), p(5)).radians)};
  throw GeomError(ErrKind::BadArgument, "unknown operation '" + n + "'");
}

bool eval_predicate(const Expr& call, const Bindings& b) {
  const std::string& n = call.name;
  std::vector<Point> pts;
  std::vector<Line> lines;
  for (const ExprPtr& a : call.args) {
    Value v = eval_one(a, b, nullptr);
    if (std::holds_alternative<Point>(v)) pts.push_back(as_point(v));
    else if (std::holds_alternative<Line>(v)) lines.push_back(as_line(v));
  }
  TolerancePolicy tol = TolerancePolicy{}.with_scale(pts.empty() ? 1.0 : scale_of(pts));
  if (n == "is_collinear") return is_collinear(std::span<const Point>(pts), tol);
  if (n == "is_concyclic") return is_concyclic(pts[0], pts[1], pts[2], pts[3], tol);
  if (n == "is_perpendicular") return is_perpendicular(lines[0], lines[1], tol);
  if (n == "is_parallel") return is_parallel(lines[0], lines[1], tol);
  if (n == "convex") return polygon_is_simple(pts) && polygon_is_convex(pts);
  if (n == "inside") {
    std::span<const Point> poly(pts.data() + 1, pts.size() - 1);
    return polygon_is_simple(poly) && point_in_polygon(pts[0], poly);
  }
  throw GeomError(ErrKind::BadArgument, "unknown predicate '" + n + "'");
}

}  // namespace

Value eval_expr(const ExprPtr& expr, const Bindings& b, const Point* hole) {
  return eval_one(expr, b, hole);
}

EvalOutcome evaluate(const Scene& scene, uint64_t seed,
                     const std::optional<Triangle>& pinned_frame) {
  Rng rng(seed);
  Bindings b;
  b.seed = seed;
  const auto& stmts = scene.ast.statements;
  for (size_t i = 0; i < stmts.size(); ++i) {
    const Statement& st = stmts[i];
    try {
      switch (st.kind) {
        case Statement::Kind::FreeTriangle: {
          Triangle t = pinned_frame ? *pinned_frame
                                    : sample_triangle(scene.tri_constraints, rng);
          b.bind(st.tri_ids[0], Value(t.a));
          b.bind(st.tri_ids[1], Value(t.b));
          b.bind(st.tri_ids[2], Value(t.c));
          break;
        }
        case Statement::Kind::FreePoint: {
          Point pt(0, 0);
          const ExprPtr& locus = st.locus;
          if (locus->kind == Expr::Kind::Call && locus->name == "segment") {
            Point p = std::get<Point>(eval_one(locus->args[0], b, nullptr));
            Point q = std::get<Point>(eval_one(locus->args[1], b, nullptr));
            pt = sample_on_segment(p, q, rng);
          } else if (locus->kind == Expr::Kind::Call && locus->name == "line") {
            // keep the defining points as the sampling frame
            Point p = std::get<Point>(eval_one(locus->args[0], b, nullptr));
            Point q = std::get<Point>(eval_one(locus->args[1], b, nullptr));
            pt = sample_on_line(p, q, rng);
          } else if (locus->kind == Expr::Kind::Call && locus->name == "arc") {
            Circle c = std::get<Circle>(eval_one(locus->args[0], b, nullptr));
            Point p = std::get<Point>(eval_one(locus->args[1], b, nullptr));
            Point q = std::get<Point>(eval_one(locus->args[2], b, nullptr));
            Point w = std::get<Point>(eval_one(locus->args[3], b, nullptr));
            pt = sample_on_arc(c, p, q, w, rng);
          } else {
            Value v = eval_one(locus, b, nullptr);
            if (std::holds_alternative<Circle>(v)) {
              pt = sample_on_circle(std::get<Circle>(v), rng);
            } else {
              const Line& l = std::get<Line>(v);
              Point base = l.offset() * l.normal();
              pt = base + rng.uniform(-2.0, 2.0) * l.direction();
            }
          }
          b.bind(st.id, Value(pt));
          break;
        }
        case Statement::Kind::Let: {
          std::vector<Value> vals = eval_call(*st.call, b, nullptr);
          for (size_t k = 0; k < st.ids.size(); ++k) b.bind(st.ids[k], vals[k]);
          break;
        }
        case Statement::Kind::Require: {
          bool ok;
          if (st.cmp == CmpOp::None) {
            ok = eval_predicate(*st.pred, b);
          } else {
            double lhs = std::get<double>(eval_one(st.pred, b, nullptr));
            double rhs = st.rhs_is_angle && st.rhs_deg ? st.rhs * M_PI / 180.0 : st.rhs;
            switch (st.cmp) {
              case CmpOp::Lt: ok = lhs < rhs; break;
              case CmpOp::Gt: ok = lhs > rhs; break;
              case CmpOp::Le: ok = lhs <= rhs; break;
              case CmpOp::Ge: ok = lhs >= rhs; break;
              default: ok = false;
            }
          }
          if (!ok) return {std::nullopt, {st.source, "guard not satisfied"}};
          break;
        }
        case Statement::Kind::Assert:
          break;  // judged by the verifier
      }
    } catch (const GeomError& e) {
      return {std::nullopt, {st.source, e.what()}};
    }
  }
  std::vector<Point> pts;
  for (const auto& [name, v] : b.named)
    if (std::holds_alternative<Point>(v)) pts.push_back(std::get<Point>(v));
  b.scene_scale = scale_of(pts);
  return {std::move(b), {}};
}

std::string bindings_digest(const Bindings& b) {
  uint64_t h = 0xCBF29CE484222325ull;
  auto mix = [&](const void* data, size_t len) {
    const unsigned char* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001B3ull;
    }
  };
  auto mix_double = [&](double d) { mix(&d, sizeof d); };
  for (const auto& [name, v] : b.named) {
    mix(name.data(), name.size());
    if (const Point* p = std::get_if<Point>(&v)) {
      mix_double(p->x());
      mix_double(p->y());
    } else if (const Line* l = std::get_if<Line>(&v)) {
      mix_double(l->normal().x());
      mix_double(l->normal().y());
      mix_double(l->offset());
    } else if (const Circle* c = std::get_if<Circle>(&v)) {
      mix_double(c->center.x());
      mix_double(c->center.y());
      mix_double(c->radius);
    } else {
      mix_double(std::get<double>(v));
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace trigbash::dsl
