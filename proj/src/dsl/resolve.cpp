#include <algorithm>
#include <cmath>

#include "ops.hpp"
#include "trigbash/dsl/scene.hpp"

namespace trigbash::dsl {

namespace {

[[noreturn]] void fail(const SourcePos& pos, const std::string& msg) {
  throw ResolveError{pos.line, pos.col, msg};
}

class Resolver {
 public:
  Scene run(const SceneAst& ast) {
    scene_.ast = ast;
    scene_.title = ast.title;
    scene_.anchor = ast.anchor;
    for (size_t i = 0; i < ast.statements.size(); ++i) resolve_statement(static_cast<int>(i));
    check_fixed_assertions();
    scene_.binding_types = types_;
    return std::move(scene_);
  }

 private:
  void resolve_statement(int idx) {
    const Statement& st = scene_.ast.statements[static_cast<size_t>(idx)];
    switch (st.kind) {
      case Statement::Kind::FreeTriangle: {
        if (scene_.free_triangle_stmt >= 0)
          fail(st.pos, "a scene may declare at most one free triangle");
        scene_.free_triangle_stmt = idx;
        scene_.tri_ids = st.tri_ids;
        for (const auto& id : st.tri_ids) declare(st.pos, id, ValueType::PointV);
        scene_.tri_constraints = map_constraints(st);
        break;
      }
      case Statement::Kind::FreePoint: {
        resolve_locus(st.locus);
        declare(st.pos, st.id, ValueType::PointV);
        scene_.free_point_stmts.push_back(idx);
        break;
      }
      case Statement::Kind::Let: {
        std::string results = call_results(st.call, false);
        if (results == "b") fail(st.call->pos, "predicate '" + st.call->name + "' has no value");
        if (results.size() != st.ids.size())
          fail(st.pos, "'" + st.call->name + "' yields " + std::to_string(results.size()) +
                           " value(s) but " + std::to_string(st.ids.size()) + " name(s) are bound");
        for (size_t i = 0; i < st.ids.size(); ++i)
          declare(st.pos, st.ids[i], code_type(results[i], st.pos));
        break;
      }
      case Statement::Kind::Require: {
        std::string results = call_results(st.pred, false);
        if (st.cmp == CmpOp::None) {
          if (results != "b")
            fail(st.pred->pos, "require needs a predicate; '" + st.pred->name + "' is not one");
        } else {
          if (results != "s")
            fail(st.pred->pos, "comparison guard needs a scalar call, got '" + st.pred->name + "'");
        }
        break;
      }
      case Statement::Kind::Assert: {
        resolve_assertion(st);
        scene_.assert_stmts.push_back(idx);
        break;
      }
    }
  }

  void declare(const SourcePos& pos, const std::string& id, ValueType t) {
    if (types_.count(id)) fail(pos, "identifier '" + id + "' bound twice");
    types_[id] = t;
  }

  static ValueType code_type(char c, const SourcePos& pos) {
    switch (c) {
      case 'p': return ValueType::PointV;
      case 'l': return ValueType::LineV;
      case 'c': return ValueType::CircleV;
      case 's': return ValueType::ScalarV;
    }
    throw ResolveError{pos.line, pos.col, "internal: bad result code"};
  }

  // type of a value expression; holes allowed only when allow_hole
  ValueType expr_type(const ExprPtr& e, bool allow_hole) {
    switch (e->kind) {
      case Expr::Kind::Ident: {
        auto it = types_.find(e->name);
        if (it == types_.end()) fail(e->pos, "use of undeclared identifier '" + e->name + "'");
        return it->second;
      }
      case Expr::Kind::Number:
      case Expr::Kind::AngleLit:
        return ValueType::ScalarV;
      case Expr::Kind::Hole:
        if (!allow_hole) fail(e->pos, "'@' is only valid inside a solve_on_curve objective");
        return ValueType::PointV;
      case Expr::Kind::Word:
        fail(e->pos, "'" + e->name + "' is not a value");
      case Expr::Kind::Call: {
        std::string results = call_results(e, allow_hole);
        if (results.size() != 1 || results == "b")
          fail(e->pos, "'" + e->name + "' cannot be nested: it is not single-valued");
        return code_type(results[0], e->pos);
      }
    }
    fail(e->pos, "internal: unhandled expression kind");
  }

  void check_arg(const ExprPtr& call, char code, const ExprPtr& arg, bool allow_hole) {
    auto mismatch = [&](const char* want) {
      fail(arg->pos, "type mismatch in '" + call->name + "': expected " + want);
    };
    switch (code) {
      case 'p':
        if (expr_type(arg, allow_hole) != ValueType::PointV) mismatch("a point");
        break;
      case 'l':
        if (expr_type(arg, allow_hole) != ValueType::LineV) mismatch("a line");
        break;
      case 'c':
        if (expr_type(arg, allow_hole) != ValueType::CircleV) mismatch("a circle");
        break;
      case 's':
        if (expr_type(arg, allow_hole) != ValueType::ScalarV) mismatch("a scalar");
        break;
      case 'a':
        if (arg->kind == Expr::Kind::Number)
          fail(arg->pos, "angle literals need a deg or rad suffix");
        if (expr_type(arg, allow_hole) != ValueType::ScalarV) mismatch("an angle");
        break;
      case 'n':
        if (arg->kind != Expr::Kind::Number) mismatch("a numeric literal");
        break;
      case 'w': {
        if (arg->kind != Expr::Kind::Word) mismatch("a center kind");
        bool ok = false;
        for (const char* w : center_kind_words) ok = ok || arg->name == w;
        if (!ok) mismatch("a center kind (centroid, circumcenter, incenter, ...)");
        break;
      }
      case 'm':
        if (arg->kind != Expr::Kind::Word ||
            (arg->name != "parallel" && arg->name != "perpendicular"))
          mismatch("'parallel' or 'perpendicular'");
        break;
      case 'v': {
        if (arg->kind != Expr::Kind::Ident) mismatch("a vertex name");
        bool ok = false;
        for (int i = 0; i < 3; ++i)
          ok = ok || (call->args[static_cast<size_t>(i)]->kind == Expr::Kind::Ident &&
                      call->args[static_cast<size_t>(i)]->name == arg->name);
        if (!ok) fail(arg->pos, "'" + arg->name + "' must be one of the triangle arguments");
        break;
      }
      case 'k': {
        ValueType t = expr_type(arg, allow_hole);
        if (t != ValueType::LineV && t != ValueType::CircleV) mismatch("a line or circle");
        break;
      }
      case 'o':
        if (expr_type(arg, true) != ValueType::ScalarV)
          mismatch("a scalar objective");
        break;
      default:
        fail(arg->pos, "internal: bad arg code");
    }
  }

  void check_sig(const ExprPtr& call, const char* args, bool allow_hole) {
    std::string spec(args);
    bool variadic = !spec.empty() && spec.back() == '*';
    if (variadic) spec.pop_back();
    if (variadic ? call->args.size() < spec.size() : call->args.size() != spec.size())
      fail(call->pos, "'" + call->name + "' expects " + (variadic ? "at least " : "") +
                          std::to_string(spec.size()) + " argument(s), got " +
                          std::to_string(call->args.size()));
    for (size_t i = 0; i < call->args.size(); ++i)
      check_arg(call, i < spec.size() ? spec[i] : spec.back(), call->args[i], allow_hole);
  }

  std::string call_results(const ExprPtr& call, bool allow_hole) {
    if (call->kind != Expr::Kind::Call) fail(call->pos, "expected a construction call");
    const OpSig* op = find_op(call->name);
    if (!op) fail(call->pos, "unknown operation '" + call->name + "'");
    check_sig(call, op->args, allow_hole);
    return op->results;
  }

  void resolve_locus(const ExprPtr& locus) {
    if (locus->kind == Expr::Kind::Call &&
        (locus->name == "segment" || locus->name == "arc")) {
      if (locus->name == "segment") {
        if (locus->args.size() != 2) fail(locus->pos, "segment(P, Q) locus needs two points");
        for (const auto& a : locus->args)
          if (expr_type(a, false) != ValueType::PointV)
            fail(a->pos, "segment locus arguments must be points");
      } else {
        if (locus->args.size() != 4)
          fail(locus->pos, "arc(c, P, Q, witness) locus needs a circle and three points");
        if (expr_type(locus->args[0], false) != ValueType::CircleV)
          fail(locus->args[0]->pos, "arc locus needs a circle first");
        for (size_t i = 1; i < 4; ++i)
          if (expr_type(locus->args[i], false) != ValueType::PointV)
            fail(locus->args[i]->pos, "arc locus directions must be points");
      }
      return;
    }
    ValueType t = expr_type(locus, false);
    if (t != ValueType::LineV && t != ValueType::CircleV)
      fail(locus->pos, "a free point locus must be a segment, arc, line, or circle");
  }

  void resolve_assertion(const Statement& st) {
    const ExprPtr& a = st.assertion;
    const OpSig* sig = find_assertion(a->name);
    if (!sig) fail(a->pos, "unknown assertion kind '" + a->name + "'");
    if (a->name == "tangent") {
      if (a->args.size() != 2) fail(a->pos, "tangent(line-or-circle, circle) needs two arguments");
      ValueType t0 = expr_type(a->args[0], false);
      if (t0 != ValueType::LineV && t0 != ValueType::CircleV)
        fail(a->args[0]->pos, "tangent needs a line or circle first");
      if (expr_type(a->args[1], false) != ValueType::CircleV)
        fail(a->args[1]->pos, "tangent needs a circle second");
      return;
    }
    if (a->name == "fixed") {
      if (a->args.size() != 2) fail(a->pos, "fixed(expr, free_point) needs two arguments");
      ValueType t0 = expr_type(a->args[0], false);
      if (t0 != ValueType::PointV && t0 != ValueType::ScalarV)
        fail(a->args[0]->pos, "fixed expressions must be point- or scalar-valued");
      if (a->args[1]->kind != Expr::Kind::Ident)
        fail(a->args[1]->pos, "fixed needs the varying free point's name");
      fixed_targets_.emplace_back(st.pos, a->args[1]->name);
      return;
    }
    check_sig(a, sig->args, false);
  }

  void check_fixed_assertions() {
    for (const auto& [pos, target] : fixed_targets_) {
      bool is_free_point = false;
      for (int idx : scene_.free_point_stmts)
        if (scene_.ast.statements[static_cast<size_t>(idx)].id == target) is_free_point = true;
      if (!is_free_point)
        fail(pos, "fixed: '" + target + "' is not a free point of this scene");
      // fixed-point claims are frame-relative: exactly one varying free object
      // over one pinned free triangle
      if (scene_.free_point_stmts.size() != 1 || scene_.free_triangle_stmt < 0)
        fail(pos,
             "fixed assertions need a scene with exactly one free point over one "
             "free-triangle frame; this scene has " +
                 std::to_string(scene_.free_object_count()) + " free objects");
    }
  }

  TriangleConstraints map_constraints(const Statement& st) {
    TriangleConstraints cs;
    auto vertex_index = [&](const SourcePos& pos, const std::string& name) {
      for (int i = 0; i < 3; ++i)
        if (st.tri_ids[static_cast<size_t>(i)] == name) return i;
      fail(pos, "'" + name + "' is not a vertex of this triangle");
    };
    // a side token concatenates two vertex names; the side is indexed by the
    // opposite vertex
    auto side_index = [&](const SourcePos& pos, const std::string& token) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          if (token == st.tri_ids[static_cast<size_t>(i)] + st.tri_ids[static_cast<size_t>(j)])
            return 3 - i - j;
        }
      fail(pos, "'" + token + "' is not a side of this triangle");
    };
    for (const Constraint& c : st.constraints) {
      switch (c.kind) {
        case Constraint::Kind::Acute: cs.acute = true; break;
        case Constraint::Kind::Scalene: cs.scalene = true; break;
        case Constraint::Kind::ObtuseAt: cs.obtuse_at = vertex_index(c.pos, c.a); break;
        case Constraint::Kind::Isosceles:
          cs.isosceles = std::make_pair(side_index(c.pos, c.a), side_index(c.pos, c.b));
          break;
        case Constraint::Kind::MinAngle:
          cs.min_angle = c.deg ? c.angle * M_PI / 180.0 : c.angle;
          break;
        case Constraint::Kind::Order:
          cs.orders.emplace_back(side_index(c.pos, c.a), side_index(c.pos, c.b));
          break;
      }
    }
    return cs;
  }

  Scene scene_;
  std::map<std::string, ValueType> types_;
  std::vector<std::pair<SourcePos, std::string>> fixed_targets_;
};

}  // namespace

Scene resolve(const SceneAst& ast) { return Resolver().run(ast); }

}  // namespace trigbash::dsl
