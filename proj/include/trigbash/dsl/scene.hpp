#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trigbash/constructions.hpp"
#include "trigbash/dsl/ast.hpp"
#include "trigbash/geom.hpp"
#include "trigbash/sampling.hpp"

namespace trigbash::dsl {

enum class ValueType { PointV, LineV, CircleV, ScalarV };

/// Type or scope diagnostic from resolve; carries the offending source span.
struct ResolveError {
  int line = 0;
  int column = 0;
  std::string message;
};

using Value = std::variant<Point, Line, Circle, double>;

/// Resolved, type-checked scene. One node per statement; the evaluator walks
/// statements in declaration order, which is already topological.
struct Scene {
  SceneAst ast;
  std::string title, anchor;

  int free_triangle_stmt = -1;
  std::array<std::string, 3> tri_ids;
  TriangleConstraints tri_constraints;

  std::vector<int> free_point_stmts;
  std::vector<int> assert_stmts;
  std::map<std::string, ValueType> binding_types;

  size_t node_count() const { return ast.statements.size(); }
  size_t free_object_count() const { return (free_triangle_stmt >= 0 ? 1 : 0) + free_point_stmts.size(); }
};

Scene resolve(const SceneAst& ast);  // throws ResolveError

struct Bindings {
  std::vector<std::pair<std::string, Value>> named;
  std::map<std::string, size_t> index;
  double scene_scale = 1.0;
  uint64_t seed = 0;

  const Value& at(const std::string& name) const { return named[index.at(name)].second; }
  void bind(const std::string& name, Value v) {
    index[name] = named.size();
    named.emplace_back(name, std::move(v));
  }
};

/// A degenerate sample: a construction error or failed guard, never a verdict.
struct DegenerateSample {
  std::string node;    // statement source text
  std::string reason;
};

struct EvalOutcome {
  std::optional<Bindings> bindings;
  DegenerateSample degenerate;  // valid when !bindings
  bool ok() const { return bindings.has_value(); }
};

/// Instantiates the scene for one seeded draw. All construction errors and
/// failed require-guards surface as DegenerateSample. Deterministic per seed.
/// `pinned_frame` freezes the free triangle (used by `fixed` assertions).
EvalOutcome evaluate(const Scene& scene, uint64_t seed,
                     const std::optional<Triangle>& pinned_frame = std::nullopt);

/// Evaluates an expression tree under existing bindings (no sampling); used
/// by the verifier for assertion arguments and by solve objectives. Throws
/// GeomError on construction failures.
Value eval_expr(const ExprPtr& expr, const Bindings& b,
                const Point* hole = nullptr);

/// 64-bit FNV-1a digest of the bindings, for failure witnesses.
std::string bindings_digest(const Bindings& b);

}  // namespace trigbash::dsl
