#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace trigbash::dsl {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
  std::vector<std::string> expected;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Argument/expression node: identifier reference, nested construction call,
/// numeric or angle literal, reserved word (center kinds, through modes), or
/// the probe-point hole '@' of a solve_on_curve objective.
struct Expr {
  enum class Kind { Ident, Call, Number, AngleLit, Word, Hole };
  Kind kind = Kind::Ident;
  std::string name;            // Ident / Call / Word
  std::vector<ExprPtr> args;   // Call only
  double number = 0.0;         // Number value, or AngleLit magnitude as written
  bool deg = false;            // AngleLit unit
  SourcePos pos;
};

struct Constraint {
  enum class Kind { Acute, ObtuseAt, Scalene, Isosceles, MinAngle, Order };
  Kind kind = Kind::Acute;
  std::string a, b;       // vertex name (ObtuseAt) or side tokens (Isosceles/Order)
  double angle = 0.0;     // MinAngle magnitude as written
  bool deg = true;
  SourcePos pos;
};

enum class CmpOp { None, Lt, Gt, Le, Ge };

struct Statement {
  enum class Kind { FreeTriangle, FreePoint, Let, Require, Assert };
  Kind kind = Kind::Let;
  SourcePos pos;
  std::string source;  // raw line, used for report labels

  // FreeTriangle
  std::array<std::string, 3> tri_ids;
  std::vector<Constraint> constraints;

  // FreePoint
  std::string id;
  ExprPtr locus;

  // Let (one or more bound names)
  std::vector<std::string> ids;
  ExprPtr call;

  // Require: bare predicate call, or scalar call compared to a literal
  ExprPtr pred;
  CmpOp cmp = CmpOp::None;
  double rhs = 0.0;
  bool rhs_deg = false;
  bool rhs_is_angle = false;

  // Assert
  ExprPtr assertion;
};

struct SceneAst {
  std::vector<Statement> statements;
  std::string title;   // "# title:" header
  std::string anchor;  // "# paper:" header
};

/// Parses a scene source; identifiers must be declared before use. Throws
/// ParseError on the first offending token; no partial ASTs.
SceneAst parse(const std::string& source);

std::string pretty_print(const SceneAst& ast);

/// Structural equality ignoring source positions and raw text.
bool ast_equal(const SceneAst& a, const SceneAst& b);

}  // namespace trigbash::dsl
