#pragma once

#include <cstring>
#include <optional>
#include <string>

namespace trigbash::dsl {

// Argument codes: p point, l line, c circle,
//   s scalar (scalar expr, number or angle literal),
//   a angle (scalar expr or suffixed angle literal; bare numbers rejected),
//   n number literal, w center-kind word, m parallel/perpendicular word,
//   v vertex identifier (must name one of the first three args),
//   k curve (line or circle), o objective (scalar expr, '@' holes allowed).
// A trailing '*' makes the signature variadic in its single repeated code.
struct OpSig {
  const char* name;
  const char* args;
  const char* results;  // value results; "b" marks a require-predicate
};

inline const OpSig* find_op(const std::string& name) {
  static const OpSig table[] = {
      {"line", "pp", "l"},
      {"circle", "pp", "c"},
      {"midpoint", "pp", "p"},
      {"perp_bisector", "pp", "l"},
      {"foot", "pl", "p"},
      {"reflect", "pl", "p"},
      {"antipode", "pc", "p"},
      {"closest_point", "cp", "p"},
      {"through", "plm", "l"},
      {"line_line_intersect", "ll", "p"},
      {"second_intersection", "lcp", "p"},
      {"circumcircle", "ppp", "c"},
      {"incircle", "ppp", "cppp"},
      {"excircle", "pppv", "cppp"},
      {"triangle_center", "pppw", "p"},
      {"arc_midpoint", "cppp", "p"},
      {"tangent_line", "cp", "l"},
      {"tangents_from", "cp", "pp"},
      {"isogonal_line", "pppl", "l"},
      {"rotate_ray", "ppan", "l"},
      {"rotate_point", "ppan", "p"},
      {"mixtilinear_incircle", "ppp", "cppp"},
      {"solve_on_curve", "kppo", "p"},
      {"dist", "pp", "s"},
      {"angle_at", "ppp", "s"},
      {"directed_ratio", "ppp", "s"},
      {"signed_area", "ppp", "s"},
      {"angle_difference", "pppppp", "s"},
      // require-predicates
      {"is_collinear", "ppp*", "b"},
      {"is_concyclic", "pppp", "b"},
      {"is_perpendicular", "ll", "b"},
      {"is_parallel", "ll", "b"},
      {"convex", "ppp*", "b"},
      {"inside", "pppp*", "b"},
  };
  for (const OpSig& op : table)
    if (name == op.name) return &op;
  return nullptr;
}

// Assertion vocabulary; `fixed` is type-checked separately.
inline const OpSig* find_assertion(const std::string& name) {
  static const OpSig table[] = {
      {"collinear", "ppp*", ""},
      {"concyclic", "pppp", ""},
      {"concurrent", "lll", ""},
      {"perpendicular", "ll", ""},
      {"parallel", "ll", ""},
      {"on_circle", "pc", ""},
      {"on_line", "pl", ""},
      {"tangent", "?c", ""},  // line or circle first
      {"equal_length", "pppp", ""},
      {"equal_angle", "pppppp", ""},
      {"ratio_equals", "pppn", ""},
      {"midpoint_of", "ppp", ""},
      {"fixed", "?f", ""},
  };
  for (const OpSig& op : table)
    if (name == op.name) return &op;
  return nullptr;
}

inline const char* center_kind_words[] = {"centroid", "circumcenter", "incenter",
                                          "orthocenter", "symmedian_point"};

}  // namespace trigbash::dsl
