#include "trigbash/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

#include "trigbash/constructions.hpp"
#include "trigbash/lemmas.hpp"
#include "trigbash/sampling.hpp"

namespace trigbash {

namespace {

using dsl::Bindings;
using dsl::Expr;
using dsl::ExprPtr;
using dsl::Scene;
using dsl::Value;

struct FixedState {
  bool have_ref = false;
  Value ref = 0.0;
};

// Residuals are normalized so that every assertion passes at rel_eps:
// areas divide by scale^2, lengths by scale, angle/ratio quantities are
// dimensionless already.
double assertion_residual(const ExprPtr& a, const Bindings& b, double scale,
                          FixedState* fixed_state) {
  auto pt = [&](size_t i) { return std::get<Point>(dsl::eval_expr(a->args[i], b)); };
  auto ln = [&](size_t i) { return std::get<Line>(dsl::eval_expr(a->args[i], b)); };
  auto cl = [&](size_t i) { return std::get<Circle>(dsl::eval_expr(a->args[i], b)); };
  const std::string& n = a->name;

  if (n == "collinear") {
    double worst = 0.0;
    std::vector<Point> pts;
    for (size_t i = 0; i < a->args.size(); ++i) pts.push_back(pt(i));
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k)
          worst = std::max(worst, std::abs(signed_area(pts[i], pts[j], pts[k])));
    return worst / (scale * scale);
  }
  if (n == "concyclic") {
    Circle c = circumcircle(pt(0), pt(1), pt(2));
    return std::abs(dist(pt(3), c.center) - c.radius) / scale;
  }
  if (n == "concurrent") {
    Point p = line_line_intersect(ln(0), ln(1));
    return std::abs(ln(2).signed_dist(p)) / scale;
  }
  if (n == "perpendicular") return std::abs(ln(0).normal().dot(ln(1).normal()));
  if (n == "parallel") return std::abs(cross2(ln(0).normal(), ln(1).normal()));
  if (n == "on_circle") {
    Circle c = cl(1);
    return std::abs(dist(pt(0), c.center) - c.radius) / scale;
  }
  if (n == "on_line") return std::abs(ln(1).signed_dist(pt(0))) / scale;
  if (n == "tangent") {
    Value first = dsl::eval_expr(a->args[0], b);
    Circle c = cl(1);
    if (const Line* l = std::get_if<Line>(&first))
      return std::abs(std::abs(l->signed_dist(c.center)) - c.radius) / scale;
    const Circle& c1 = std::get<Circle>(first);
    double d = dist(c1.center, c.center);
    return std::min(std::abs(d - (c1.radius + c.radius)),
                    std::abs(d - std::abs(c1.radius - c.radius))) /
           scale;
  }
  if (n == "equal_length") return std::abs(dist(pt(0), pt(1)) - dist(pt(2), pt(3))) / scale;
  if (n == "equal_angle")
    return std::abs(angle_at(pt(0), pt(1), pt(2)).radians - angle_at(pt(3), pt(4), pt(5)).radians);
  if (n == "ratio_equals")
    return std::abs(directed_ratio(pt(0), pt(1), pt(2)) - a->args[3]->number);
  if (n == "midpoint_of") return dist(pt(0), midpoint(pt(1), pt(2))) / scale;
  if (n == "fixed") {
    Value v = dsl::eval_expr(a->args[0], b);
    if (!fixed_state->have_ref) {
      fixed_state->ref = v;
      fixed_state->have_ref = true;
      return 0.0;
    }
    if (const Point* p = std::get_if<Point>(&v))
      return dist(*p, std::get<Point>(fixed_state->ref)) / scale;
    double ref = std::get<double>(fixed_state->ref);
    return std::abs(std::get<double>(v) - ref) / std::max(1.0, std::abs(ref));
  }
  throw GeomError(ErrKind::BadArgument, "unknown assertion kind '" + n + "'");
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Report run(const Scene& scene, const RunConfig& cfg) {
  cfg.tol.validate();
  if (cfg.trials < 1) throw GeomError(ErrKind::BadArgument, "trials must be >= 1");
  Report rep;
  rep.cfg = cfg;
  rep.title = scene.title;
  rep.anchor = scene.anchor;
  rep.trials = cfg.trials;

  const auto& stmts = scene.ast.statements;
  std::vector<const dsl::Statement*> asserts;
  for (int idx : scene.assert_stmts) asserts.push_back(&stmts[static_cast<size_t>(idx)]);
  rep.assertions.resize(asserts.size());
  std::vector<FixedState> fixed_states(asserts.size());
  for (size_t k = 0; k < asserts.size(); ++k) {
    rep.assertions[k].label = asserts[k]->source;
    rep.assertions[k].kind = asserts[k]->assertion->name;
  }

  // `fixed` assertions pin the triangle frame once per run, canonically
  // placed (similarity normalization disabled); only the free point varies.
  std::optional<Triangle> frame;
  bool any_fixed = false;
  for (const auto* st : asserts) any_fixed = any_fixed || st->assertion->name == "fixed";
  if (any_fixed) {
    Rng frame_rng(mix_seed(cfg.seed, 0x46524d45));
    frame = sample_triangle(scene.tri_constraints, frame_rng, /*apply_similarity=*/false);
  }

  const double thr = cfg.tol.rel_eps;
  long judged = 0;
  const long discard_cap = 10L * cfg.trials;
  bool discard_overflow = false;
  std::vector<double> residuals(asserts.size());

  for (uint64_t i = 0; judged + rep.degenerate_count < cfg.trials; ++i) {
    uint64_t trial_seed = mix_seed(cfg.seed, i);
    dsl::EvalOutcome out = dsl::evaluate(scene, trial_seed, frame);
    if (!out.ok()) {
      ++rep.degenerate_count;
      continue;
    }
    const Bindings& b = *out.bindings;
    double scale = b.scene_scale;
    bool degenerate = false, gray = false;
    for (size_t k = 0; k < asserts.size() && !degenerate; ++k) {
      try {
        residuals[k] = assertion_residual(asserts[k]->assertion, b, scale, &fixed_states[k]);
      } catch (const GeomError&) {
        degenerate = true;
      }
      if (!degenerate && residuals[k] >= cfg.gray_lo * thr && residuals[k] <= cfg.gray_hi * thr)
        gray = true;
    }
    if (degenerate) {
      ++rep.degenerate_count;
      continue;
    }
    if (gray) {
      ++rep.discarded_count;
      if (rep.discarded_count > discard_cap) {
        discard_overflow = true;
        break;
      }
      continue;
    }
    ++judged;
    for (size_t k = 0; k < asserts.size(); ++k) {
      AssertionReport& ar = rep.assertions[k];
      if (residuals[k] < cfg.gray_lo * thr) ++ar.pass_count;
      else ++ar.fail_count;
      if (!ar.has_witness || residuals[k] > ar.worst_residual) {
        ar.worst_residual = residuals[k];
        ar.witness_seed = trial_seed;
        ar.witness_digest = dsl::bindings_digest(b);
        ar.has_witness = true;
      }
    }
  }

  for (AssertionReport& ar : rep.assertions) ar.excluded = rep.degenerate_count;

  bool any_fail = false;
  for (const AssertionReport& ar : rep.assertions) any_fail = any_fail || ar.fail_count > 0;
  if (any_fail) rep.verdict = Verdict::Fail;
  else if (discard_overflow ||
           rep.degenerate_count > cfg.max_degenerate_ratio * cfg.trials)
    rep.verdict = Verdict::Inconclusive;
  else rep.verdict = Verdict::Pass;
  return rep;
}

std::string serialize_report(const Report& rep, const std::string& scene_path) {
  nlohmann::ordered_json j;
  j["tool"] = "trigbash";
  j["version"] = "0.1.0";
  j["config"] = {
      {"trials", rep.cfg.trials},
      {"seed", rep.cfg.seed},
      {"rel_eps", rep.cfg.tol.rel_eps},
      {"abs_floor", rep.cfg.tol.abs_floor},
      {"max_degenerate_ratio", rep.cfg.max_degenerate_ratio},
      {"gray_band", {rep.cfg.gray_lo, rep.cfg.gray_hi}},
  };
  j["scene"] = {{"path", scene_path}, {"title", rep.title}, {"anchor", rep.anchor}};
  j["trials"] = rep.trials;
  j["degenerate"] = rep.degenerate_count;
  j["discarded"] = rep.discarded_count;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AssertionReport& ar : rep.assertions) {
    nlohmann::ordered_json a;
    a["label"] = ar.label;
    a["kind"] = ar.kind;
    a["pass"] = ar.pass_count;
    a["fail"] = ar.fail_count;
    a["excluded"] = ar.excluded;
    a["worst_residual"] = ar.worst_residual;
    if (ar.has_witness) {
      a["witness"] = {{"seed", ar.witness_seed}, {"digest", ar.witness_digest}};
    } else {
      a["witness"] = nullptr;
    }
    arr.push_back(std::move(a));
  }
  j["assertions"] = std::move(arr);
  j["verdict"] = verdict_name(rep.verdict);
  return j.dump(2) + "\n";
}

}  // namespace trigbash
