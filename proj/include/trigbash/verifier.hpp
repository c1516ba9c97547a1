#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigbash/dsl/scene.hpp"
#include "trigbash/geom.hpp"

namespace trigbash {

struct RunConfig {
  int trials = 200;
  uint64_t seed = 1729;
  TolerancePolicy tol{};
  double max_degenerate_ratio = 0.95;
  // near-threshold hygiene: residuals inside [gray_lo, gray_hi] x threshold
  // discard the sample; discards are neither passes nor failures
  double gray_lo = 0.1;
  double gray_hi = 10.0;
};

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

struct AssertionReport {
  std::string label;  // statement source text
  std::string kind;
  long pass_count = 0;
  long fail_count = 0;
  long excluded = 0;  // degenerate exclusions
  double worst_residual = 0.0;
  bool has_witness = false;
  uint64_t witness_seed = 0;
  std::string witness_digest;
};

struct Report {
  RunConfig cfg;
  std::string title, anchor;
  int trials = 0;
  long degenerate_count = 0;
  long discarded_count = 0;
  std::vector<AssertionReport> assertions;
  Verdict verdict = Verdict::Pass;
};

/// Draws cfg.trials seeded samples (per-trial seeds from mix_seed) and judges
/// every assertion on each non-degenerate sample. Deterministic: the same cfg
/// yields an identical Report.
Report run(const dsl::Scene& scene, const RunConfig& cfg);

/// Stable-key JSON document; byte-identical for identical Reports.
std::string serialize_report(const Report& report, const std::string& scene_path);

}  // namespace trigbash
