#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "trigbash/svg.hpp"
#include "trigbash/verifier.hpp"

namespace fs = std::filesystem;
using namespace trigbash;

namespace {

constexpr uint64_t kDefaultSeed = 1729;

uint64_t env_seed() {
  if (const char* s = std::getenv("TRIGBASH_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      std::cerr << "warning: ignoring malformed TRIGBASH_SEED\n";
    }
  }
  return kDefaultSeed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 0 pass, 1 fail, 2 inconclusive, 3 parse/resolve error
struct SceneRun {
  int exit_code = 3;
  std::string line;   // one-line summary
  Report report;
  bool has_report = false;
};

SceneRun run_scene_file(const fs::path& path, const RunConfig& cfg) {
  SceneRun r;
  std::string name = path.filename().string();
  try {
    dsl::SceneAst ast = dsl::parse(read_file(path.string()));
    dsl::Scene scene = dsl::resolve(ast);
    r.report = run(scene, cfg);
    r.has_report = true;
    std::ostringstream os;
    const char* v = verdict_name(r.report.verdict);
    double worst = 0.0;
    for (const auto& a : r.report.assertions) worst = std::max(worst, a.worst_residual);
    os << (r.report.verdict == Verdict::Pass ? "PASS" : r.report.verdict == Verdict::Fail ? "FAIL" : "INCONCLUSIVE")
       << " " << name;
    if (!scene.anchor.empty()) os << " [" << scene.anchor << "]";
    os << " trials=" << r.report.trials << " degenerate=" << r.report.degenerate_count
       << " discarded=" << r.report.discarded_count << " worst=" << worst << " verdict=" << v;
    r.line = os.str();
    r.exit_code = r.report.verdict == Verdict::Pass ? 0 : r.report.verdict == Verdict::Fail ? 1 : 2;
  } catch (const dsl::ParseError& e) {
    std::ostringstream os;
    os << "ERROR " << name << ": parse error at " << e.line << ":" << e.column << ": "
       << e.message;
    r.line = os.str();
    r.exit_code = 3;
  } catch (const dsl::ResolveError& e) {
    std::ostringstream os;
    os << "ERROR " << name << ": resolve error at " << e.line << ":" << e.column << ": "
       << e.message;
    r.line = os.str();
    r.exit_code = 3;
  } catch (const std::exception& e) {
    r.line = "ERROR " + name + ": " + e.what();
    r.exit_code = 3;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigbash: randomized verification of plane-geometry scenes"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "verify one scene file");
  std::string check_path, report_path;
  RunConfig check_cfg;
  check_cfg.seed = env_seed();
  check->add_option("scene", check_path, "scene file (.geo)")->required();
  check->add_option("--trials", check_cfg.trials, "number of sampled trials");
  check->add_option("--seed", check_cfg.seed, "base seed (overrides TRIGBASH_SEED)");
  check->add_option("--tol", check_cfg.tol.rel_eps, "relative tolerance");
  check->add_option("--gray-lo", check_cfg.gray_lo, "lower edge of the discard band");
  check->add_option("--gray-hi", check_cfg.gray_hi, "upper edge of the discard band");
  check->add_option("--report", report_path, "write a JSON report here");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "verify every corpus scene");
  std::string corpus_dir = "corpus", filter;
  int jobs = 1;
  RunConfig corpus_cfg;
  corpus_cfg.seed = env_seed();
  corpus->add_option("--corpus-dir", corpus_dir, "directory with .geo scenes");
  corpus->add_option("--filter", filter, "only run entries whose path/title/anchor contains this");
  corpus->add_option("--trials", corpus_cfg.trials, "trials per scene");
  corpus->add_option("--seed", corpus_cfg.seed, "base seed");
  corpus->add_option("--jobs", jobs, "parallel scene verifications");

  // render
  auto* render = app.add_subcommand("render", "render one scene instantiation to SVG");
  std::string render_path, out_path = "scene.svg";
  uint64_t render_seed = env_seed();
  render->add_option("scene", render_path, "scene file (.geo)")->required();
  render->add_option("--seed", render_seed, "base seed");
  render->add_option("--out", out_path, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  auto usage_ok = [](const RunConfig& cfg) {
    try {
      cfg.tol.validate();
      return cfg.trials >= 1;
    } catch (const GeomError& e) {
      std::cerr << e.what() << "\n";
      return false;
    }
  };

  if (check->parsed()) {
    if (!usage_ok(check_cfg)) return 64;
    if (!fs::is_regular_file(check_path)) {
      std::cerr << "no such scene file: " << check_path << "\n";
      return 64;
    }
    SceneRun r = run_scene_file(check_path, check_cfg);
    std::cout << r.line << "\n";
    if (!report_path.empty() && r.has_report) {
      std::ofstream out(report_path, std::ios::binary);
      out << serialize_report(r.report, check_path);
    }
    return r.exit_code;
  }

  if (corpus->parsed()) {
    if (!usage_ok(corpus_cfg)) return 64;
    std::vector<fs::path> entries;
    std::error_code ec;
    for (const auto& de : fs::directory_iterator(corpus_dir, ec))
      if (de.is_regular_file() && de.path().extension() == ".geo") entries.push_back(de.path());
    if (ec) {
      std::cerr << "cannot read corpus directory " << corpus_dir << "\n";
      return 64;
    }
    std::sort(entries.begin(), entries.end());
    if (!filter.empty()) {
      std::vector<fs::path> kept;
      for (const auto& p : entries) {
        std::string hay = p.string();
        try {
          dsl::SceneAst ast = dsl::parse(read_file(p.string()));
          hay += "\n" + ast.title + "\n" + ast.anchor;
        } catch (...) {
        }
        if (hay.find(filter) != std::string::npos) kept.push_back(p);
      }
      entries = std::move(kept);
    }
    if (entries.empty()) {
      std::cerr << "no corpus entries matched\n";
      return 64;
    }
    std::vector<SceneRun> runs(entries.size());
    if (jobs <= 1) {
      for (size_t i = 0; i < entries.size(); ++i) runs[i] = run_scene_file(entries[i], corpus_cfg);
    } else {
      std::vector<std::future<SceneRun>> futs;
      for (const auto& p : entries)
        futs.push_back(std::async(std::launch::async, run_scene_file, p, corpus_cfg));
      for (size_t i = 0; i < futs.size(); ++i) runs[i] = futs[i].get();
    }
    int worst = 0;
    for (const SceneRun& r : runs) {  // entries pre-sorted by path
      std::cout << r.line << "\n";
      worst = std::max(worst, r.exit_code);
    }
    return worst == 0 ? 0 : worst;
  }

  if (render->parsed()) {
    try {
      dsl::SceneAst ast = dsl::parse(read_file(render_path));
      dsl::Scene scene = dsl::resolve(ast);
      std::string svg = render_svg(scene, render_seed);
      std::ofstream out(out_path, std::ios::binary);
      out << svg;
      std::cout << "wrote " << out_path << "\n";
      return 0;
    } catch (const dsl::ParseError& e) {
      std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.message << "\n";
      return 3;
    } catch (const dsl::ResolveError& e) {
      std::cerr << "resolve error at " << e.line << ":" << e.column << ": " << e.message << "\n";
      return 3;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 64;
}
