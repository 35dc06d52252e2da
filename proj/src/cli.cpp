#include "maxangle/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxangle/candidates.hpp"
#include "maxangle/oracle.hpp"
#include "maxangle/pea.hpp"
#include "maxangle/pointset_io.hpp"
#include "maxangle/report.hpp"
#include "maxangle/svg.hpp"

namespace maxangle {

namespace {

struct CommonOpts {
  std::string input;
  std::string report_path;
  std::string witness_path = "maxangle_violation.json";
  int parallel = 1;
  bool degrees = false;
  bool timings = false;
};

class StageClock {
 public:
  explicit StageClock(bool enabled) : enabled_(enabled) {}

  template <typename F>
  auto time(const std::string& stage, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, t0);
    } else {
      auto result = f();
      record(stage, t0);
      return result;
    }
  }

  const std::map<std::string, double>& stages() const { return stages_; }
  bool enabled() const { return enabled_; }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point t0) {
    if (!enabled_) return;
    const auto dt = std::chrono::steady_clock::now() - t0;
    stages_[stage] = std::chrono::duration<double, std::milli>(dt).count();
  }

  bool enabled_;
  std::map<std::string, double> stages_;
};

void warn_unusable(const CandidateSet& cs) {
  if (cs.unusable_arcs > 0)
    std::cerr << "warning: " << cs.unusable_arcs
              << " arc(s) had no margin-clearing representative and were skipped\n";
}

void emit_report(const Json& report, const CommonOpts& opt) {
  const std::string text = dump_report(report);
  if (opt.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.report_path);
    if (!out) throw std::invalid_argument("cannot write report: " + opt.report_path);
    out << text;
  }
}

// A failed mathematical verdict always leaves a witness file behind.
void write_witness(const CommonOpts& opt, const PointSetFile& file, const Json& report) {
  Json w;
  w["reason"] = "mathematical verdict failed";
  w["label"] = file.label;
  auto& pts = w["points"] = Json::array();
  for (const Point& p : file.points)
    pts.push_back({coordinate_to_string(p.x), coordinate_to_string(p.y)});
  w["report"] = report;
  std::ofstream out(opt.witness_path);
  if (out) out << dump_report(w);
  std::cerr << "verdict failed; witness written to " << opt.witness_path << "\n";
}

int oracle_limit_default() {
  if (const char* env = std::getenv("MAXANGLE_ORACLE_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MAXANGLE_ORACLE_LIMIT is not an integer");
    }
  }
  return kDefaultOracleLimit;
}

ReportOptions report_options(const CommonOpts& opt, const PointSetFile& file) {
  ReportOptions ro;
  ro.degrees = opt.degrees;
  ro.label = file.label;
  return ro;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("--input", opt.input, "point-set JSON file")->required();
  cmd->add_option("--report", opt.report_path, "write the JSON report here instead of stdout");
  cmd->add_option("--witness", opt.witness_path, "witness file for failed verdicts");
  cmd->add_option("--parallel", opt.parallel, "worker threads (results are identical for any N)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--degrees", opt.degrees, "report angles in degrees");
  cmd->add_flag("--timings", opt.timings,
                "add per-stage timings to the report (breaks byte-reproducibility)");
}

int cmd_polygonize(const CommonOpts& opt, const std::string& svg_path) {
  StageClock clock(opt.timings);
  const PointSetFile file = read_point_file(opt.input);
  const PointSet s = clock.time("validate", [&] { return PointSet::create(file.points); });
  const CandidateSet cs = clock.time("candidates", [&] { return candidate_set(s, opt.parallel); });
  warn_unusable(cs);

  const ReportOptions ro = report_options(opt, file);
  Json report;
  report["input"] = input_block(s, ro);
  report["circle"] = circle_block(cs.circle, ro);
  report["arcs"] = arcs_block(cs, ro);
  report["candidates"] = candidates_block(cs);
  report["best"] = best_block(s, cs, ro);
  report["theorem"] = theorem_block(s, cs, nullptr, ro);
  report["angle_unit"] = opt.degrees ? "degrees" : "radians";
  if (clock.enabled()) report["timings_ms"] = timings_block(clock.stages());

  if (!svg_path.empty()) write_svg(render_svg(s, cs, nullptr, file.label), svg_path);
  emit_report(report, opt);

  const bool bound_ok = s.convex_position() ||
                        cs.best_poly().max_angle <= theorem_bound(s.n(), s.x_count()) + kAngleTol;
  if (!bound_ok) {
    write_witness(opt, file, report);
    return 1;
  }
  return 0;
}

int cmd_verify(const CommonOpts& opt, const std::string& svg_path) {
  StageClock clock(opt.timings);
  const PointSetFile file = read_point_file(opt.input);
  const PointSet s = clock.time("validate", [&] { return PointSet::create(file.points); });
  const CandidateSet cs = clock.time("candidates", [&] { return candidate_set(s, opt.parallel); });
  warn_unusable(cs);

  std::optional<TheoremReport> rep;
  if (!s.convex_position())
    rep = clock.time("verify", [&] { return verify_theorem(s, cs, opt.parallel); });

  const ReportOptions ro = report_options(opt, file);
  Json report;
  report["input"] = input_block(s, ro);
  report["circle"] = circle_block(cs.circle, ro);
  report["arcs"] = arcs_block(cs, ro);
  report["candidates"] = candidates_block(cs);
  report["best"] = best_block(s, cs, ro);
  report["theorem"] = theorem_block(s, cs, rep ? &*rep : nullptr, ro);
  report["angle_unit"] = opt.degrees ? "degrees" : "radians";
  if (clock.enabled()) report["timings_ms"] = timings_block(clock.stages());

  if (!svg_path.empty()) write_svg(render_svg(s, cs, rep ? &*rep : nullptr, file.label), svg_path);
  emit_report(report, opt);

  if (rep && !rep->pass) {
    write_witness(opt, file, report);
    return 1;
  }
  return 0;
}

int cmd_oracle(const CommonOpts& opt, int limit) {
  StageClock clock(opt.timings);
  const PointSetFile file = read_point_file(opt.input);
  const PointSet s = clock.time("validate", [&] { return PointSet::create(file.points); });
  const OracleResult res =
      clock.time("oracle", [&] { return oracle_minmax(s, limit, opt.parallel); });

  const ReportOptions ro = report_options(opt, file);
  Json report;
  report["input"] = input_block(s, ro);
  report["oracle"] = oracle_block(res, limit, ro);
  report["angle_unit"] = opt.degrees ? "degrees" : "radians";
  if (clock.enabled()) report["timings_ms"] = timings_block(clock.stages());
  emit_report(report, opt);

  if (!res.satisfies_conjecture) {
    write_witness(opt, file, report);
    return 1;
  }
  return 0;
}

int cmd_bound(int n, int x, bool degrees) {
  const double bound = theorem_bound(n, x);
  ReportOptions ro;
  ro.degrees = degrees;
  Json report;
  report["n"] = n;
  report["x"] = x;
  report["bound"] = report_angle(bound, ro);
  report["angle_unit"] = degrees ? "degrees" : "radians";
  std::cout << dump_report(report);
  return 0;
}

int cmd_gen(const PointSetFile& file, const std::string& out_path) {
  write_point_file(file, out_path);
  Json report;
  report["written"] = out_path;
  report["label"] = file.label;
  report["n"] = static_cast<int>(file.points.size());
  std::cout << dump_report(report);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"min-max interior angle polygonization toolkit"};
  app.require_subcommand(1);

  CommonOpts opt;

  auto* polygonize =
      app.add_subcommand("polygonize", "build candidates, pick the min-max-angle winner");
  std::string svg_path;
  add_common(polygonize, opt);
  polygonize->add_option("--svg", svg_path, "write an SVG figure");

  auto* verify = app.add_subcommand("verify", "full bound verification (properties 1 and 2)");
  add_common(verify, opt);
  verify->add_option("--svg", svg_path, "write an SVG figure");

  auto* oracle = app.add_subcommand("oracle", "exhaustive min-max over all polygonizations");
  add_common(oracle, opt);
  int limit = -1;
  oracle->add_option("--limit", limit, "max n for enumeration (env MAXANGLE_ORACLE_LIMIT)");

  auto* conjecture = app.add_subcommand("conjecture", "check minmax <= 2pi - 2pi/(n-1)");
  add_common(conjecture, opt);
  conjecture->add_option("--limit", limit, "max n for enumeration (env MAXANGLE_ORACLE_LIMIT)");

  auto* bound = app.add_subcommand("bound", "print the bound 2pi - pi/((n-1)(n-x))");
  int bound_n = 0, bound_x = 0;
  bool bound_degrees = false;
  bound->add_option("--n", bound_n, "number of points")->required();
  bound->add_option("--x", bound_x, "number of extremal points")->required();
  bound->add_flag("--degrees", bound_degrees, "report in degrees");

  auto* gen = app.add_subcommand("gen", "point-set generators");
  gen->require_subcommand(1);
  auto* gen_rand = gen->add_subcommand("random", "uniform general-position points");
  int rand_n = 0;
  std::uint64_t rand_seed = 0;
  std::string gen_out;
  std::vector<double> bbox_vals;
  gen_rand->add_option("--n", rand_n, "number of points")->required();
  gen_rand->add_option("--seed", rand_seed, "RNG seed")->required();
  gen_rand->add_option("--out", gen_out, "output point file")->required();
  gen_rand->add_option("--bbox", bbox_vals, "min_x min_y max_x max_y (default unit box)")
      ->expected(4);
  auto* gen_star_cmd = gen->add_subcommand("star", "m unit-circle points plus the center");
  int star_m = 0;
  gen_star_cmd->add_option("--m", star_m, "ring size (odd, >= 3)")->required();
  gen_star_cmd->add_option("--out", gen_out, "output point file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (polygonize->parsed()) return cmd_polygonize(opt, svg_path);
    if (verify->parsed()) return cmd_verify(opt, svg_path);
    if (oracle->parsed() || conjecture->parsed()) {
      if (limit < 0) limit = oracle_limit_default();
      return cmd_oracle(opt, limit);
    }
    if (bound->parsed()) return cmd_bound(bound_n, bound_x, bound_degrees);
    if (gen_rand->parsed()) {
      Bbox box;
      if (!bbox_vals.empty()) box = {bbox_vals[0], bbox_vals[1], bbox_vals[2], bbox_vals[3]};
      return cmd_gen(gen_random(rand_n, rand_seed, box), gen_out);
    }
    if (gen_star_cmd->parsed()) return cmd_gen(gen_star(star_m), gen_out);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace maxangle
