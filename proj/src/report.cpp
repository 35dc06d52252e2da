#include "maxangle/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace maxangle {

namespace {

constexpr double kPi = std::numbers::pi;

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

double round_sig(double v, int digits) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

double report_angle(double radians, const ReportOptions& opt) {
  return round_sig(opt.degrees ? radians * 180.0 / kPi : radians);
}

Json input_block(const PointSet& s, const ReportOptions& opt) {
  Json j;
  if (!opt.label.empty()) j["label"] = opt.label;
  j["n"] = s.n();
  j["x_count"] = s.x_count();
  j["internal_count"] = static_cast<int>(s.internal.size());
  j["convex_position"] = s.convex_position();
  return j;
}

Json circle_block(const Circle& c, const ReportOptions&) {
  Json j;
  j["center"] = {round_sig(c.center.x), round_sig(c.center.y)};
  j["radius"] = round_sig(c.radius);
  j["support"] = c.support;
  return j;
}

Json arcs_block(const CandidateSet& cs, const ReportOptions& opt) {
  double sum = 0.0;
  for (const ArcInterval& a : cs.arcs) sum += a.measure;
  Json j;
  j["count"] = static_cast<int>(cs.arcs.size());
  j["measure_sum"] = report_angle(sum, opt);
  j["merged_cut_points"] = cs.merged_cut_points;
  j["unusable"] = cs.unusable_arcs;
  return j;
}

Json candidates_block(const CandidateSet& cs) {
  Json j;
  j["total"] = static_cast<int>(cs.arcs.size()) - cs.unusable_arcs;
  j["distinct"] = static_cast<int>(cs.distinct.size());
  return j;
}

Json best_block(const PointSet&, const CandidateSet& cs, const ReportOptions& opt) {
  const Polygonization& best = cs.best_poly();
  Json j;
  j["order"] = best.canonical;
  j["max_angle"] = report_angle(best.max_angle, opt);
  j["max_vertex"] = best.max_vertex;
  j["reflex_count"] = best.reflex_count;
  return j;
}

Json theorem_block(const PointSet& s, const CandidateSet& cs, const TheoremReport* rep,
                   const ReportOptions& opt) {
  Json j;
  const bool applicable = !s.convex_position();
  j["applicable"] = applicable;
  if (!applicable) {
    j["note"] = "convex position: the hull is a convex polygonization";
    j["verdicts"] = Json::object();
    return j;
  }
  j["bound"] = report_angle(theorem_bound(s.n(), s.x_count()), opt);
  const double best_max = cs.best_poly().max_angle;
  Json verdicts;
  verdicts["theorem_bound"] =
      verdict(best_max <= theorem_bound(s.n(), s.x_count()) + kAngleTol);
  if (rep) {
    j["m"] = report_angle(rep->m, opt);
    j["m_lower_bound"] = report_angle(rep->m_lower_bound, opt);
    j["pot_distinct"] = static_cast<int>(rep->distinct_peas.size());
    j["pot_bound"] = rep->pot_bound;
    verdicts["property1"] = verdict(rep->property1_ok);
    verdicts["property2"] = verdict(rep->property2_ok);
    verdicts["pot_size"] = verdict(rep->pot_size_ok);
    verdicts["pot_inequality"] = verdict(rep->pot_inequality_ok);
    verdicts["group_sums"] = verdict(rep->group_sums_ok);
    verdicts["best_within_m"] = verdict(rep->best_within_m_ok);
    if (!rep->pass) j["first_failure"] = rep->first_failure;
  } else {
    for (const char* key :
         {"property1", "property2", "pot_size", "pot_inequality", "group_sums", "best_within_m"})
      verdicts[key] = "not-run";
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

Json oracle_block(const OracleResult& res, int limit, const ReportOptions& opt) {
  Json j;
  j["limit"] = limit;
  j["num_simple"] = res.num_simple;
  j["minmax_angle"] = report_angle(res.minmax_angle, opt);
  j["argmin"] = res.argmin;
  j["conjecture_bound"] = report_angle(res.conjecture_bound, opt);
  if (res.theorem_applies) j["theorem_bound"] = report_angle(res.theorem_bound, opt);
  j["verdicts"] = {{"conjecture", verdict(res.satisfies_conjecture)}};
  return j;
}

Json timings_block(const std::map<std::string, double>& stage_ms) {
  Json j;
  for (const auto& [stage, ms] : stage_ms) j[stage] = round_sig(ms, 6);
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace maxangle
