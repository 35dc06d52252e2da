#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "maxangle/candidates.hpp"
#include "maxangle/oracle.hpp"
#include "maxangle/pea.hpp"

// JSON run reports with stable key names and order. Angle-valued numbers
// are rounded to 12 significant digits so identical runs serialize to
// identical bytes.

namespace maxangle {

using Json = nlohmann::ordered_json;

double round_sig(double v, int digits = 12);

struct ReportOptions {
  bool degrees = false;
  std::string label;
};

// Angle in report units (radians unless degrees requested), rounded.
double report_angle(double radians, const ReportOptions& opt);

Json input_block(const PointSet& s, const ReportOptions& opt);
Json circle_block(const Circle& c, const ReportOptions& opt);
Json arcs_block(const CandidateSet& cs, const ReportOptions& opt);
Json candidates_block(const CandidateSet& cs);
Json best_block(const PointSet& s, const CandidateSet& cs, const ReportOptions& opt);

// Theorem block; pass nullptr for a pipeline-only run (verdicts "not-run").
Json theorem_block(const PointSet& s, const CandidateSet& cs, const TheoremReport* rep,
                   const ReportOptions& opt);

Json oracle_block(const OracleResult& res, int limit, const ReportOptions& opt);

Json timings_block(const std::map<std::string, double>& stage_ms);

std::string dump_report(const Json& report);

}  // namespace maxangle
