#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxangle/candidates.hpp"
#include "maxangle/geometry.hpp"

// Potential-exterior-angle bookkeeping. Every internal point p carries n-1
// angular wedges cut by the rays toward all other points. For each maximal
// arc, the wedge toward the arc's viewpoint at the winner's tightest reflex
// vertex goes into a pot; the pot's maximum wedge measure m yields the
// candidate-family guarantee max interior angle <= 2pi - m.

namespace maxangle {

// Half-open wedge membership tolerance (radians).
inline constexpr double kWedgeTol = 1e-12;

struct PeaFan {
  int vertex = -1;                 // internal point index
  std::vector<double> ray_angles;  // sorted CCW, size n-1
  std::vector<int> ray_targets;    // point index behind each ray

  int wedge_count() const { return static_cast<int>(ray_angles.size()); }
  // Measure of wedge w, spanning [ray w, ray w+1) cyclically.
  double wedge_measure(int w) const;
  // Wedge whose half-open interval [start, end) contains the direction,
  // with kWedgeTol slack at the boundaries.
  int locate(double angle) const;
  // Closed-wedge membership with tolerance, for endpoint checks.
  bool contains_closed(int w, double angle, double tol = kWedgeTol) const;
};

// The n-1 wedges at internal point p. Throws std::invalid_argument when p
// is extremal.
PeaFan pea_fan(const PointSet& s, int p);

struct PotRecord {
  int arc_index = -1;
  int phi_vertex = -1;  // s: vertex of the minimum exterior angle
  int phi_wedge = -1;   // wedge at s containing the direction toward d
  double phi_measure = 0.0;
  double min_exterior = 0.0;  // smallest exterior angle of P(d)
};

// Identifies phi(d) for one arc: s is the vertex of minimum exterior angle
// of P (ties to the least point index), phi the wedge at s containing the
// direction from s to the arc's representative. Throws
// std::invalid_argument when P has no reflex vertex (convex input).
PotRecord phi_of_arc(const PointSet& s, int arc_index, const ArcInterval& arc,
                     const Polygonization& p);

struct Property1Result {
  bool pass = true;
  std::string detail;  // violated endpoint / measure on failure
};

// Property 1: the whole arc lies inside the wedge phi (both endpoint
// directions within its closure) and arc measure <= 2 * phi measure.
Property1Result verify_property1(const PointSet& s, const Circle& c, const ArcInterval& arc,
                                 const PotRecord& rec);

struct TheoremReport {
  std::vector<PotRecord> records;             // one per usable arc
  std::vector<std::pair<int, int>> distinct_peas;  // (vertex, wedge), sorted
  long pot_bound = 0;          // (n-1)(n-x)
  double m = 0.0;              // max phi measure over the pot
  double m_lower_bound = 0.0;  // pi / ((n-1)(n-x))
  double best_max_angle = 0.0;
  double bound = 0.0;  // 2pi - m_lower_bound

  bool property1_ok = false;
  bool property2_ok = false;       // phi <= min exterior per record
  bool pot_size_ok = false;        // |distinct_peas| <= pot_bound
  bool pot_inequality_ok = false;  // 2pi <= 2m (n-1)(n-x)
  bool group_sums_ok = false;      // per-pea arc-measure totals <= 2 * measure
  bool best_within_m_ok = false;   // best max angle <= 2pi - m
  bool bound_ok = false;           // best max angle <= bound
  bool pass = false;
  std::string first_failure;
};

// Runs the whole verification over every usable arc. Throws
// std::invalid_argument for convex-position input (no internal points).
TheoremReport verify_theorem(const PointSet& s, const CandidateSet& cs, int workers = 1);
TheoremReport verify_theorem(const PointSet& s, int workers = 1);

}  // namespace maxangle
