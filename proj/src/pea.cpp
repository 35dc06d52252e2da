#include "maxangle/pea.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "maxangle/parallel.hpp"

namespace maxangle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double PeaFan::wedge_measure(int w) const {
  const int k = wedge_count();
  return ccw_delta(ray_angles[w], ray_angles[(w + 1) % k]);
}

int PeaFan::locate(double angle) const {
  const double a = norm_angle(angle);
  const int k = wedge_count();
  // Greatest ray angle <= a, wrapping below the first ray.
  auto it = std::upper_bound(ray_angles.begin(), ray_angles.end(), a);
  int w = (it == ray_angles.begin()) ? k - 1 : static_cast<int>(it - ray_angles.begin()) - 1;
  // Half-open wedges: a direction within tolerance of the next ray belongs
  // to the wedge that starts there.
  if (ccw_delta(a, ray_angles[(w + 1) % k]) < kWedgeTol) w = (w + 1) % k;
  return w;
}

bool PeaFan::contains_closed(int w, double angle, double tol) const {
  const double span = wedge_measure(w);
  const double off = ccw_delta(ray_angles[w], norm_angle(angle));
  return off <= span + tol || off >= 2.0 * kPi - tol;
}

PeaFan pea_fan(const PointSet& s, int p) {
  if (!s.is_internal(p))
    throw std::invalid_argument("pea_fan: point " + std::to_string(p) + " is extremal");
  const Vec2 v = to_vec(s.points[p]);
  std::vector<std::pair<double, int>> rays;
  rays.reserve(s.n() - 1);
  for (int q = 0; q < s.n(); ++q) {
    if (q == p) continue;
    const Vec2 w = to_vec(s.points[q]);
    rays.emplace_back(norm_angle(std::atan2(w.y - v.y, w.x - v.x)), q);
  }
  std::sort(rays.begin(), rays.end());
  PeaFan fan;
  fan.vertex = p;
  fan.ray_angles.reserve(rays.size());
  fan.ray_targets.reserve(rays.size());
  for (const auto& [a, q] : rays) {
    fan.ray_angles.push_back(a);
    fan.ray_targets.push_back(q);
  }
  return fan;
}

namespace {

// Vertex of the minimum exterior angle (2pi - interior), ties to the least
// point index.
std::pair<int, double> min_exterior_vertex(const Polygonization& p) {
  int best_vertex = -1;
  double best_ext = 0.0;
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    const double ext = 2.0 * kPi - p.angles[i];
    const int v = p.order[i];
    if (best_vertex < 0 || ext < best_ext || (ext == best_ext && v < best_vertex)) {
      best_vertex = v;
      best_ext = ext;
    }
  }
  return {best_vertex, best_ext};
}

}  // namespace

PotRecord phi_of_arc(const PointSet& s, int arc_index, const ArcInterval& arc,
                     const Polygonization& p) {
  if (p.reflex_count == 0)
    throw std::invalid_argument("phi_of_arc: no reflex vertex (convex input)");
  const auto [vertex, min_ext] = min_exterior_vertex(p);
  if (!s.is_internal(vertex))
    throw std::logic_error("phi_of_arc: minimum exterior angle at an extremal point");

  const PeaFan fan = pea_fan(s, vertex);
  const Vec2 sv = to_vec(s.points[vertex]);
  const double dir =
      std::atan2(arc.representative.y - sv.y, arc.representative.x - sv.x);
  PotRecord rec;
  rec.arc_index = arc_index;
  rec.phi_vertex = vertex;
  rec.phi_wedge = fan.locate(dir);
  rec.phi_measure = fan.wedge_measure(rec.phi_wedge);
  rec.min_exterior = min_ext;
  return rec;
}

Property1Result verify_property1(const PointSet& s, const Circle& c, const ArcInterval& arc,
                                 const PotRecord& rec) {
  Property1Result res;
  const PeaFan fan = pea_fan(s, rec.phi_vertex);
  const Vec2 sv = to_vec(s.points[rec.phi_vertex]);
  for (const double a : {arc.start_angle, arc.end_angle}) {
    const Vec2 e{c.center.x + c.radius * std::cos(a), c.center.y + c.radius * std::sin(a)};
    const double dir = std::atan2(e.y - sv.y, e.x - sv.x);
    if (!fan.contains_closed(rec.phi_wedge, dir)) {
      res.pass = false;
      res.detail = "arc endpoint at angle " + std::to_string(a) +
                   " lies outside wedge " + std::to_string(rec.phi_wedge) + " at vertex " +
                   std::to_string(rec.phi_vertex);
      return res;
    }
  }
  if (arc.measure > 2.0 * rec.phi_measure + kAngleTol) {
    res.pass = false;
    res.detail = "arc measure " + std::to_string(arc.measure) + " exceeds twice phi measure " +
                 std::to_string(rec.phi_measure);
  }
  return res;
}

TheoremReport verify_theorem(const PointSet& s, const CandidateSet& cs, int workers) {
  if (s.convex_position())
    throw std::invalid_argument(
        "verify_theorem: set is in convex position; no internal points, the hull is the answer");

  const int narcs = static_cast<int>(cs.arcs.size());
  std::vector<PotRecord> slots(narcs);
  std::vector<Property1Result> p1(narcs);
  parallel_for(narcs, workers, [&](int i) {
    if (!cs.arcs[i].usable) return;
    const Polygonization& poly = cs.distinct[cs.arc_candidate[i]];
    slots[i] = phi_of_arc(s, i, cs.arcs[i], poly);
    p1[i] = verify_property1(s, cs.circle, cs.arcs[i], slots[i]);
  });

  TheoremReport rep;
  auto fail = [&rep](const std::string& why) {
    if (rep.first_failure.empty()) rep.first_failure = why;
  };

  rep.property1_ok = true;
  rep.property2_ok = true;
  std::map<std::pair<int, int>, double> group_arc_measure;
  std::map<std::pair<int, int>, double> group_phi;
  for (int i = 0; i < narcs; ++i) {
    if (!cs.arcs[i].usable) continue;
    const PotRecord& rec = slots[i];
    rep.records.push_back(rec);
    if (!p1[i].pass) {
      rep.property1_ok = false;
      fail("property 1: " + p1[i].detail);
    }
    if (rec.phi_measure > rec.min_exterior + kAngleTol) {
      rep.property2_ok = false;
      fail("property 2: phi measure exceeds the minimum exterior angle at arc " +
           std::to_string(i));
    }
    const auto key = std::make_pair(rec.phi_vertex, rec.phi_wedge);
    group_arc_measure[key] += cs.arcs[i].measure;
    group_phi[key] = rec.phi_measure;
    rep.m = std::max(rep.m, rec.phi_measure);
  }

  rep.group_sums_ok = true;
  for (const auto& [key, total] : group_arc_measure) {
    rep.distinct_peas.push_back(key);
    if (total > 2.0 * group_phi[key] + kAngleTol) {
      rep.group_sums_ok = false;
      fail("grouped arc measures exceed twice the pea measure at vertex " +
           std::to_string(key.first));
    }
  }

  const long n = s.n(), x = s.x_count();
  rep.pot_bound = (n - 1) * (n - x);
  rep.m_lower_bound = kPi / static_cast<double>(rep.pot_bound);
  rep.bound = theorem_bound(s.n(), s.x_count());
  rep.pot_size_ok = static_cast<long>(rep.distinct_peas.size()) <= rep.pot_bound;
  if (!rep.pot_size_ok) fail("pot holds more peas than (n-1)(n-x)");
  rep.pot_inequality_ok = 2.0 * kPi <= 2.0 * rep.m * static_cast<double>(rep.pot_bound) + kAngleTol;
  if (!rep.pot_inequality_ok) fail("pot inequality 2pi <= 2m(n-1)(n-x) failed");

  rep.best_max_angle = cs.best_poly().max_angle;
  rep.best_within_m_ok = rep.best_max_angle <= 2.0 * kPi - rep.m + kAngleTol;
  if (!rep.best_within_m_ok) fail("no candidate achieves max angle <= 2pi - m");
  rep.bound_ok = rep.best_max_angle <= rep.bound + kAngleTol;
  if (!rep.bound_ok) fail("best max angle exceeds the theorem bound");

  rep.pass = rep.property1_ok && rep.property2_ok && rep.pot_size_ok && rep.pot_inequality_ok &&
             rep.group_sums_ok && rep.best_within_m_ok && rep.bound_ok;
  return rep;
}

TheoremReport verify_theorem(const PointSet& s, int workers) {
  return verify_theorem(s, candidate_set(s, workers), workers);
}

}  // namespace maxangle
