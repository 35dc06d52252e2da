#include "maxangle/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "maxangle/parallel.hpp"

namespace maxangle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ArcSet maximal_arcs(const PointSet& s, const Circle& c) {
  const int n = s.n();
  std::vector<double> cuts;
  cuts.reserve(static_cast<std::size_t>(n) * (n - 1));

  int raw = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = to_vec(s.points[i]);
    for (int j = i + 1; j < n; ++j) {
      const Vec2 b = to_vec(s.points[j]);
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
      // Project the center onto the line, then walk the half-chord.
      const double t0 = (c.center.x - a.x) * ux + (c.center.y - a.y) * uy;
      const Vec2 foot{a.x + t0 * ux, a.y + t0 * uy};
      const double h2 = (foot.x - c.center.x) * (foot.x - c.center.x) +
                        (foot.y - c.center.y) * (foot.y - c.center.y);
      const double disc = c.radius * c.radius - h2;
      if (disc <= 0.0) {
        // Tangency within rounding: a single cut point.
        cuts.push_back(norm_angle(std::atan2(foot.y - c.center.y, foot.x - c.center.x)));
        raw += 2;
        continue;
      }
      const double half = std::sqrt(disc);
      for (const double t : {t0 + half, t0 - half}) {
        const Vec2 q{a.x + t * ux, a.y + t * uy};
        cuts.push_back(norm_angle(std::atan2(q.y - c.center.y, q.x - c.center.x)));
        ++raw;
      }
    }
  }

  std::sort(cuts.begin(), cuts.end());
  std::vector<double> kept;
  kept.reserve(cuts.size());
  for (double a : cuts)
    if (kept.empty() || a - kept.back() > kCutMergeTol) kept.push_back(a);
  // Wraparound: the first and last cut may be the same point.
  if (kept.size() > 1 && kept.front() + 2.0 * kPi - kept.back() <= kCutMergeTol) kept.pop_back();
  if (kept.empty()) throw std::logic_error("maximal_arcs: no cut points");

  ArcSet out;
  out.merged_cut_points = raw - static_cast<int>(kept.size());
  const int k = static_cast<int>(kept.size());
  out.arcs.reserve(k);
  for (int i = 0; i < k; ++i) {
    ArcInterval arc;
    arc.start_angle = kept[i];
    arc.measure = (k == 1) ? 2.0 * kPi : ccw_delta(kept[i], kept[(i + 1) % k]);
    arc.end_angle = arc.start_angle + arc.measure;
    out.arcs.push_back(arc);
  }
  return out;
}

namespace {

// |signed area(d, p, q)| > margin for every pair p, q of set points.
bool clears_margin(const PointSet& s, Vec2 d, double margin) {
  const int n = s.n();
  for (int i = 0; i < n; ++i) {
    const Vec2 p = to_vec(s.points[i]);
    const double px = p.x - d.x, py = p.y - d.y;
    for (int j = i + 1; j < n; ++j) {
      const Vec2 q = to_vec(s.points[j]);
      const double area = 0.5 * (px * (q.y - d.y) - py * (q.x - d.x));
      if (std::abs(area) <= margin) return false;
    }
  }
  return true;
}

}  // namespace

bool choose_representative(const PointSet& s, const Circle& c, ArcInterval& arc) {
  static constexpr double kPositions[] = {1.0 / 2, 1.0 / 4, 3.0 / 4, 1.0 / 8,  3.0 / 8, 5.0 / 8,
                                          7.0 / 8, 1.0 / 16, 3.0 / 16, 5.0 / 16, 7.0 / 16};
  const double margin = kRepMargin * c.radius * c.radius;
  for (const double t : kPositions) {
    const double theta = arc.start_angle + t * arc.measure;
    const Vec2 d{c.center.x + c.radius * std::cos(theta),
                 c.center.y + c.radius * std::sin(theta)};
    if (clears_margin(s, d, margin)) {
      arc.representative = d;
      arc.usable = true;
      return true;
    }
  }
  arc.usable = false;
  return false;
}

std::vector<int> viewpoint_order(const PointSet& s, Vec2 d) {
  const auto& hull = s.hull;
  const int x = static_cast<int>(hull.size());

  // Hull edges keep d on the interior side (left, for a CCW hull) exactly
  // when they face away from d.
  std::vector<char> included(x);
  int num_included = 0;
  for (int a = 0; a < x; ++a) {
    const Vec2 p = to_vec(s.points[hull[a]]);
    const Vec2 q = to_vec(s.points[hull[(a + 1) % x]]);
    const double side = (q.x - p.x) * (d.y - p.y) - (q.y - p.y) * (d.x - p.x);
    included[a] = side > 0.0;
    num_included += included[a];
  }
  if (num_included == x)
    throw std::invalid_argument("viewpoint lies inside the convex hull");
  if (num_included == 0)
    throw std::logic_error("viewpoint_order: no hull edge faces away from d");

  // The included edges form one contiguous cyclic run.
  int start = -1;
  for (int a = 0; a < x; ++a) {
    if (included[a] && !included[(a + x - 1) % x]) {
      if (start != -1) throw std::logic_error("viewpoint_order: hull chain is not contiguous");
      start = a;
    }
  }

  std::vector<int> chain(num_included + 1);
  for (int t = 0; t <= num_included; ++t) chain[t] = hull[(start + t) % x];
  const int chain_begin = chain.front();
  const int chain_end = chain.back();

  std::vector<char> on_chain(s.n(), 0);
  for (int v : chain) on_chain[v] = 1;

  const Vec2 p0 = to_vec(s.points[chain_begin]);
  const double ref = std::atan2(p0.y - d.y, p0.x - d.x);
  auto key = [&](int v) {
    const Vec2 p = to_vec(s.points[v]);
    return ccw_delta(ref, std::atan2(p.y - d.y, p.x - d.x));
  };

  std::vector<int> rest;
  rest.reserve(s.n() - chain.size());
  for (int v = 0; v < s.n(); ++v)
    if (!on_chain[v]) rest.push_back(v);
  std::sort(rest.begin(), rest.end(), [&](int u, int v) { return key(u) < key(v); });

  // Every remaining point sits inside the wedge swept from the chain's first
  // vertex to its last; the closing vertex must come out on top.
  if (!rest.empty() && key(rest.back()) >= key(chain_end))
    throw std::logic_error("viewpoint_order: angular sort escaped the viewpoint wedge");

  std::vector<int> order = std::move(chain);
  order.insert(order.end(), rest.rbegin(), rest.rend());
  return order;
}

Polygonization build_polygonization(const PointSet& s, Vec2 d) {
  std::vector<int> order = viewpoint_order(s, d);
  if (!is_simple(s, order))
    throw std::logic_error("build_polygonization: constructed polygon is not simple");
  return detail::make_polygonization_unchecked(s, std::move(order));
}

double theorem_bound(int n, int x) {
  if (n <= 3) throw std::invalid_argument("theorem_bound requires n > 3");
  if (x < 3) throw std::invalid_argument("theorem_bound requires x >= 3");
  if (x >= n)
    throw std::invalid_argument(
        "theorem_bound requires x < n; a convex-position set admits a convex "
        "polygonization (every interior angle below pi)");
  return 2.0 * kPi - kPi / (static_cast<double>(n - 1) * (n - x));
}

namespace {

bool better_candidate(const Polygonization& a, const Polygonization& b) {
  if (a.max_angle != b.max_angle) return a.max_angle < b.max_angle;
  if (a.reflex_count != b.reflex_count) return a.reflex_count < b.reflex_count;
  return a.canonical < b.canonical;
}

}  // namespace

CandidateSet candidate_set(const PointSet& s, int workers) {
  CandidateSet cs;
  cs.circle = min_enclosing_circle(s.points);
  ArcSet arcset = maximal_arcs(s, cs.circle);
  cs.arcs = std::move(arcset.arcs);
  cs.merged_cut_points = arcset.merged_cut_points;

  const int narcs = static_cast<int>(cs.arcs.size());
  std::vector<std::vector<int>> canon(narcs);
  parallel_for(narcs, workers, [&](int i) {
    if (choose_representative(s, cs.circle, cs.arcs[i]))
      canon[i] = canonical_cycle(viewpoint_order(s, cs.arcs[i].representative));
  });

  // Deduplicate by canonical form, keeping first-arc order.
  cs.arc_candidate.assign(narcs, -1);
  std::map<std::vector<int>, int> seen;
  std::vector<const std::vector<int>*> distinct_orders;
  for (int i = 0; i < narcs; ++i) {
    if (!cs.arcs[i].usable) {
      ++cs.unusable_arcs;
      continue;
    }
    auto [it, inserted] = seen.try_emplace(std::move(canon[i]), -1);
    if (inserted) {
      it->second = static_cast<int>(distinct_orders.size());
      distinct_orders.push_back(&it->first);
    }
    cs.arc_candidate[i] = it->second;
  }
  if (distinct_orders.empty())
    throw std::runtime_error("candidate_set: every arc was unusable");

  cs.distinct.resize(distinct_orders.size());
  parallel_for(static_cast<int>(distinct_orders.size()), workers, [&](int i) {
    if (!is_simple(s, *distinct_orders[i]))
      throw std::logic_error("candidate_set: constructed polygon is not simple");
    cs.distinct[i] = detail::make_polygonization_unchecked(s, *distinct_orders[i]);
  });

  cs.best = 0;
  for (int i = 1; i < static_cast<int>(cs.distinct.size()); ++i)
    if (better_candidate(cs.distinct[i], cs.distinct[cs.best])) cs.best = i;
  return cs;
}

BestResult best_polygonization(const PointSet& s, int workers) {
  CandidateSet cs = candidate_set(s, workers);
  BestResult out;
  out.poly = cs.best_poly();
  out.max_angle = out.poly.max_angle;
  out.theorem_applies = s.x_count() < s.n();
  if (out.theorem_applies) {
    out.bound = theorem_bound(s.n(), s.x_count());
    out.bound_ok = out.max_angle <= out.bound + kAngleTol;
  }
  return out;
}

}  // namespace maxangle
