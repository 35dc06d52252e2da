#pragma once

#include <vector>

#include "maxangle/geometry.hpp"

// Candidate polygonizations built from viewpoints on the smallest enclosing
// circle. Every line through two points of the set cuts the circle into
// maximal arcs; all viewpoints inside one arc produce the same polygon, so
// one representative per arc enumerates the whole candidate family.

namespace maxangle {

// Cut angles closer than this are merged into a single cut point.
inline constexpr double kCutMergeTol = 1e-12;

// A representative viewpoint d must clear this relative margin: for every
// pair p, q of set points, |signed area(d, p, q)| > kRepMargin * radius^2.
inline constexpr double kRepMargin = 1e-9;

struct ArcInterval {
  double start_angle = 0.0;  // in [0, 2pi)
  double end_angle = 0.0;    // start_angle + measure (may exceed 2pi)
  double measure = 0.0;      // in (0, 2pi]
  Vec2 representative;       // valid when usable
  bool usable = false;
};

struct ArcSet {
  std::vector<ArcInterval> arcs;
  int merged_cut_points = 0;  // duplicate / tangent intersections collapsed
};

// Cuts C(S) at both intersections of every line through two points of S.
// Arc measures sum to 2pi; |arcs| <= n(n-1).
ArcSet maximal_arcs(const PointSet& s, const Circle& c);

// Picks a viewpoint inside the arc: the angular midpoint first, then 1/4 and
// 3/4, then eight further dyadic positions. Returns false (arc unusable)
// when every position fails the general-position margin against S.
bool choose_representative(const PointSet& s, const Circle& c, ArcInterval& arc);

// Vertex order of the polygonization seen from viewpoint d: the hull chain
// facing away from d, then the remaining points sorted by angle around d.
// No simplicity check; build_polygonization wraps this with verification.
std::vector<int> viewpoint_order(const PointSet& s, Vec2 d);

// Polygonization P(d) for a viewpoint strictly outside the hull. Throws
// std::invalid_argument when d lies inside the hull and std::logic_error if
// the constructed polygon fails the simplicity check (unreachable for
// margin-checked representatives).
Polygonization build_polygonization(const PointSet& s, Vec2 d);

// 2pi - pi / ((n-1)(n-x)). Requires n > 3 and 3 <= x < n; a convex-position
// set (x = n) is rejected since the bound only concerns sets with internal
// points.
double theorem_bound(int n, int x);

struct CandidateSet {
  Circle circle;
  std::vector<ArcInterval> arcs;
  std::vector<int> arc_candidate;  // arc index -> index into distinct, -1 if unusable
  std::vector<Polygonization> distinct;
  int best = -1;  // index into distinct
  int merged_cut_points = 0;
  int unusable_arcs = 0;

  const Polygonization& best_poly() const { return distinct[best]; }
};

// Full candidate pipeline: arcs, one polygonization per usable arc,
// deduplication by canonical cyclic form, winner selection. The winner
// minimizes max_angle with ties broken by reflex count, then canonical
// order. Identical results for any worker count.
CandidateSet candidate_set(const PointSet& s, int workers = 1);

struct BestResult {
  Polygonization poly;
  double max_angle = 0.0;
  double bound = 0.0;           // meaningful when theorem_applies
  bool theorem_applies = false; // x < n
  bool bound_ok = true;         // max_angle <= bound + kAngleTol
};

BestResult best_polygonization(const PointSet& s, int workers = 1);

}  // namespace maxangle
