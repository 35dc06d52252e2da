#include "maxangle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "maxangle/parallel.hpp"

namespace maxangle {

namespace {

constexpr double kPi = std::numbers::pi;

using i128 = __int128;

int cross_sign(Point p, Point q, Point r) {
  const i128 v = static_cast<i128>(q.x - p.x) * (r.y - p.y) -
                 static_cast<i128>(q.y - p.y) * (r.x - p.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool proper_cross(Point a1, Point a2, Point b1, Point b2) {
  if (cross_sign(a1, a2, b1) == cross_sign(a1, a2, b2)) return false;
  return cross_sign(b1, b2, a1) != cross_sign(b1, b2, a2);
}

struct Enumerator {
  const std::vector<Point>& pts;
  int n;
  std::vector<int> order;
  std::vector<char> used;
  const std::function<void(std::span<const int>)>& visit;

  // New edge (order[depth-1], order[depth]) against all earlier
  // non-adjacent edges.
  bool edge_ok(int depth) const {
    const Point a1 = pts[order[depth - 1]], a2 = pts[order[depth]];
    for (int j = 0; j + 2 < depth; ++j)
      if (proper_cross(a1, a2, pts[order[j]], pts[order[j + 1]])) return false;
    return true;
  }

  bool closing_ok() const {
    const Point a1 = pts[order[n - 1]], a2 = pts[order[0]];
    for (int j = 1; j + 1 < n - 1; ++j)
      if (proper_cross(a1, a2, pts[order[j]], pts[order[j + 1]])) return false;
    return true;
  }

  void extend(int depth) {
    if (depth == n) {
      if (closing_ok()) visit(order);
      return;
    }
    for (int v = 1; v < n; ++v) {
      if (used[v]) continue;
      if (depth == n - 1 && v < order[1]) continue;  // reflection quotient
      order[depth] = v;
      if (edge_ok(depth)) {
        used[v] = 1;
        extend(depth + 1);
        used[v] = 0;
      }
    }
  }
};

void enumerate_from_second(const PointSet& s, int second,
                           const std::function<void(std::span<const int>)>& visit) {
  const int n = s.n();
  Enumerator e{s.points, n, std::vector<int>(n), std::vector<char>(n, 0), visit};
  e.order[0] = 0;
  e.order[1] = second;
  e.used[0] = e.used[second] = 1;
  e.extend(2);
}

void check_limit(const PointSet& s, int limit) {
  if (s.n() > limit)
    throw std::invalid_argument("oracle refuses n = " + std::to_string(s.n()) +
                                " above the enumeration limit " + std::to_string(limit) +
                                "; raise the limit explicitly to override");
}

}  // namespace

void enumerate_simple(const PointSet& s, const std::function<void(std::span<const int>)>& visit,
                      int limit) {
  check_limit(s, limit);
  // order[0] = 0 kills rotations; order[1] < order[n-1] kills reflections,
  // so each visited order is its own canonical form.
  for (int v = 1; v < s.n(); ++v) enumerate_from_second(s, v, visit);
}

namespace {

struct PartialBest {
  long long count = 0;
  double minmax = 0.0;
  std::vector<int> argmin;

  void offer(double mx, std::span<const int> order) {
    ++count;
    if (argmin.empty() || mx < minmax ||
        (mx == minmax && std::lexicographical_compare(order.begin(), order.end(),
                                                      argmin.begin(), argmin.end()))) {
      minmax = mx;
      argmin.assign(order.begin(), order.end());
    }
  }
};

}  // namespace

OracleResult oracle_minmax(const PointSet& s, int limit, int workers) {
  check_limit(s, limit);
  const int n = s.n();

  // Partition the search by the second vertex; each slot reduces
  // independently and the final merge walks slots in order.
  std::vector<PartialBest> slots(n);
  parallel_for(n - 1, workers, [&](int i) {
    const int second = i + 1;
    PartialBest& best = slots[second];
    enumerate_from_second(s, second, [&](std::span<const int> order) {
      const AngleReport rep = detail::interior_angles_unchecked(s.points, order);
      best.offer(rep.max_angle, order);
    });
  });

  PartialBest total;
  for (const PartialBest& b : slots) {
    total.count += b.count;
    if (b.argmin.empty()) continue;
    if (total.argmin.empty() || b.minmax < total.minmax ||
        (b.minmax == total.minmax && b.argmin < total.argmin)) {
      total.minmax = b.minmax;
      total.argmin = b.argmin;
    }
  }
  if (total.count == 0)
    throw std::logic_error("oracle_minmax: no simple polygonization found");

  OracleResult res;
  res.n = n;
  res.num_simple = total.count;
  res.minmax_angle = total.minmax;
  res.argmin = std::move(total.argmin);
  res.conjecture_bound = 2.0 * kPi - 2.0 * kPi / static_cast<double>(n - 1);
  res.theorem_applies = s.x_count() < n;
  if (res.theorem_applies)
    res.theorem_bound =
        2.0 * kPi - kPi / (static_cast<double>(n - 1) * (n - s.x_count()));
  res.satisfies_conjecture = res.minmax_angle <= res.conjecture_bound + kAngleTol;
  return res;
}

ConjectureCheck conjecture_check(const PointSet& s, int limit, int workers) {
  ConjectureCheck out;
  out.result = oracle_minmax(s, limit, workers);
  out.holds = out.result.satisfies_conjecture;
  return out;
}

}  // namespace maxangle
