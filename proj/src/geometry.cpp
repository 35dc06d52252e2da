#include "maxangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maxangle {

namespace {

using i128 = __int128;

i128 cross2(Point p, Point q, Point r) {
  return static_cast<i128>(q.x - p.x) * (r.y - p.y) -
         static_cast<i128>(q.y - p.y) * (r.x - p.x);
}

constexpr double kPi = std::numbers::pi;

}  // namespace

Orientation orientation(Point p, Point q, Point r) {
  const i128 v = cross2(p, q, r);
  if (v > 0) return Orientation::kCCW;
  if (v < 0) return Orientation::kCW;
  return Orientation::kCollinear;
}

std::optional<std::array<int, 3>> collinear_triple(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("general position needs at least 3 points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::kCollinear)
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

std::vector<int> convex_hull(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("convex hull needs at least 3 points");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });

  // Monotone chain; strict left turns only (general position).
  std::vector<int> h(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {  // lower hull
    const int i = idx[ii];
    while (k >= 2 && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[i]) != Orientation::kCCW) --k;
    h[k++] = i;
  }
  const int lower = k + 1;
  for (int ii = n - 2; ii >= 0; --ii) {  // upper hull
    const int i = idx[ii];
    while (k >= lower && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[i]) != Orientation::kCCW) --k;
    h[k++] = i;
  }
  h.resize(k - 1);

  const auto mn = std::min_element(h.begin(), h.end());
  std::rotate(h.begin(), mn, h.end());
  return h;
}

bool PointSet::is_internal(int i) const {
  return std::binary_search(internal.begin(), internal.end(), i);
}

PointSet PointSet::create(std::vector<Point> pts) {
  if (pts.size() <= 3)
    throw std::invalid_argument("point set must contain more than 3 points, got " +
                                std::to_string(pts.size()));
  if (auto bad = collinear_triple(pts)) {
    const auto [i, j, k] = *bad;
    throw std::invalid_argument("points are not in general position: indices " +
                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                std::to_string(k) + " are collinear");
  }
  PointSet s;
  s.points = std::move(pts);
  s.hull = convex_hull(s.points);
  std::vector<char> on_hull(s.points.size(), 0);
  for (int i : s.hull) on_hull[i] = 1;
  for (int i = 0; i < s.n(); ++i)
    if (!on_hull[i]) s.internal.push_back(i);
  return s;
}

namespace {

struct Disk {
  Vec2 c;
  double r2 = 0.0;
};

bool disk_contains(const Disk& d, Vec2 p) {
  const double dx = p.x - d.c.x, dy = p.y - d.c.y;
  return dx * dx + dy * dy <= d.r2 * (1.0 + 1e-12) + 1e-30;
}

Disk disk_from_two(Vec2 a, Vec2 b) {
  const Vec2 c{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  const double dx = a.x - c.x, dy = a.y - c.y;
  return {c, dx * dx + dy * dy};
}

Disk disk_from_three(Vec2 a, Vec2 b, Vec2 c) {
  // Circumcircle, coordinates translated by `a` for conditioning.
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  if (d == 0.0) throw std::logic_error("degenerate circumcircle");
  const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return {{a.x + ux, a.y + uy}, ux * ux + uy * uy};
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw std::invalid_argument("min_enclosing_circle needs at least 2 points");
  std::vector<Vec2> p(n);
  for (int i = 0; i < n; ++i) p[i] = to_vec(pts[i]);

  // Welzl's incremental scheme with a fixed insertion order: whenever a point
  // falls outside the current disk it is promoted to the boundary and the
  // prefix is repaired.
  Disk d = disk_from_two(p[0], p[1]);
  std::vector<int> support{0, 1};
  for (int i = 2; i < n; ++i) {
    if (disk_contains(d, p[i])) continue;
    d = disk_from_two(p[i], p[0]);
    support = {i, 0};
    for (int j = 1; j < i; ++j) {
      if (disk_contains(d, p[j])) continue;
      d = disk_from_two(p[i], p[j]);
      support = {i, j};
      for (int k = 0; k < j; ++k) {
        if (disk_contains(d, p[k])) continue;
        d = disk_from_three(p[i], p[j], p[k]);
        support = {i, j, k};
      }
    }
  }

  Circle out;
  out.center = d.c;
  out.radius = std::sqrt(d.r2);
  std::sort(support.begin(), support.end());
  out.support = std::move(support);

  const double tol = 1e-9 * std::max(out.radius, 1e-12);
  for (int i = 0; i < n; ++i) {
    const double dist = std::hypot(p[i].x - out.center.x, p[i].y - out.center.y);
    if (dist > out.radius + tol)
      throw std::logic_error("min_enclosing_circle: containment check failed");
  }
  for (int i : out.support) {
    const double dist = std::hypot(p[i].x - out.center.x, p[i].y - out.center.y);
    if (std::abs(dist - out.radius) > tol)
      throw std::logic_error("min_enclosing_circle: support point off the boundary");
  }
  return out;
}

namespace {

void check_permutation(int n, std::span<const int> order) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must visit every point exactly once");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("order must be a permutation of the point indices");
    seen[v] = 1;
  }
}

// Proper crossing of segments (a1,a2) and (b1,b2) over four distinct
// points, none of which are collinear (guaranteed by general position).
bool proper_cross(Point a1, Point a2, Point b1, Point b2) {
  const Orientation o1 = orientation(a1, a2, b1);
  const Orientation o2 = orientation(a1, a2, b2);
  if (o1 == o2) return false;
  const Orientation o3 = orientation(b1, b2, a1);
  const Orientation o4 = orientation(b1, b2, a2);
  return o3 != o4;
}

}  // namespace

bool is_simple(const PointSet& s, std::span<const int> order) {
  const int n = s.n();
  check_permutation(n, order);
  const auto& p = s.points;
  for (int i = 0; i < n; ++i) {
    const Point a1 = p[order[i]], a2 = p[order[(i + 1) % n]];
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      const Point b1 = p[order[j]], b2 = p[order[(j + 1) % n]];
      if (proper_cross(a1, a2, b1, b2)) return false;
    }
  }
  return true;
}

namespace detail {

Orientation cycle_orientation(std::span<const Point> pts, std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  i128 twice_area = 0;
  for (int i = 0; i < n; ++i) {
    const Point a = pts[order[i]], b = pts[order[(i + 1) % n]];
    twice_area += static_cast<i128>(a.x) * b.y - static_cast<i128>(b.x) * a.y;
  }
  if (twice_area > 0) return Orientation::kCCW;
  if (twice_area < 0) return Orientation::kCW;
  return Orientation::kCollinear;
}

AngleReport interior_angles_unchecked(std::span<const Point> pts, std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  const Orientation winding = cycle_orientation(pts, order);
  if (winding == Orientation::kCollinear)
    throw std::logic_error("degenerate polygon: zero signed area");

  AngleReport rep;
  rep.angles.resize(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point prev = pts[order[(i + n - 1) % n]];
    const Point v = pts[order[i]];
    const Point next = pts[order[(i + 1) % n]];
    const double ux = static_cast<double>(prev.x - v.x), uy = static_cast<double>(prev.y - v.y);
    const double wx = static_cast<double>(next.x - v.x), wy = static_cast<double>(next.y - v.y);
    const double wedge = std::atan2(std::abs(ux * wy - uy * wx), ux * wx + uy * wy);
    const bool convex = orientation(prev, v, next) == winding;
    const double a = convex ? wedge : 2.0 * kPi - wedge;
    rep.angles[i] = a;
    sum += a;
    if (a > kPi) ++rep.reflex_count;
    if (i == 0 || a > rep.max_angle) {
      rep.max_angle = a;
      rep.max_pos = i;
    }
  }
  if (std::abs(sum - (n - 2) * kPi) > kAngleTol)
    throw std::logic_error("interior angles do not sum to (n-2)*pi");
  return rep;
}

Polygonization make_polygonization_unchecked(const PointSet& s, std::vector<int> order) {
  if (cycle_orientation(s.points, order) == Orientation::kCW)
    std::reverse(order.begin(), order.end());
  AngleReport rep = interior_angles_unchecked(s.points, order);
  Polygonization poly;
  poly.max_angle = rep.max_angle;
  poly.max_vertex = order[rep.max_pos];
  poly.reflex_count = rep.reflex_count;
  poly.angles = std::move(rep.angles);
  poly.canonical = canonical_cycle(order);
  poly.order = std::move(order);
  return poly;
}

}  // namespace detail

AngleReport interior_angles(const PointSet& s, std::span<const int> order) {
  if (!is_simple(s, order))
    throw std::invalid_argument("order is not a simple polygonization; angles are undefined");
  return detail::interior_angles_unchecked(s.points, order);
}

std::vector<int> canonical_cycle(std::span<const int> order) {
  const auto zero = std::find(order.begin(), order.end(), 0);
  if (zero == order.end()) throw std::invalid_argument("canonical_cycle: index 0 missing");

  std::vector<int> fwd(order.begin(), order.end());
  std::rotate(fwd.begin(), fwd.begin() + (zero - order.begin()), fwd.end());
  std::vector<int> rev(fwd.rbegin(), fwd.rend());
  std::rotate(rev.begin(), rev.end() - 1, rev.end());  // 0 is last after reversal
  return std::min(fwd, rev);
}

Polygonization make_polygonization(const PointSet& s, std::vector<int> order) {
  if (!is_simple(s, order))
    throw std::invalid_argument("order is not a simple polygonization");
  return detail::make_polygonization_unchecked(s, std::move(order));
}

double norm_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a;
}

double ccw_delta(double from, double to) { return norm_angle(to - from); }

}  // namespace maxangle
