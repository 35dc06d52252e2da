#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Planar geometry primitives with exact combinatorial decisions.
//
// Coordinates are decimal numbers stored as integers scaled by 10^9, so
// orientation, hull membership and polygon simplicity are decided without
// rounding. Angles, circle centers and radii are ordinary doubles; every
// tolerance that touches them is stated at the call site.

namespace maxangle {

inline constexpr std::int64_t kScale = 1'000'000'000;

// Largest admissible coordinate magnitude (unscaled). Keeps scaled values
// exactly representable in a double and keeps orientation determinants and
// shoelace sums inside __int128 range.
inline constexpr double kMaxCoord = 4.0e6;

// Tolerance for floating angle identities (sums, bounds).
inline constexpr double kAngleTol = 1e-9;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double unscale(std::int64_t v) {
  return static_cast<double>(v) / static_cast<double>(kScale);
}
inline Vec2 to_vec(Point p) { return {unscale(p.x), unscale(p.y)}; }

enum class Orientation { kCCW, kCW, kCollinear };

// Exact sign of twice the signed area of triangle (p, q, r).
Orientation orientation(Point p, Point q, Point r);

// Lexicographically first collinear triple, or nullopt when the points are
// in general position. Throws std::invalid_argument for fewer than 3 points.
std::optional<std::array<int, 3>> collinear_triple(std::span<const Point> pts);

// Counterclockwise hull indices of a general-position set, rotated so the
// smallest index comes first.
std::vector<int> convex_hull(std::span<const Point> pts);

struct PointSet {
  std::vector<Point> points;
  std::vector<int> hull;      // counterclockwise
  std::vector<int> internal;  // ascending

  int n() const { return static_cast<int>(points.size()); }
  int x_count() const { return static_cast<int>(hull.size()); }
  bool convex_position() const { return internal.empty(); }
  bool is_internal(int i) const;

  // Validates n > 3 and general position. Throws std::invalid_argument with
  // the offending triple in the message.
  static PointSet create(std::vector<Point> pts);
};

struct Circle {
  Vec2 center;
  double radius = 0.0;
  std::vector<int> support;  // 2 or 3 boundary indices defining the circle
};

// Smallest enclosing circle. Deterministic: points are inserted in input
// order (no shuffle), so the same input always yields the same support set.
Circle min_enclosing_circle(std::span<const Point> pts);

// Exact test that the closed polyline visiting `order` is simple. `order`
// must be a permutation of all point indices.
bool is_simple(const PointSet& s, std::span<const int> order);

struct AngleReport {
  std::vector<double> angles;  // interior angle per position of the order
  double max_angle = 0.0;
  int max_pos = -1;  // position within the order
  int reflex_count = 0;
};

// Interior angles of a simple polygonization, each in (0, 2pi). Reflex
// detection uses exact orientation against the polygon's exact winding.
// Throws std::invalid_argument when the order is not simple.
AngleReport interior_angles(const PointSet& s, std::span<const int> order);

struct Polygonization {
  std::vector<int> order;      // counterclockwise
  std::vector<double> angles;  // aligned with order
  double max_angle = 0.0;
  int max_vertex = -1;  // point index attaining max_angle
  int reflex_count = 0;
  std::vector<int> canonical;  // least rotation/reflection of order
};

// Least rotation/reflection of a cyclic index sequence (a permutation of
// 0..n-1): rotate so 0 comes first, compare against the rotated reversal.
std::vector<int> canonical_cycle(std::span<const int> order);

// Builds a Polygonization (CCW-normalized, angles, canonical form).
// Throws std::invalid_argument when the order is not simple.
Polygonization make_polygonization(const PointSet& s, std::vector<int> order);

// Angle helpers. norm_angle maps into [0, 2pi); ccw_delta is the
// counterclockwise sweep from `from` to `to` in [0, 2pi).
double norm_angle(double a);
double ccw_delta(double from, double to);

namespace detail {
// Exact winding of the closed polyline (sign of the shoelace sum).
Orientation cycle_orientation(std::span<const Point> pts, std::span<const int> order);
// Angle computation without the simplicity check; callers must have
// verified the order themselves.
AngleReport interior_angles_unchecked(std::span<const Point> pts, std::span<const int> order);
Polygonization make_polygonization_unchecked(const PointSet& s, std::vector<int> order);
}  // namespace detail

}  // namespace maxangle
