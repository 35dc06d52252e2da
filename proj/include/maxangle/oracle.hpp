#pragma once

#include <functional>
#include <span>
#include <vector>

#include "maxangle/geometry.hpp"

// Exhaustive ground truth for small sets: every simple polygonization is
// enumerated once (first index pinned, reflections quotiented), giving the
// exact min-max interior angle and a direct check of the conjectured tight
// bound 2pi - 2pi/(n-1).

namespace maxangle {

inline constexpr int kDefaultOracleLimit = 10;

// Visits each distinct simple polygonization exactly once, in canonical
// form (least rotation/reflection). Enumeration backtracks on the first
// self-intersection of the partial polyline. Throws std::invalid_argument
// when n exceeds `limit`; callers raise the limit explicitly to go bigger.
void enumerate_simple(const PointSet& s, const std::function<void(std::span<const int>)>& visit,
                      int limit = kDefaultOracleLimit);

struct OracleResult {
  int n = 0;
  long long num_simple = 0;
  double minmax_angle = 0.0;
  std::vector<int> argmin;  // canonical order attaining the minimum
  double conjecture_bound = 0.0;  // 2pi - 2pi/(n-1)
  double theorem_bound = 0.0;     // meaningful when theorem_applies
  bool theorem_applies = false;   // x < n
  bool satisfies_conjecture = false;
};

// Exact minimum over all simple polygonizations of the maximum interior
// angle. Ties on the minimum resolve to the least canonical order.
OracleResult oracle_minmax(const PointSet& s, int limit = kDefaultOracleLimit, int workers = 1);

struct ConjectureCheck {
  bool holds = false;
  OracleResult result;
};

ConjectureCheck conjecture_check(const PointSet& s, int limit = kDefaultOracleLimit,
                                 int workers = 1);

}  // namespace maxangle
