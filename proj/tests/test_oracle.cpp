#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "maxangle/candidates.hpp"
#include "maxangle/oracle.hpp"
#include "test_util.hpp"

using namespace maxangle;
using testutil::fig_set;
using testutil::kPi;
using testutil::pt;
using testutil::pts;

namespace {

std::set<std::vector<int>> enumerate_set(const PointSet& s, int limit = kDefaultOracleLimit) {
  std::set<std::vector<int>> out;
  enumerate_simple(
      s, [&](std::span<const int> order) { out.emplace(order.begin(), order.end()); }, limit);
  return out;
}

PointSet star_set(int m) {
  std::vector<Point> p;
  for (int k = 0; k < m; ++k)
    p.push_back(pt(std::cos(2 * kPi * k / m), std::sin(2 * kPi * k / m)));
  p.push_back(pt(0, 0));
  return PointSet::create(p);
}

}  // namespace

TEST_CASE("a convex quadrilateral has exactly one polygonization") {
  const PointSet s = PointSet::create(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const auto all = enumerate_set(s);
  CHECK(all.size() == 1);
  CHECK(*all.begin() == canonical_cycle(s.hull));
}

TEST_CASE("triangle plus center has exactly three polygonizations") {
  const PointSet s = PointSet::create(testutil::star3_points());
  CHECK(enumerate_set(s).size() == 3);
}

TEST_CASE("both figure polygons appear in the enumeration") {
  const PointSet s = fig_set();
  const auto all = enumerate_set(s);
  CHECK(all.size() == 27);  // confirmed by an independent permutation sweep
  CHECK(all.count(std::vector<int>{0, 1, 2, 6, 3, 4, 7, 5}) == 1);  // first drawing
  CHECK(all.count(std::vector<int>{0, 1, 2, 3, 4, 7, 6, 5}) == 1);  // completed polygon

  // Every visited order is simple and already canonical.
  int checked = 0;
  enumerate_simple(s, [&](std::span<const int> order) {
    if (checked++ % 97 != 0) return;  // spot-check a slice
    CHECK(is_simple(s, order));
    CHECK(canonical_cycle(order) == std::vector<int>(order.begin(), order.end()));
  });
}

TEST_CASE("oracle minmax of the running example is exactly 3pi/2") {
  // The optimum turns the polygon at (-1,0) through the perpendicular rays
  // toward (-2,3) and (-4,-1); confirmed by an independent sweep.
  const OracleResult res = oracle_minmax(fig_set());
  CHECK(res.num_simple == 27);
  CHECK(res.minmax_angle == doctest::Approx(3 * kPi / 2).epsilon(1e-12));
  CHECK(res.argmin == std::vector<int>{0, 5, 7, 4, 3, 2, 1, 6});
}

TEST_CASE("oracle minmax of the unit square") {
  const PointSet s = PointSet::create(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const OracleResult res = oracle_minmax(s);
  CHECK(res.num_simple == 1);
  CHECK(res.minmax_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(!res.theorem_applies);
  CHECK(res.satisfies_conjecture);
}

TEST_CASE("oracle minmax matches the conjecture bound on stars") {
  const PointSet s3 = PointSet::create(testutil::star3_points());
  const OracleResult r3 = oracle_minmax(s3);
  CHECK(r3.num_simple == 3);
  CHECK(std::abs(r3.minmax_angle - (2 * kPi - 2 * kPi / 3)) < 1e-9);
  CHECK(r3.satisfies_conjecture);

  const OracleResult r5 = oracle_minmax(star_set(5));
  CHECK(std::abs(r5.minmax_angle - (2 * kPi - 2 * kPi / 5)) < 1e-9);
  CHECK(r5.satisfies_conjecture);
}

TEST_CASE("conjecture campaign over 200 seeded random sets") {
  int violations = 0;
  for (int n = 5; n <= 8; ++n) {
    for (int iter = 0; iter < 50; ++iter) {
      const PointSet s = testutil::random_set(n, 20000 + 1000 * n + iter);
      const ConjectureCheck check = conjecture_check(s);
      if (!check.holds) ++violations;
      CHECK(check.result.num_simple >= 1);
      CHECK(check.result.minmax_angle <= check.result.conjecture_bound + 1e-9);
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("oracle dominates the candidate pipeline") {
  for (int n = 5; n <= 8; ++n) {
    for (int iter = 0; iter < 3; ++iter) {
      const PointSet s = testutil::random_set(n, 30000 + 1000 * n + iter);
      const CandidateSet cs = candidate_set(s);
      const OracleResult oracle = oracle_minmax(s);
      const double candidate_opt = cs.best_poly().max_angle;
      CHECK(oracle.minmax_angle <= candidate_opt + 1e-12);
      if (!s.convex_position())
        CHECK(candidate_opt <= theorem_bound(s.n(), s.x_count()) + 1e-9);
      else
        CHECK(oracle.minmax_angle == candidate_opt);

      // The candidate family is a subset of all polygonizations.
      const auto all = enumerate_set(s);
      for (const Polygonization& p : cs.distinct) CHECK(all.count(p.canonical) == 1);
    }
  }
}

TEST_CASE("convex-position oracle equals the hull's largest angle") {
  // Five points in convex position.
  const PointSet s = PointSet::create(pts({{0, 0}, {2, 0}, {3, 1.5}, {1, 3}, {-0.5, 1}}));
  REQUIRE(s.convex_position());
  const OracleResult res = oracle_minmax(s);
  const AngleReport hull = interior_angles(s, s.hull);
  CHECK(res.minmax_angle == doctest::Approx(hull.max_angle).epsilon(1e-12));
}

TEST_CASE("oracle result is invariant under rigid motion and relabeling") {
  std::mt19937_64 rng(99);
  const PointSet s = testutil::random_set(7, 777);
  const OracleResult base = oracle_minmax(s);

  std::vector<Point> moved;
  for (const Point& p : s.points) moved.push_back({-p.y + pt(3.25, 0).x, p.x});
  const OracleResult rotated = oracle_minmax(PointSet::create(moved));
  CHECK(std::abs(rotated.minmax_angle - base.minmax_angle) < 1e-9);
  CHECK(rotated.num_simple == base.num_simple);
  CHECK(rotated.argmin == base.argmin);

  std::vector<int> perm(s.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Point> relabeled(s.n());
  for (int i = 0; i < s.n(); ++i) relabeled[perm[i]] = s.points[i];
  const OracleResult shuffled = oracle_minmax(PointSet::create(relabeled));
  CHECK(std::abs(shuffled.minmax_angle - base.minmax_angle) < 1e-9);
  CHECK(shuffled.num_simple == base.num_simple);
  std::vector<int> mapped;
  for (int v : base.argmin) mapped.push_back(perm[v]);
  CHECK(shuffled.argmin == canonical_cycle(mapped));
}

TEST_CASE("oracle is schedule independent") {
  const PointSet s = testutil::random_set(8, 4321);
  const OracleResult a = oracle_minmax(s, kDefaultOracleLimit, 1);
  const OracleResult b = oracle_minmax(s, kDefaultOracleLimit, 4);
  CHECK(a.num_simple == b.num_simple);
  CHECK(a.minmax_angle == b.minmax_angle);
  CHECK(a.argmin == b.argmin);
}

TEST_CASE("oracle refuses n above the limit") {
  const PointSet s = testutil::random_set(6, 31);
  CHECK_THROWS_AS(oracle_minmax(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_set(testutil::random_set(11, 32)), std::invalid_argument);
  CHECK_NOTHROW(oracle_minmax(s, 6));
}
