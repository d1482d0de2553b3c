#include <doctest.h>

#include <numeric>
#include <set>

#include "corelattice/polytope.hpp"
#include "corelattice/partition.hpp"
#include "corelattice/text.hpp"
#include "oracles.hpp"

using namespace corelattice;

namespace {

std::set<std::vector<std::int64_t>> point_set(const InequalitySystem& sys,
                                              const std::vector<std::int64_t>& b) {
  std::set<std::vector<std::int64_t>> pts;
  enumerate_lattice_points(sys, b,
                           [&](const std::vector<std::int64_t>& x) { pts.insert(x); });
  return pts;
}

}  // namespace

TEST_CASE("core polytope constraints for (3,8) and (3,4)") {
  const auto sys38 = core_polytope(3, {8});
  REQUIRE(sys38.dim == 2);
  REQUIRE(sys38.constraints.size() == 2);
  CHECK(sys38.constraints[0].coeffs == std::vector<std::int64_t>{0, 1});
  CHECK(sys38.constraints[0].bound == 2);  // x2 <= 2
  CHECK(sys38.constraints[1].coeffs == std::vector<std::int64_t>{1, -1});
  CHECK(sys38.constraints[1].bound == 3);  // x1 - x2 <= 3

  const auto sys34 = core_polytope(3, {4});
  CHECK(sys34.constraints[0].coeffs == std::vector<std::int64_t>{1, 0});
  CHECK(sys34.constraints[0].bound == 1);  // x1 <= 1
  CHECK(sys34.constraints[1].coeffs == std::vector<std::int64_t>{-1, 1});
  CHECK(sys34.constraints[1].bound == 1);  // x2 - x1 <= 1

  const auto sys2 = core_polytope(2, {7});
  REQUIRE(sys2.constraints.size() == 1);
  CHECK(sys2.constraints[0].coeffs == std::vector<std::int64_t>{1});
  CHECK(sys2.constraints[0].bound == 3);
}

TEST_CASE("core polytope input validation") {
  CHECK_THROWS_WITH_AS(core_polytope(3, {6}), doctest::Contains("divisible"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(core_polytope(4, {6}), doctest::Contains("unbounded cone"),
                       std::invalid_argument);
  CHECK_THROWS_AS(core_polytope(1, {2}), std::invalid_argument);
  CHECK_THROWS_AS(core_polytope(3, {}), std::invalid_argument);
  // jointly coprime moduli are fine even when no single pair is
  CHECK_NOTHROW(core_polytope(6, {10, 15}));
}

TEST_CASE("coordinate bounds are sound") {
  CHECK(coordinate_bounds(2, {5}) == std::vector<std::int64_t>{2});
  struct Case {
    std::int64_t a;
    std::vector<std::int64_t> bs;
  };
  for (const Case& c : {Case{3, {8}}, Case{3, {4, 5}}, Case{4, {5, 7}},
                        Case{5, {7}}, Case{6, {10, 15}}}) {
    const auto sys = core_polytope(c.a, c.bs);
    auto bounds = coordinate_bounds(c.a, c.bs);
    auto wide = bounds;
    for (auto& v : wide) v += 5;
    REQUIRE(point_set(sys, bounds) == point_set(sys, wide));
  }
}

TEST_CASE("lattice point enumeration") {
  const auto sys = core_polytope(3, {8});
  const auto bounds = coordinate_bounds(3, {8});
  std::vector<std::vector<std::int64_t>> pts;
  enumerate_lattice_points(sys, bounds,
                           [&](const std::vector<std::int64_t>& x) { pts.push_back(x); });
  CHECK(pts.size() == 15);
  CHECK(pts.front() == std::vector<std::int64_t>{0, 0});
  CHECK(std::is_sorted(pts.begin(), pts.end()));  // lexicographic emission

  std::vector<std::vector<std::int64_t>> pts23;
  enumerate_lattice_points(core_polytope(2, {3}), coordinate_bounds(2, {3}),
                           [&](const std::vector<std::int64_t>& x) { pts23.push_back(x); });
  CHECK(pts23 == std::vector<std::vector<std::int64_t>>{{0}, {1}});
}

TEST_CASE("every enumerated point is a simultaneous core, and none is missed") {
  // cross-checked against the hook sets of explicitly enumerated partitions
  const auto sys = core_polytope(3, {4, 5});
  const auto pts = point_set(sys, coordinate_bounds(3, {4, 5}));
  CHECK(pts.size() == 4);
  std::set<std::vector<std::int64_t>> expected;
  oracles::for_each_partition_upto(12, [&](const std::vector<std::int64_t>& parts) {
    const Partition p = parts.empty() ? Partition() : Partition::from_parts(parts);
    if (is_a_core(p, 3) && is_a_core(p, 4) && is_a_core(p, 5)) {
      expected.insert(apery_of(phi_inverse(p), 3).x);
    }
  });
  CHECK(pts == expected);
}

TEST_CASE("core_stats matches the worked examples") {
  const SizeStats s = core_stats(3, {8});
  CHECK(s.count == 15);
  CHECK(s.max_size == 21);
  CHECK(s.mean() == BigRational(7));
  CHECK(s.unique_max);
  CHECK(s.argmax == AperyTuple::make(3, {5, 2}));

  const SizeStats s23 = core_stats(2, {3});
  CHECK(s23.count == 2);
  CHECK(s23.max_size == 1);
  CHECK(s23.mean() == BigRational(1, 2));

  CHECK_THROWS_AS(core_stats(4, {6}), std::invalid_argument);
}

TEST_CASE("closed forms hold for all coprime pairs a < b <= 9") {
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const SizeStats s = core_stats(a, {b});  // cross-checks internally too
      REQUIRE(s.count == anderson_count(a, b));
      REQUIRE(s.max_size == olsson_stanton_max(a, b));
      REQUIRE(s.mean() == armstrong_mean(a, b));
      REQUIRE(s.unique_max);
    }
  }
}

TEST_CASE("intersecting all polytopes of one k-band gives the box") {
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      std::vector<std::int64_t> bs;
      for (std::int64_t i = 1; i < a; ++i) bs.push_back(a * k + i);
      const auto pts = point_set(core_polytope(a, bs), coordinate_bounds(a, bs));
      std::set<std::vector<std::int64_t>> box;
      std::vector<std::int64_t> x(static_cast<std::size_t>(a - 1), 0);
      auto rec = [&](auto&& self, std::int64_t d) -> void {
        if (d == a - 1) {
          box.insert(x);
          return;
        }
        for (std::int64_t v = 0; v <= k; ++v) {
          x[static_cast<std::size_t>(d)] = v;
          self(self, d + 1);
        }
        x[static_cast<std::size_t>(d)] = 0;
      };
      rec(rec, 0);
      REQUIRE(pts == box);
    }
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  const SizeStats s1 = core_stats(5, {7}, 1);
  const SizeStats s4 = core_stats(5, {7}, 4);
  CHECK(s1.count == s4.count);
  CHECK(s1.max_size == s4.max_size);
  CHECK(s1.argmax == s4.argmax);
  CHECK(s1.unique_max == s4.unique_max);
  CHECK(s1.sum_size == s4.sum_size);
  CHECK(s1.sum_sq == s4.sum_sq);
}

TEST_CASE("oversemigroup polytope for <3,8>") {
  CHECK(apery_of_pair(3, 8) == std::vector<std::int64_t>{5, 2});
  const auto sys = oversemigroup_polytope(3, 8);
  const auto pts = point_set(sys, apery_of_pair(3, 8));
  const std::set<std::vector<std::int64_t>> expected = {
      {0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 1},
      {2, 2}, {3, 1}, {3, 2}, {4, 2}, {5, 2}};
  CHECK(pts == expected);
  // every point is a semigroup tuple dominated by Ap(<3,8>)
  for (const auto& x : pts) {
    CHECK(is_semigroup_tuple(AperyTuple::make(3, x)));
    CHECK(x[0] <= 5);
    CHECK(x[1] <= 2);
  }
}

TEST_CASE("count_oversemigroups") {
  CHECK(count_oversemigroups(3, 8) == 10);
  CHECK(count_oversemigroups(4, 13) == 66);
  CHECK(count_oversemigroups(2, 7) == 4);
  CHECK(count_oversemigroups(3, 4) == 4);
  CHECK_THROWS_AS(count_oversemigroups(4, 6), std::invalid_argument);
}

TEST_CASE("oversemigroups equal closure-checked supersets of <a,b>") {
  struct Case {
    std::int64_t a, b;
  };
  for (const Case& c : {Case{3, 8}, Case{2, 9}, Case{4, 9}, Case{5, 6}, Case{3, 13}}) {
    const auto s = NumericalSemigroup::from_generators({c.a, c.b});
    const auto& gaps = s.set().gaps();
    REQUIRE(gaps.size() <= 16);
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
      std::vector<std::int64_t> sub;
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (mask >> i & 1) sub.push_back(gaps[i]);
      }
      if (NumericalSet::from_gaps(sub).closed_under_addition()) ++count;
    }
    REQUIRE(BigInt(count) == count_oversemigroups(c.a, c.b));
  }
}

TEST_CASE("genus stratification") {
  const auto strata = count_oversemigroups_by_genus(3, 8);
  const std::map<std::int64_t, BigInt> expected = {{0, 1}, {1, 1}, {2, 1}, {3, 2},
                                                   {4, 2}, {5, 1}, {6, 1}, {7, 1}};
  CHECK(strata == expected);
  BigInt total = 0;
  for (const auto& [n, c] : count_oversemigroups_by_genus(4, 13)) total += c;
  CHECK(total == 66);
  CHECK_THROWS_AS(count_oversemigroups_by_genus(5, 6), std::invalid_argument);
  CHECK_FALSE(oversemigroups_by_genus_raw(5, 6).empty());
}

TEST_CASE("ratio table") {
  const auto rows = semigroup_core_ratio(3, 20);
  for (const auto& r : rows) {
    REQUIRE(r.ratio == BigRational(r.oversemigroups, r.cores));
    REQUIRE(r.oversemigroups == overs3_formula(r.b / 6, r.b % 6));
  }
  CHECK_THROWS_AS(semigroup_core_ratio(5, 10), std::invalid_argument);
  // every 2-core is a staircase and comes from a semigroup, so the a = 2
  // ratio is identically 1
  for (const auto& r : semigroup_core_ratio(2, 31)) {
    REQUIRE(r.ratio == BigRational(1));
  }
}
