#include <doctest.h>

#include <numeric>

#include "corelattice/bigint.hpp"
#include "corelattice/numset.hpp"
#include "corelattice/text.hpp"
#include "oracles.hpp"

using namespace corelattice;

TEST_CASE("construction and basic accessors") {
  const NumericalSet t = NumericalSet::from_gaps({2, 3, 6});
  CHECK(t.frobenius() == 6);
  CHECK(t.genus() == 3);
  CHECK(format_set(t) == "0,1,4,5,7,→");

  CHECK(NumericalSet::natural().frobenius() == -1);
  CHECK(NumericalSet::natural().genus() == 0);

  CHECK_THROWS_AS(NumericalSet::from_gaps({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSet::from_gaps({3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSet::from_gaps({2, 2}), std::invalid_argument);
}

TEST_CASE("contains") {
  const NumericalSet t = parse_set("0,1,4,5,7,→");
  CHECK(t.contains(4));
  CHECK_FALSE(t.contains(6));
  CHECK(t.contains(100));
  CHECK(NumericalSet::natural().contains(0));
  CHECK_THROWS_AS(t.contains(-1), std::invalid_argument);
}

TEST_CASE("atom monoid examples") {
  CHECK(format_set(atom_monoid(parse_set("0,1,4,5,7,→")).set()) ==
        "0,4,7,→");
  CHECK(atom_monoid(NumericalSet::natural()).set() == NumericalSet::natural());
  CHECK(format_set(atom_monoid(parse_set("0,3,4,7,→")).set()) ==
        "0,4,7,→");
}

TEST_CASE("atom monoid against the naive oracle, exhaustive F <= 12") {
  for (std::int64_t f = 1; f <= 12; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      const NumericalSet atoms = atom_monoid(t).set();
      REQUIRE(atoms.gaps() == oracles::naive_atom_gaps(t));
      // A(T) is a subset of T and is closed
      for (std::int64_t n = 0; n <= f; ++n) {
        if (atoms.contains(n)) REQUIRE(t.contains(n));
      }
      REQUIRE(atoms.closed_under_addition());
    });
  }
}

TEST_CASE("A(T) = T iff T closed, exhaustive F <= 14") {
  for (std::int64_t f = 1; f <= 14; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      REQUIRE((atom_monoid(t).set() == t) == t.closed_under_addition());
      REQUIRE(t.closed_under_addition() == oracles::naive_closed(t));
    });
  }
}

TEST_CASE("dual examples") {
  CHECK(format_set(parse_set("0,1,4,5,7,→").dual()) == "0,3,4,7,→");
  const NumericalSet s23 = parse_set("0,2,3,→");
  CHECK(s23.dual() == s23);
  CHECK(NumericalSet::natural().dual() == NumericalSet::natural());
}

TEST_CASE("dual is an involution with the same atom monoid, F <= 16") {
  for (std::int64_t f = 1; f <= 16; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      const NumericalSet d = t.dual();
      REQUIRE(d.frobenius() == f);
      REQUIRE(d.dual() == t);
      REQUIRE(atom_monoid(d).set() == atom_monoid(t).set());
    });
  }
}

TEST_CASE("missing pairs examples") {
  const auto s036 = NumericalSemigroup::from_set(parse_set("0,3,6,→"));
  CHECK(s036.missing_pairs() == std::vector<std::int64_t>{1, 4});
  const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(s345.missing_pairs() == std::vector<std::int64_t>{1});
  const auto s4567 = NumericalSemigroup::from_generators({4, 5, 6, 7});
  CHECK(s4567.missing_pairs().size() == 2);
}

TEST_CASE("dual(S) = S union M(S) for all semigroups with F <= 20") {
  for (std::int64_t f = 1; f <= 20; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      if (!t.closed_under_addition()) return;
      const auto s = NumericalSemigroup::from_set(t);
      const auto m = s.missing_pairs();
      std::vector<std::int64_t> union_gaps;
      for (std::int64_t g : t.gaps()) {
        if (std::find(m.begin(), m.end(), g) == m.end()) union_gaps.push_back(g);
      }
      REQUIRE(t.dual() == NumericalSet::from_gaps(union_gaps));
    });
  }
}

TEST_CASE("symmetry classification") {
  CHECK(parse_set("0,2,4,5,→").is_symmetric());  // <2,5>
  CHECK_FALSE(parse_set("0,1,4,5,7,→").is_symmetric());
  CHECK_FALSE(NumericalSemigroup::from_generators({3, 4, 5}).is_symmetric());
  CHECK(NumericalSet::natural().is_symmetric());

  CHECK(NumericalSemigroup::from_generators({3, 4, 5}).is_pseudosymmetric());
  CHECK_FALSE(NumericalSemigroup::from_generators({2, 3}).is_pseudosymmetric());
  CHECK_FALSE(NumericalSemigroup::from_generators({4, 5, 6, 7}).is_pseudosymmetric());

  for (std::int64_t f = 1; f <= 14; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      if (!t.closed_under_addition()) return;
      const auto s = NumericalSemigroup::from_set(t);
      const auto m = s.missing_pairs();
      REQUIRE(s.is_symmetric() == m.empty());
      REQUIRE(s.is_pseudosymmetric() ==
              (m.size() == 1 && f % 2 == 0 && m[0] == f / 2));
    });
  }
}

TEST_CASE("semigroup_from_generators") {
  const auto s38 = NumericalSemigroup::from_generators({3, 8});
  CHECK(s38.set().gaps() == std::vector<std::int64_t>{1, 2, 4, 5, 7, 10, 13});
  CHECK(s38.frobenius() == 13);
  CHECK(s38.genus() == 7);

  CHECK(NumericalSemigroup::from_generators({2, 3}).set().gaps() ==
        std::vector<std::int64_t>{1});
  CHECK_THROWS_WITH_AS(NumericalSemigroup::from_generators({4, 6}),
                       doctest::Contains("infinite complement"),
                       std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}),
                  std::invalid_argument);

  // order and duplicates do not matter
  CHECK(NumericalSemigroup::from_generators({8, 3, 8}) == s38);
  // generators that only become coprime jointly
  const auto s = NumericalSemigroup::from_generators({6, 10, 15});
  CHECK(s.frobenius() == 29);
  CHECK(s.set().closed_under_addition());
}

TEST_CASE("genus of <a,b> is (a-1)(b-1)/2 for coprime a,b <= 15") {
  for (std::int64_t a = 2; a <= 15; ++a) {
    for (std::int64_t b = a + 1; b <= 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      REQUIRE(NumericalSemigroup::from_generators({a, b}).genus() ==
              (a - 1) * (b - 1) / 2);
    }
  }
}

TEST_CASE("minimal generators") {
  CHECK(NumericalSemigroup::from_generators({4, 5, 6, 7}).minimal_generators() ==
        std::vector<std::int64_t>{4, 5, 6, 7});
  CHECK(NumericalSemigroup::from_generators({1}).minimal_generators() ==
        std::vector<std::int64_t>{1});
  CHECK(NumericalSemigroup::from_generators({2, 5}).minimal_generators() ==
        std::vector<std::int64_t>{2, 5});
  // generating the semigroup from its minimal generators gives it back
  for (std::int64_t f = 1; f <= 12; ++f) {
    oracles::for_each_set_with_frobenius(f, [&](const NumericalSet& t) {
      if (!t.closed_under_addition()) return;
      const auto s = NumericalSemigroup::from_set(t);
      REQUIRE(NumericalSemigroup::from_generators(s.minimal_generators()) == s);
    });
  }
}

TEST_CASE("from_set names a violating pair") {
  CHECK_THROWS_WITH_AS(NumericalSemigroup::from_set(parse_set("0,1,3,→")),
                       doctest::Contains("not closed: 1+1=2 missing"),
                       std::invalid_argument);
}

TEST_CASE("atom monoid on wide sets crosses word boundaries correctly") {
  // deterministic pseudo-random sparse gap sets with large Frobenius numbers
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t frob = 64 + static_cast<std::int64_t>(next() % 240);
    std::vector<std::int64_t> gaps;
    for (std::int64_t v = 1; v < frob; ++v) {
      if (next() % 5 == 0) gaps.push_back(v);
    }
    gaps.push_back(frob);
    const NumericalSet t = NumericalSet::from_gaps(gaps);
    REQUIRE(atom_monoid(t).set().gaps() == oracles::naive_atom_gaps(t));
    REQUIRE(t.closed_under_addition() == oracles::naive_closed(t));
    REQUIRE(t.dual().dual() == t);
    REQUIRE(atom_monoid(t.dual()).set() == atom_monoid(t).set());
  }
}
