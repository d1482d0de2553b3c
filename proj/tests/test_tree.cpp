#include <doctest.h>

#include <set>

#include "corelattice/bigint.hpp"
#include "corelattice/tree.hpp"

using namespace corelattice;

TEST_CASE("roots and first levels") {
  const auto nodes0 = build_tree(0, false);
  REQUIRE(nodes0.size() == 1);
  CHECK(nodes0[0].generators == std::vector<std::int64_t>{1});
  CHECK(nodes0[0].parent == -1);

  const auto nodes1 = build_tree(1, false);
  REQUIRE(nodes1.size() == 2);
  CHECK(nodes1[1].generators == std::vector<std::int64_t>{2, 3});

  const auto nodes2 = build_tree(2, false);
  std::set<std::vector<std::int64_t>> level2;
  for (const auto& n : nodes2) {
    if (n.genus == 2) level2.insert(n.generators);
  }
  CHECK(level2 == std::set<std::vector<std::int64_t>>{{2, 5}, {3, 4, 5}});
}

TEST_CASE("census") {
  CHECK(genus_census(5) == std::vector<std::int64_t>{1, 1, 2, 4, 7, 12});
  CHECK(genus_census(0) == std::vector<std::int64_t>{1});
}

TEST_CASE("parent-child structure") {
  const auto nodes = build_tree(6, false);
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    REQUIRE(seen.insert(n.semigroup.set().gaps()).second);  // no duplicates
    if (n.parent < 0) continue;
    const auto& p = nodes[static_cast<std::size_t>(n.parent)];
    REQUIRE(n.genus == p.genus + 1);
    // the child's gap set extends the parent's by one effective generator
    const auto& pg = p.semigroup.set().gaps();
    const auto& cg = n.semigroup.set().gaps();
    REQUIRE(cg.size() == pg.size() + 1);
    REQUIRE(std::equal(pg.begin(), pg.end(), cg.begin()));
    REQUIRE(cg.back() > p.semigroup.frobenius());
  }
}

TEST_CASE("annotations reproduce the deep genus-5 node") {
  for (const auto& node : build_tree(5, true)) {
    if (node.generators == std::vector<std::int64_t>{6, 7, 8, 9, 10, 11}) {
      CHECK(*node.m_size == 4);
      CHECK(*node.p_value == 10);
      return;
    }
  }
  FAIL("node <6,...,11> not found");
}

TEST_CASE("figure2 table spots") {
  const auto rows = figure2_table();
  REQUIRE(rows.size() == 27);
  auto find = [&](std::vector<std::int64_t> g) {
    for (const auto& r : rows) {
      if (r.gens == g) return r;
    }
    FAIL("missing row");
    return rows[0];
  };
  CHECK(find({5, 6, 7, 8, 9}).m_size == 3);
  CHECK(find({5, 6, 7, 8, 9}).p_value == 6);
  CHECK(find({4, 7, 9, 10}).m_size == 3);
  CHECK(find({4, 7, 9, 10}).p_value == 4);
  CHECK(find({5, 7, 8, 9, 11}).m_size == 3);
  CHECK(find({5, 7, 8, 9, 11}).p_value == 6);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(build_tree(31, false), BudgetError);
  CHECK_THROWS_AS(build_tree(-1, false), std::invalid_argument);
}

TEST_CASE("dot output") {
  const auto nodes = build_tree(2, true);
  const std::string dot = tree_dot(nodes);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("<2,3>") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
