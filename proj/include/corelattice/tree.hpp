#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corelattice/numset.hpp"

namespace corelattice {

// Node of the semigroup tree rooted at N. Children are obtained by removing
// one effective generator (a minimal generator above the Frobenius number);
// every semigroup appears exactly once, at depth equal to its genus.
struct TreeNode {
  NumericalSemigroup semigroup;
  std::int64_t genus = 0;
  std::vector<std::int64_t> generators;  // minimal generating set
  std::int64_t parent = -1;              // index into the flat node list
  std::optional<std::int64_t> m_size;    // |M(S)| when annotated
  std::optional<std::int64_t> p_value;   // P(S) when annotated
};

// Breadth-first by genus; within a level, children follow their parents in
// order, each parent's children ordered by removed generator ascending.
std::vector<TreeNode> build_tree(std::int64_t max_genus, bool annotate);

// Node counts per genus level, 0..max_genus.
std::vector<std::int64_t> genus_census(std::int64_t max_genus);

struct Figure2Row {
  std::vector<std::int64_t> gens;
  std::int64_t m_size = 0;
  std::int64_t p_value = 0;
};

// Computed (generators, |M|, P) for every node of genus <= 5.
std::vector<Figure2Row> figure2_table();

// Graphviz rendering.
std::string tree_dot(const std::vector<TreeNode>& nodes);

}  // namespace corelattice
