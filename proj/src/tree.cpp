#include "corelattice/tree.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "corelattice/antiatom.hpp"
#include "corelattice/bigint.hpp"

namespace corelattice {

std::vector<TreeNode> build_tree(std::int64_t max_genus, bool annotate) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  if (max_genus > 30) throw BudgetError("tree generation is capped at genus 30");
  std::vector<TreeNode> nodes;
  TreeNode root;
  root.semigroup = NumericalSemigroup::from_set(NumericalSet::natural());
  root.genus = 0;
  root.generators = root.semigroup.minimal_generators();
  nodes.push_back(std::move(root));

  std::size_t level_begin = 0;
  for (std::int64_t g = 0; g < max_genus; ++g) {
    const std::size_t level_end = nodes.size();
    for (std::size_t pi = level_begin; pi < level_end; ++pi) {
      // effective generators recomputed per node; ordering gives the
      // deterministic traversal
      const auto effective = nodes[pi].semigroup.effective_generators();
      for (std::int64_t e : effective) {
        std::vector<std::int64_t> gaps = nodes[pi].semigroup.set().gaps();
        gaps.push_back(e);  // e exceeds the parent's Frobenius number
        TreeNode child;
        child.semigroup =
            NumericalSemigroup::from_set(NumericalSet::from_gaps(std::move(gaps)));
        child.genus = g + 1;
        child.generators = child.semigroup.minimal_generators();
        child.parent = static_cast<std::int64_t>(pi);
        nodes.push_back(std::move(child));
      }
    }
    level_begin = level_end;
  }
  if (annotate) {
    for (auto& node : nodes) {
      const AntiAtomReport rep = anti_atom(node.semigroup);
      node.m_size = rep.m_size;
      node.p_value = rep.p_value;
    }
  }
  return nodes;
}

std::vector<std::int64_t> genus_census(std::int64_t max_genus) {
  const auto nodes = build_tree(max_genus, false);
  std::vector<std::int64_t> census(static_cast<std::size_t>(max_genus) + 1, 0);
  for (const auto& n : nodes) ++census[static_cast<std::size_t>(n.genus)];
  return census;
}

std::vector<Figure2Row> figure2_table() {
  std::vector<Figure2Row> rows;
  for (const auto& node : build_tree(5, true)) {
    rows.push_back({node.generators, *node.m_size, *node.p_value});
  }
  return rows;
}

std::string tree_dot(const std::vector<TreeNode>& nodes) {
  std::ostringstream out;
  out << "digraph semigroup_tree {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"<";
    for (std::size_t j = 0; j < nodes[i].generators.size(); ++j) {
      if (j) out << ",";
      out << nodes[i].generators[j];
    }
    out << ">";
    if (nodes[i].m_size) {
      out << "\\n|M|=" << *nodes[i].m_size << " P=" << *nodes[i].p_value;
    }
    out << "\"];\n";
    if (nodes[i].parent >= 0) {
      out << "  n" << nodes[i].parent << " -> n" << i << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace corelattice
