#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "corelattice/antiatom.hpp"
#include "corelattice/apery.hpp"
#include "corelattice/bigint.hpp"
#include "corelattice/numset.hpp"
#include "corelattice/partition.hpp"
#include "corelattice/polytope.hpp"
#include "corelattice/tree.hpp"

namespace corelattice {

// Canonical set notation: elements up to F+1 then an arrow, e.g.
// "0,1,4,5,7,→". Input also accepts the ASCII fallback "->".
std::string format_set(const NumericalSet& t);
NumericalSet parse_set(std::string_view text);

// "(4,2,2)"; the empty partition is "()".
std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

// "a=4;[0,2,1]"
std::string format_tuple(const AperyTuple& t);
AperyTuple parse_tuple(std::string_view text);

// Young diagram with per-cell hook lengths.
std::string render_hook_grid(const Partition& p);

// Numbers above 2^53 are emitted as decimal strings to stay safe for
// double-based JSON consumers.
nlohmann::json bigint_json(const BigInt& v);
nlohmann::json rational_json(const BigRational& v);  // {"num":..., "den":...}

nlohmann::json set_json(const NumericalSet& t);
nlohmann::json partition_json(const Partition& p);
nlohmann::json tuple_json(const AperyTuple& t);
nlohmann::json stats_json(const SizeStats& s);
nlohmann::json antiatom_json(const AntiAtomReport& rep, bool include_witnesses);
nlohmann::json tree_node_json(const std::vector<TreeNode>& nodes, std::size_t i);
nlohmann::json gamma_json(const GammaValue& g);

}  // namespace corelattice
