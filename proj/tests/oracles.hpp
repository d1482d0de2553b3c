#pragma once

// Naive reference implementations used as independent oracles. These work
// straight from the definitions on small explicit sets and grids, never
// through the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "corelattice/numset.hpp"
#include "corelattice/partition.hpp"

namespace oracles {

using corelattice::NumericalSet;
using corelattice::Partition;

inline std::set<std::int64_t> members_upto(const NumericalSet& t, std::int64_t hi) {
  std::set<std::int64_t> out;
  for (std::int64_t n = 0; n <= hi; ++n) {
    if (t.contains(n)) out.insert(n);
  }
  return out;
}

// A(T) by the definition: n + T stays inside T.
inline std::vector<std::int64_t> naive_atom_gaps(const NumericalSet& t) {
  const std::int64_t f = t.frobenius();
  std::vector<std::int64_t> gaps;
  for (std::int64_t n = 1; n <= f; ++n) {
    bool atom = true;
    for (std::int64_t u = 0; u <= f; ++u) {
      if (!t.contains(u)) continue;
      if (n + u <= f && !t.contains(n + u)) {
        atom = false;
        break;
      }
    }
    if (!atom) gaps.push_back(n);
  }
  return gaps;
}

inline bool naive_closed(const NumericalSet& t) {
  const std::int64_t f = t.frobenius();
  for (std::int64_t s = 1; s <= f; ++s) {
    for (std::int64_t u = s; s + u <= f; ++u) {
      if (t.contains(s) && t.contains(u) && !t.contains(s + u)) return false;
    }
  }
  return true;
}

// phi by literally simulating the profile walk.
inline std::vector<std::int64_t> naive_phi_parts(const NumericalSet& t) {
  std::vector<std::int64_t> rows_bottom_up;
  std::int64_t rights = 0;
  for (std::int64_t n = 0; n <= t.frobenius(); ++n) {
    if (t.contains(n)) {
      ++rights;
    } else {
      rows_bottom_up.push_back(rights);
    }
  }
  std::reverse(rows_bottom_up.begin(), rows_bottom_up.end());
  return rows_bottom_up;
}

// Hook lengths by walking the explicit cell grid.
inline std::vector<std::vector<std::int64_t>> naive_hook_grid(const Partition& p) {
  const auto& parts = p.parts();
  std::vector<std::vector<std::int64_t>> grid;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::int64_t> row;
    for (std::int64_t j = 1; j <= parts[i]; ++j) {
      std::int64_t arm = parts[i] - j;
      std::int64_t leg = 0;
      for (std::size_t ii = i + 1; ii < parts.size(); ++ii) {
        if (parts[ii] >= j) ++leg;
      }
      row.push_back(arm + leg + 1);
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

// Every numerical set with Frobenius number exactly f.
template <typename Fn>
void for_each_set_with_frobenius(std::int64_t f, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << (f - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::int64_t> gaps;
    for (std::int64_t i = 1; i < f; ++i) {
      if (mask >> (i - 1) & 1) gaps.push_back(i);
    }
    gaps.push_back(f);
    fn(NumericalSet::from_gaps(std::move(gaps)));
  }
}

// Every partition of size at most max_size.
template <typename Fn>
void for_each_partition_upto(std::int64_t max_size, Fn&& fn) {
  std::vector<std::int64_t> parts;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
    fn(parts);
    for (std::int64_t p = std::min(max_part, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, max_size, max_size);
}

}  // namespace oracles
