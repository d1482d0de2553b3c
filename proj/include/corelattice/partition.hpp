#pragma once

#include <cstdint>
#include <vector>

#include "corelattice/numset.hpp"

namespace corelattice {

// Integer partition: weakly decreasing positive parts (empty allowed).
class Partition {
 public:
  Partition() = default;  // empty partition

  static Partition from_parts(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t size() const;  // sum of parts
  bool empty() const { return parts_.empty(); }

  // Transpose of the Young diagram.
  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<std::int64_t> parts_;
};

struct HookData {
  // per_cell[i][j] = hook length of cell (row i, column j), row 0 on top.
  std::vector<std::vector<std::int64_t>> per_cell;
  std::vector<std::int64_t> hook_set;       // ascending, distinct
  std::vector<std::int64_t> hook_multiset;  // ascending, with multiplicity
};

// Profile walk n = 0..F(T): right-step if n in T, up-step otherwise. Row 1
// (top) is the longest row; the walk starts at the bottom-left corner.
Partition phi(const NumericalSet& t);

// Gaps of the result are the labels of the vertical steps of the profile.
NumericalSet phi_inverse(const Partition& lam);

HookData hooks(const Partition& lam);

// a-core test: a not in the hook set. Requires a >= 1.
bool is_a_core(const Partition& lam, std::int64_t a);

}  // namespace corelattice
