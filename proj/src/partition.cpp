#include "corelattice/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "bits.hpp"

namespace corelattice {

Partition Partition::from_parts(std::vector<std::int64_t> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("parts must be weakly decreasing");
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (std::int64_t p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_[0]));
  for (std::int64_t j = 1; j <= parts_[0]; ++j) {
    std::int64_t cnt = 0;
    for (std::int64_t p : parts_) {
      if (p >= j) ++cnt;
    }
    conj[static_cast<std::size_t>(j - 1)] = cnt;
  }
  return from_parts(std::move(conj));
}

Partition phi(const NumericalSet& t) {
  // The j-th up-step from the bottom is at gap g_j and has g_j - (j-1)
  // right-steps before it; reading rows top-down reverses the order.
  const auto& gaps = t.gaps();
  const std::int64_t k = t.genus();
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    parts[static_cast<std::size_t>(i)] =
        gaps[static_cast<std::size_t>(k - 1 - i)] - (k - 1 - i);
  }
  return Partition::from_parts(std::move(parts));
}

NumericalSet phi_inverse(const Partition& lam) {
  const auto& parts = lam.parts();
  const std::int64_t k = static_cast<std::int64_t>(parts.size());
  std::vector<std::int64_t> gaps(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) {
    gaps[static_cast<std::size_t>(j)] =
        parts[static_cast<std::size_t>(k - 1 - j)] + j;
  }
  return NumericalSet::from_gaps(std::move(gaps));
}

HookData hooks(const Partition& lam) {
  HookData h;
  const auto& parts = lam.parts();
  const auto conj = lam.conjugate().parts();
  h.per_cell.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(parts[i]));
    for (std::int64_t j = 1; j <= parts[i]; ++j) {
      // arm + leg + 1
      const std::int64_t hook = (parts[i] - j) +
                                (conj[static_cast<std::size_t>(j - 1)] -
                                 static_cast<std::int64_t>(i + 1)) +
                                1;
      row[static_cast<std::size_t>(j - 1)] = hook;
      h.hook_multiset.push_back(hook);
    }
    h.per_cell.push_back(std::move(row));
  }
  std::sort(h.hook_multiset.begin(), h.hook_multiset.end());
  h.hook_set = h.hook_multiset;
  h.hook_set.erase(std::unique(h.hook_set.begin(), h.hook_set.end()),
                   h.hook_set.end());
  return h;
}

bool is_a_core(const Partition& lam, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("core modulus must be >= 1");
  // a not in hook set <=> a in A(phi_inverse(lam)); the first-column hooks
  // are exactly the gaps of the associated numerical set.
  const NumericalSet t = phi_inverse(lam);
  if (a > t.frobenius()) return true;
  return detail::atom_candidate_ok(t.words(), t.frobenius(), a);
}

}  // namespace corelattice
