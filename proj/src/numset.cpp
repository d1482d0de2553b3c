#include "corelattice/numset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "corelattice/bigint.hpp"
#include "bits.hpp"

namespace corelattice {

using detail::atom_candidate_ok;
using detail::get_bit;
using detail::set_bit;
using detail::word_count;

NumericalSet NumericalSet::from_gaps(std::vector<std::int64_t> gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] <= 0)
      throw std::invalid_argument("gap must be positive (0 is never a gap)");
    if (i > 0 && gaps[i] <= gaps[i - 1])
      throw std::invalid_argument("gaps must be strictly increasing");
  }
  NumericalSet t;
  t.gaps_ = std::move(gaps);
  if (!t.gaps_.empty()) {
    const std::int64_t f = t.gaps_.back();
    t.words_.assign(word_count(f), 0);
    std::size_t gi = 0;
    for (std::int64_t n = 0; n <= f; ++n) {
      if (gi < t.gaps_.size() && t.gaps_[gi] == n) {
        ++gi;
      } else {
        set_bit(t.words_, n);
      }
    }
  }
  return t;
}

bool NumericalSet::contains(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("membership is defined for n >= 0");
  if (n > frobenius()) return true;
  return get_bit(words_, n);
}

std::vector<std::int64_t> NumericalSet::elements_upto(std::int64_t n) const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= n; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

NumericalSet NumericalSet::dual() const {
  const std::int64_t f = frobenius();
  if (f < 0) return NumericalSet();  // N is self-dual
  // w in [0,F] is a gap of T* iff F-w is in T; descending w gives the gaps
  // in ascending order.
  std::vector<std::int64_t> dual_gaps;
  for (std::int64_t w = f; w >= 0; --w) {
    if (get_bit(words_, w)) dual_gaps.push_back(f - w);
  }
  return from_gaps(std::move(dual_gaps));
}

bool NumericalSet::is_symmetric() const {
  const std::int64_t f = frobenius();
  for (std::int64_t i = 0; i <= f; ++i) {
    if (get_bit(words_, i) == get_bit(words_, f - i)) return false;
  }
  return true;
}

std::optional<std::pair<std::int64_t, std::int64_t>>
NumericalSet::closure_violation() const {
  const std::int64_t f = frobenius();
  for (std::int64_t s = 1; s <= f; ++s) {
    if (!get_bit(words_, s)) continue;
    for (std::int64_t t = s; t + s <= f; ++t) {
      if (get_bit(words_, t) && !get_bit(words_, s + t)) return {{s, t}};
    }
  }
  return std::nullopt;
}

bool NumericalSet::closed_under_addition() const {
  const std::int64_t f = frobenius();
  for (std::int64_t s = 1; s <= f; ++s) {
    if (get_bit(words_, s) && !atom_candidate_ok(words_, f, s)) return false;
  }
  return true;
}

NumericalSemigroup atom_monoid(const NumericalSet& t) {
  const std::int64_t f = t.frobenius();
  std::vector<std::int64_t> atom_gaps;
  for (std::int64_t n = 1; n <= f; ++n) {
    if (!atom_candidate_ok(t.words(), f, n)) atom_gaps.push_back(n);
  }
  return NumericalSemigroup(NumericalSet::from_gaps(std::move(atom_gaps)),
                            NumericalSemigroup::Trusted{});
}

NumericalSemigroup NumericalSemigroup::from_set(NumericalSet set) {
  if (auto viol = set.closure_violation()) {
    const auto [s, t] = *viol;
    throw std::invalid_argument("not closed: " + std::to_string(s) + "+" +
                                std::to_string(t) + "=" +
                                std::to_string(s + t) + " missing");
  }
  return NumericalSemigroup(std::move(set), Trusted{});
}

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw std::invalid_argument("at least one generator required");
  std::int64_t g = 0;
  std::int64_t mx = 0;
  std::int64_t mn = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t n : gens) {
    if (n <= 0) throw std::invalid_argument("generators must be positive");
    g = std::gcd(g, n);
    mx = std::max(mx, n);
    mn = std::min(mn, n);
  }
  if (g != 1)
    throw std::invalid_argument("infinite complement: gcd of generators is " +
                                std::to_string(g));
  // Sieve up to a window that ends with min(gens) consecutive members; such a
  // run proves everything beyond is reachable. Start at max^2 (covers the
  // two-generator Frobenius bound) and double if needed.
  constexpr std::int64_t kCellCap = std::int64_t{1} << 26;
  std::int64_t bound = std::max<std::int64_t>(mx * mx, mn + 1);
  for (;;) {
    if (bound > kCellCap)
      throw BudgetError("generator sieve exceeds " + std::to_string(kCellCap) +
                        " cells");
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (std::int64_t n : gens) {
      for (std::int64_t i = n; i <= bound; ++i) {
        if (reach[static_cast<std::size_t>(i - n)]) reach[static_cast<std::size_t>(i)] = 1;
      }
    }
    std::int64_t run = 0;
    bool tail_run = false;
    for (std::int64_t i = bound; i >= 0; --i) {
      if (reach[static_cast<std::size_t>(i)]) {
        if (++run >= mn) {
          tail_run = (i + run - 1 == bound);
          break;
        }
      } else {
        break;
      }
    }
    if (!tail_run) {
      bound *= 2;
      continue;
    }
    std::vector<std::int64_t> gaps;
    for (std::int64_t i = 1; i <= bound; ++i) {
      if (!reach[static_cast<std::size_t>(i)]) gaps.push_back(i);
    }
    return NumericalSemigroup(NumericalSet::from_gaps(std::move(gaps)), Trusted{});
  }
}

std::vector<std::int64_t> NumericalSemigroup::missing_pairs() const {
  const std::int64_t f = frobenius();
  std::vector<std::int64_t> m;
  for (std::int64_t n = 0; n <= f; ++n) {
    if (!set_.contains(n) && !set_.contains(f - n)) m.push_back(n);
  }
  return m;
}

bool NumericalSemigroup::is_pseudosymmetric() const {
  const std::int64_t f = frobenius();
  if (f < 0 || f % 2 != 0) return false;
  for (std::int64_t i = 0; i < f / 2; ++i) {
    if (set_.contains(i) == set_.contains(f - i)) return false;
  }
  return true;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  const std::int64_t f = frobenius();
  if (f < 0) return {1};  // N
  std::int64_t mult = 1;
  while (!set_.contains(mult)) ++mult;
  std::vector<std::int64_t> out;
  for (std::int64_t s = 1; s <= f + mult; ++s) {
    if (!set_.contains(s)) continue;
    bool sum = false;
    for (std::int64_t t = mult; t <= s - t; ++t) {
      if (set_.contains(t) && set_.contains(s - t)) {
        sum = true;
        break;
      }
    }
    if (!sum) out.push_back(s);
  }
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::effective_generators() const {
  const std::int64_t f = frobenius();
  std::vector<std::int64_t> out;
  for (std::int64_t g : minimal_generators()) {
    if (g > f) out.push_back(g);
  }
  return out;
}

}  // namespace corelattice
