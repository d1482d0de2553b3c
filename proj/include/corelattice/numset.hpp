#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace corelattice {

// A cofinite subset of N containing 0, stored as its finite gap set plus a
// bitset of [0, F] for O(1) membership. The empty gap set is N itself, with
// frobenius() == -1 by convention.
class NumericalSet {
 public:
  NumericalSet() = default;  // N

  static NumericalSet natural() { return NumericalSet(); }

  // gaps must be strictly increasing positive integers.
  static NumericalSet from_gaps(std::vector<std::int64_t> gaps);

  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
  bool is_natural() const { return gaps_.empty(); }

  // n must be nonnegative; everything above the Frobenius number is present.
  bool contains(std::int64_t n) const;

  // Elements of the set in [0, n], ascending.
  std::vector<std::int64_t> elements_upto(std::int64_t n) const;

  // T* = {F - u : u in Z \ T}; N is self-dual.
  NumericalSet dual() const;

  // Exactly one of i, F-i belongs, for every i in [0, F]. N counts as
  // symmetric (vacuous).
  bool is_symmetric() const;

  bool closed_under_addition() const;
  // Smallest (s, t) with s <= t, both in the set, s + t <= F + 1 missing.
  std::optional<std::pair<std::int64_t, std::int64_t>> closure_violation() const;

  bool operator==(const NumericalSet& other) const { return gaps_ == other.gaps_; }
  bool operator!=(const NumericalSet& other) const { return gaps_ != other.gaps_; }
  bool operator<(const NumericalSet& other) const { return gaps_ < other.gaps_; }

  // Membership words, bit i = 1 iff i in T, i in [0, F]. Empty for N.
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::int64_t> gaps_;
  std::vector<std::uint64_t> words_;
};

class NumericalSemigroup {
 public:
  NumericalSemigroup() = default;  // N

  // Validates closure; the error message names a violating pair.
  static NumericalSemigroup from_set(NumericalSet set);

  // <n1,...,nt>; gcd must be 1, else the complement is infinite.
  static NumericalSemigroup from_generators(const std::vector<std::int64_t>& gens);

  const NumericalSet& set() const { return set_; }
  std::int64_t frobenius() const { return set_.frobenius(); }
  std::int64_t genus() const { return set_.genus(); }

  // M(S) = {n in [0,F] : n not in S and F-n not in S}, ascending.
  std::vector<std::int64_t> missing_pairs() const;

  bool is_symmetric() const { return set_.is_symmetric(); }
  // F even and exactly one of i, F-i present for every i in [0, F/2).
  bool is_pseudosymmetric() const;

  // Positive elements not expressible as a sum of two smaller positive
  // elements.
  std::vector<std::int64_t> minimal_generators() const;
  // Minimal generators greater than the Frobenius number.
  std::vector<std::int64_t> effective_generators() const;

  bool operator==(const NumericalSemigroup& o) const { return set_ == o.set_; }
  bool operator<(const NumericalSemigroup& o) const { return set_ < o.set_; }

 private:
  friend NumericalSemigroup atom_monoid(const NumericalSet&);
  struct Trusted {};
  NumericalSemigroup(NumericalSet set, Trusted) : set_(std::move(set)) {}

  NumericalSet set_;
};

// A(T) = {n in N : n + T is contained in T}.
NumericalSemigroup atom_monoid(const NumericalSet& t);

}  // namespace corelattice
