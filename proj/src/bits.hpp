#pragma once

// Internal word-level helpers over membership bitsets. A set with Frobenius
// number F is stored as ceil((F+1)/64) words, bit i = 1 iff i is a member.

#include <cstdint>
#include <vector>

namespace corelattice::detail {

inline std::size_t word_count(std::int64_t frob) {
  return frob < 0 ? 0 : static_cast<std::size_t>(frob / 64 + 1);
}

// Bits [0, n) set, for n in [0, 64].
inline std::uint64_t low_mask(std::int64_t n) {
  if (n <= 0) return 0;
  if (n >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

inline bool get_bit(const std::vector<std::uint64_t>& w, std::int64_t i) {
  return (w[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1;
}

inline void set_bit(std::vector<std::uint64_t>& w, std::int64_t i) {
  w[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
}

// Word k of (w >> shift), reading zeros beyond the end.
inline std::uint64_t shifted_word(const std::vector<std::uint64_t>& w,
                                  std::size_t k, std::int64_t shift) {
  const std::size_t q = static_cast<std::size_t>(shift / 64);
  const int r = static_cast<int>(shift % 64);
  const std::size_t i = k + q;
  std::uint64_t lo = i < w.size() ? w[i] : 0;
  if (r == 0) return lo;
  std::uint64_t hi = (i + 1) < w.size() ? w[i + 1] : 0;
  return (lo >> r) | (hi << (64 - r));
}

// True iff every member t <= frob - n satisfies t + n member, i.e.
// (T + n) stays inside T where it can be checked. This is the atom test for
// candidate n (t = 0 forces n itself to be a member).
inline bool atom_candidate_ok(const std::vector<std::uint64_t>& w,
                              std::int64_t frob, std::int64_t n) {
  const std::int64_t upto = frob - n;  // inclusive; < 0 means nothing to check
  for (std::size_t k = 0; static_cast<std::int64_t>(k) * 64 <= upto; ++k) {
    std::uint64_t mask = ~std::uint64_t{0};
    const std::int64_t remaining = upto + 1 - static_cast<std::int64_t>(k) * 64;
    if (remaining < 64) mask = low_mask(remaining);
    const std::uint64_t viol = w[k] & ~shifted_word(w, k, n) & mask;
    if (viol != 0) return false;
  }
  return true;
}

// --- single-word fast path (F <= 63), used by the exhaustive scans ---

// Members of [0, F] as one word.
inline std::uint64_t word_from_gapmask(std::uint64_t gapmask, std::int64_t frob) {
  return low_mask(frob + 1) & ~gapmask;
}

inline bool atom_candidate_ok64(std::uint64_t w, std::int64_t frob, std::int64_t n) {
  return (w & ~(w >> n) & low_mask(frob - n + 1)) == 0;
}

// Membership word of A(T) restricted to [0, F].
inline std::uint64_t atom_word64(std::uint64_t w, std::int64_t frob) {
  std::uint64_t a = 1;  // 0 is always an atom
  for (std::int64_t n = 1; n <= frob; ++n) {
    if (atom_candidate_ok64(w, frob, n)) a |= std::uint64_t{1} << n;
  }
  return a;
}

inline bool is_semigroup_word64(std::uint64_t w, std::int64_t frob) {
  for (std::int64_t n = 1; n <= frob; ++n) {
    if (((w >> n) & 1) && !atom_candidate_ok64(w, frob, n)) return false;
  }
  return true;
}

}  // namespace corelattice::detail
