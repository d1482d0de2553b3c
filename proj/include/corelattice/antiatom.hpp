#pragma once

#include <cstdint>
#include <vector>

#include "corelattice/bigint.hpp"
#include "corelattice/numset.hpp"

namespace corelattice {

// Answer to the anti-atom question for S: how many numerical sets have atom
// monoid S (equivalently, how many partitions have hook set N \ S).
struct AntiAtomReport {
  NumericalSemigroup semigroup;
  std::int64_t p_value = 0;
  std::int64_t m_size = 0;
  std::vector<NumericalSet> witnesses;  // ascending by gap list
};

// Scans the 2^|M(S)| sets S u U, U a subset of M(S); every T with A(T) = S
// lies in that range since S is contained in T is contained in S* = S u M(S).
AntiAtomReport anti_atom(const NumericalSemigroup& s);

enum class SymmetryClass { Symmetric, Pseudosymmetric, TwoMissing, Other };

struct Classification {
  SymmetryClass kind = SymmetryClass::Other;
  std::int64_t m_size = 0;
  std::int64_t p_value = 0;
};

// Classifies by |M(S)| and asserts the implied P constraints:
// |M|=0 => P=1, |M|=1 => P=2, |M|=2 => P in {2,3}.
Classification classify_small_m(const NumericalSemigroup& s);

// R_N = {0, (N+1)/2} u {even numbers strictly between (N+1)/2 and N-1}
// u {N+1, ->}, for odd N >= 11. Checks P(R_N) = 2 and
// |M(R_N)| = 2*ceil((N-1)/4).
NumericalSemigroup family_R(std::int64_t n);

// S_N = {0, N+1, N+2, ...}, the semigroup with gaps {1..N}.
NumericalSemigroup family_S(std::int64_t n);

struct GammaValue {
  std::int64_t n = 0;
  BigInt p;            // P(S_N)
  BigInt denominator;  // 2^(N-1), the number of sets with Frobenius number N
  BigRational value;   // gamma_N
};

// gamma_N = P(S_N) / 2^(N-1); exhaustive, budget-capped.
GammaValue gamma(std::int64_t n);

// S(N): number of numerical semigroups with Frobenius number N, by exhaustive
// closure-checked scan; asserts the Backelin bound S(N) <= 4*2^((N-1)/2).
BigInt count_semigroups_by_frobenius(std::int64_t n);

}  // namespace corelattice
