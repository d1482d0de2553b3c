#pragma once

#include <cstdint>
#include <vector>

#include "corelattice/bigint.hpp"
#include "corelattice/numset.hpp"

namespace corelattice {

// Apery coordinates with respect to a modulus a >= 2: a*x_i + i is the
// smallest element of the set congruent to i mod a. Tuples of N^(a-1) are in
// bijection with numerical sets whose atom monoid contains a, i.e. with
// a-core partitions.
struct AperyTuple {
  std::int64_t a = 2;
  std::vector<std::int64_t> x;  // length a-1, entries >= 0

  static AperyTuple make(std::int64_t a, std::vector<std::int64_t> x);

  bool all_zero() const;
  bool operator==(const AperyTuple& o) const { return a == o.a && x == o.x; }
};

// Requires a in A(T).
AperyTuple apery_of(const NumericalSet& t, std::int64_t a);

NumericalSet set_from_apery(const AperyTuple& t);

// Genus of the associated numerical set: sum of the coordinates.
std::int64_t genus_of(const AperyTuple& t);

// max(a*x_i + i - a); undefined (error) on the all-zero tuple (T = N).
std::int64_t frobenius_of(const AperyTuple& t);

// Size of the associated partition, the quadratic form F_a. Both printed
// closed forms are evaluated and must agree.
std::int64_t size_of(const AperyTuple& t);

// Apery tuple of the dual set; involution. All-zero maps to all-zero.
AperyTuple conjugate_apery(const AperyTuple& t);

// Rosales et al. characterization: x_i + x_j >= x_{i+j} (i+j <= a-1) and
// x_i + x_j + 1 >= x_{i+j-a} (i+j > a); i+j = a imposes no constraint.
bool is_semigroup_tuple(const AperyTuple& t);

// Number of a-cores with maximum hook length a*k + l, 1 <= l <= a-1:
// (k+2)^(l-1) * (k+1)^(a-l-1).
BigInt count_acores_by_max_hook(std::int64_t a, std::int64_t k, std::int64_t l);

// Number of a-cores with maximum hook length below a*k: (k+1)^(a-1).
BigInt count_acores_max_hook_below(std::int64_t a, std::int64_t k);

// Number of a-cores with exactly g parts, C(g+a-2, a-2), or with at most g
// parts, C(g+a-1, a-1).
BigInt count_acores_by_parts(std::int64_t a, std::int64_t g, bool at_most);

}  // namespace corelattice
