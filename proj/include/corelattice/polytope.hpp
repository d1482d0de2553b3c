#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "corelattice/apery.hpp"
#include "corelattice/bigint.hpp"

namespace corelattice {

// coeffs . x <= bound, with x >= 0 componentwise implicit.
struct LinearConstraint {
  std::vector<std::int64_t> coeffs;  // length dim
  std::int64_t bound = 0;
};

struct InequalitySystem {
  std::int64_t dim = 0;  // a - 1
  std::vector<LinearConstraint> constraints;
};

struct SizeStats {
  BigInt count = 0;
  std::int64_t max_size = 0;
  AperyTuple argmax;           // lexicographically first maximizer
  bool unique_max = true;      // exactly one point attains max_size
  BigInt sum_size = 0;
  BigInt sum_sq = 0;

  BigRational mean() const;  // exact rational
};

// The (a, b_1, ..., b_m)-core polytope: writes b_j = a*k_j + l_j and emits
// the families x_{l_j} <= k_j, x_{i+l_j} - x_i <= k_j (i+l_j < a),
// x_{i+l_j-a} - x_i <= k_j + 1 (i+l_j > a), one per j. Requires a >= 2,
// a not dividing any b_j, and gcd(a, b_1, ..., b_m) = 1 (boundedness).
InequalitySystem core_polytope(std::int64_t a, const std::vector<std::int64_t>& bs);

// Sound componentwise upper bounds for all integer points, from shortest
// paths on Z_a (arc i -> i + l_j with weight k_j + 1, seeded at l_j with
// weight k_j).
std::vector<std::int64_t> coordinate_bounds(std::int64_t a,
                                            const std::vector<std::int64_t>& bs);

// Every tuple in the box [0, bounds] satisfying all constraints, emitted in
// lexicographic order. Depth-first: each constraint is enforced as soon as
// its last variable is assigned, which prunes every invalid prefix.
void enumerate_lattice_points(
    const InequalitySystem& sys, const std::vector<std::int64_t>& bounds,
    const std::function<void(const std::vector<std::int64_t>&)>& emit);

std::vector<AperyTuple> lattice_points(std::int64_t a, const InequalitySystem& sys,
                                       const std::vector<std::int64_t>& bounds);

// Enumerates the core polytope and folds partition sizes. In the single-b
// coprime case the count, max (with uniqueness) and mean are cross-checked
// against the Anderson, Olsson-Stanton and Armstrong closed forms.
SizeStats core_stats(std::int64_t a, const std::vector<std::int64_t>& bs,
                     int jobs = 1);

// Apery tuple of <a, b> itself (gcd(a,b) = 1, a not dividing b).
std::vector<std::int64_t> apery_of_pair(std::int64_t a, std::int64_t b);

// Semigroup inequalities plus the componentwise bound x <= Ap(<a,b>); the
// lattice points are the oversemigroups of <a,b>.
InequalitySystem oversemigroup_polytope(std::int64_t a, std::int64_t b);

// Stats over the oversemigroup polytope (no closed-form cross-check).
SizeStats oversemigroup_stats(std::int64_t a, std::int64_t b, int jobs = 1);

// O(<a,b>) by lattice enumeration; asserts the closed forms for a in
// {2, 3, 4}.
BigInt count_oversemigroups(std::int64_t a, std::int64_t b);

// Raw stratified enumerations (any valid a).
std::map<std::int64_t, BigInt> oversemigroups_by_genus_raw(std::int64_t a,
                                                           std::int64_t b);
// Stratified by the middle coordinate of (x, n, y); a must be 4.
std::map<std::int64_t, BigInt> oversemigroups_by_middle_raw(std::int64_t a,
                                                            std::int64_t b);

// a = 3: counts by genus, asserted against the piecewise closed form;
// a = 4: counts by middle Apery entry, asserted against the closed form when
// b = 12k+1. Other a: error (closed forms proven only for a in {3,4}).
std::map<std::int64_t, BigInt> count_oversemigroups_by_genus(std::int64_t a,
                                                             std::int64_t b);

struct RatioRow {
  std::int64_t b = 0;
  BigInt oversemigroups;
  BigInt cores;
  BigRational ratio;
};

// O(<a,b>)/C(a,b) for b coprime to a up to b_limit; a in {2, 3, 4}.
std::vector<RatioRow> semigroup_core_ratio(std::int64_t a, std::int64_t b_limit);

// Closed forms (exact).
BigInt anderson_count(std::int64_t a, std::int64_t b);         // C(a+b,a)/(a+b)
std::int64_t olsson_stanton_max(std::int64_t a, std::int64_t b);  // (a^2-1)(b^2-1)/24
BigRational armstrong_mean(std::int64_t a, std::int64_t b);    // (a+b+1)(a-1)(b-1)/24
BigInt overs3_formula(std::int64_t k, std::int64_t l);         // (3k+l)(k+1)
BigInt overs4_formula(std::int64_t k, std::int64_t l);         // chart rows
BigInt overs3_genus_formula(std::int64_t k, std::int64_t l, std::int64_t n);
BigInt overs4_middle_formula(std::int64_t k, std::int64_t n);  // b = 12k+1
BigRational symmetric_overs3_formula(std::int64_t k, std::int64_t l);

}  // namespace corelattice
