#include "corelattice/apery.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "bits.hpp"

namespace corelattice {

AperyTuple AperyTuple::make(std::int64_t a, std::vector<std::int64_t> x) {
  if (a < 2) throw std::invalid_argument("modulus must be >= 2");
  if (static_cast<std::int64_t>(x.size()) != a - 1)
    throw std::invalid_argument("tuple must have a-1 coordinates");
  for (std::int64_t v : x) {
    if (v < 0) throw std::invalid_argument("coordinates must be nonnegative");
  }
  return AperyTuple{a, std::move(x)};
}

bool AperyTuple::all_zero() const {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

AperyTuple apery_of(const NumericalSet& t, std::int64_t a) {
  if (a < 2) throw std::invalid_argument("modulus must be >= 2");
  const std::int64_t f = t.frobenius();
  if (a <= f && !detail::atom_candidate_ok(t.words(), f, a))
    throw std::invalid_argument("not an a-core coordinate system: " +
                                std::to_string(a) + " is not in the atom monoid");
  std::vector<std::int64_t> x(static_cast<std::size_t>(a - 1));
  for (std::int64_t i = 1; i < a; ++i) {
    std::int64_t m = i;
    while (!t.contains(m)) m += a;  // first member is <= F + a
    x[static_cast<std::size_t>(i - 1)] = (m - i) / a;
  }
  return AperyTuple{a, std::move(x)};
}

NumericalSet set_from_apery(const AperyTuple& t) {
  std::vector<std::int64_t> gaps;
  for (std::int64_t i = 1; i < t.a; ++i) {
    for (std::int64_t m = 0; m < t.x[static_cast<std::size_t>(i - 1)]; ++m) {
      gaps.push_back(t.a * m + i);
    }
  }
  std::sort(gaps.begin(), gaps.end());
  return NumericalSet::from_gaps(std::move(gaps));
}

std::int64_t genus_of(const AperyTuple& t) {
  std::int64_t g = 0;
  for (std::int64_t v : t.x) g += v;
  return g;
}

std::int64_t frobenius_of(const AperyTuple& t) {
  if (t.all_zero())
    throw std::domain_error("Frobenius number undefined for T = N");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t i = 1; i < t.a; ++i) {
    best = std::max(best, t.a * t.x[static_cast<std::size_t>(i - 1)] + i - t.a);
  }
  return best;
}

std::int64_t size_of(const AperyTuple& t) {
  const std::int64_t a = t.a;
  std::int64_t g = 0, tri = 0, lin = 0;
  for (std::int64_t i = 1; i < a; ++i) {
    const std::int64_t v = t.x[static_cast<std::size_t>(i - 1)];
    g += v;
    tri += v * (v - 1) / 2;
    lin += i * v;
  }
  const std::int64_t form1 = a * tri + lin - g * (g - 1) / 2;

  // Second printed form, times two to stay integral:
  // (a-1) sum x^2 + sum (2i-(a-1)) x - 2 sum_{i<j} x_i x_j.
  std::int64_t sq = 0, lin2 = 0, cross2 = 0;
  for (std::int64_t i = 1; i < a; ++i) {
    const std::int64_t v = t.x[static_cast<std::size_t>(i - 1)];
    sq += v * v;
    lin2 += (2 * i - (a - 1)) * v;
  }
  cross2 = g * g - sq;  // 2 * sum_{i<j} x_i x_j
  const std::int64_t form2_twice = (a - 1) * sq + lin2 - cross2;
  if (form2_twice != 2 * form1)
    throw std::logic_error("size closed forms disagree");
  return form1;
}

AperyTuple conjugate_apery(const AperyTuple& t) {
  if (t.all_zero()) return t;  // N is self-dual
  const std::int64_t a = t.a;
  const std::int64_t ell = ((frobenius_of(t) % a) + a) % a;
  const std::int64_t xl = t.x[static_cast<std::size_t>(ell - 1)];
  std::vector<std::int64_t> out(static_cast<std::size_t>(a - 1));
  for (std::int64_t i = 1; i < a; ++i) {
    std::int64_t v;
    if (i < ell) {
      v = xl - t.x[static_cast<std::size_t>(ell - i - 1)];
    } else if (i == ell) {
      v = xl;
    } else {
      v = xl - t.x[static_cast<std::size_t>(a + ell - i - 1)] - 1;
    }
    out[static_cast<std::size_t>(i - 1)] = v;
  }
  return AperyTuple::make(a, std::move(out));
}

bool is_semigroup_tuple(const AperyTuple& t) {
  const std::int64_t a = t.a;
  const auto& x = t.x;
  for (std::int64_t i = 1; i < a; ++i) {
    for (std::int64_t j = i; j < a; ++j) {
      const std::int64_t s = i + j;
      if (s <= a - 1) {
        if (x[static_cast<std::size_t>(i - 1)] + x[static_cast<std::size_t>(j - 1)] <
            x[static_cast<std::size_t>(s - 1)])
          return false;
      } else if (s > a) {
        if (x[static_cast<std::size_t>(i - 1)] + x[static_cast<std::size_t>(j - 1)] + 1 <
            x[static_cast<std::size_t>(s - a - 1)])
          return false;
      }
    }
  }
  return true;
}

BigInt count_acores_by_max_hook(std::int64_t a, std::int64_t k, std::int64_t l) {
  if (a < 2) throw std::invalid_argument("modulus must be >= 2");
  if (l < 1 || l > a - 1)
    throw std::invalid_argument("residue l must be in [1, a-1]");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return bigint_pow(k + 2, l - 1) * bigint_pow(k + 1, a - l - 1);
}

BigInt count_acores_max_hook_below(std::int64_t a, std::int64_t k) {
  if (a < 2) throw std::invalid_argument("modulus must be >= 2");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return bigint_pow(k + 1, a - 1);
}

BigInt count_acores_by_parts(std::int64_t a, std::int64_t g, bool at_most) {
  if (a < 2) throw std::invalid_argument("modulus must be >= 2");
  if (g < 0) throw std::invalid_argument("g must be >= 0");
  return at_most ? binomial(g + a - 1, a - 1) : binomial(g + a - 2, a - 2);
}

}  // namespace corelattice
