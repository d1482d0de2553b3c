#include "corelattice/polytope.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace corelattice {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {  // b > 0
  return a > 0 ? (a + b - 1) / b : -(-a / b);
}

void validate_pair_inputs(std::int64_t a, const std::vector<std::int64_t>& bs) {
  if (a < 2) throw std::invalid_argument("modulus a must be >= 2");
  if (bs.empty()) throw std::invalid_argument("at least one b required");
  std::int64_t g = a;
  for (std::int64_t b : bs) {
    if (b < 1) throw std::invalid_argument("b must be positive");
    if (b % a == 0)
      throw std::invalid_argument("b divisible by a: " + std::to_string(b));
    g = std::gcd(g, b);
  }
  if (g != 1)
    throw std::invalid_argument("unbounded cone: gcd(a, b_1, ..., b_m) = " +
                                std::to_string(g) + " != 1");
}

// Partition sizes from raw coordinates; evaluates both printed forms of the
// quadratic F_a and insists they agree.
std::int64_t size_from_coords(std::int64_t a, const std::vector<std::int64_t>& x) {
  std::int64_t g = 0, tri = 0, lin = 0, sq = 0, lin2 = 0;
  for (std::int64_t i = 1; i < a; ++i) {
    const std::int64_t v = x[static_cast<std::size_t>(i - 1)];
    g += v;
    tri += v * (v - 1) / 2;
    lin += i * v;
    sq += v * v;
    lin2 += (2 * i - (a - 1)) * v;
  }
  const std::int64_t form1 = a * tri + lin - g * (g - 1) / 2;
  const std::int64_t form2_twice = (a - 1) * sq + lin2 - (g * g - sq);
  if (form2_twice != 2 * form1)
    throw std::logic_error("size closed forms disagree");
  return form1;
}

struct Accum {
  BigInt count = 0;
  std::int64_t max_size = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> argmax;
  std::int64_t max_multiplicity = 0;
  BigInt sum = 0;
  BigInt sum_sq = 0;

  void add_point(std::int64_t a, const std::vector<std::int64_t>& x) {
    const std::int64_t s = size_from_coords(a, x);
    ++count;
    sum += s;
    sum_sq += BigInt(s) * s;
    if (s > max_size) {
      max_size = s;
      argmax = x;
      max_multiplicity = 1;
    } else if (s == max_size) {
      ++max_multiplicity;
    }
  }

  void merge_right(const Accum& r) {  // r covers lexicographically later points
    count += r.count;
    sum += r.sum;
    sum_sq += r.sum_sq;
    if (r.count == 0) return;
    if (r.max_size > max_size || count - r.count == 0) {
      max_size = r.max_size;
      argmax = r.argmax;
      max_multiplicity = r.max_multiplicity;
    } else if (r.max_size == max_size) {
      max_multiplicity += r.max_multiplicity;
    }
  }
};

// Constraints grouped by the index of their last nonzero coefficient; a
// constraint becomes decidable exactly when that variable is assigned.
struct DepthPlan {
  std::vector<std::vector<std::size_t>> at_depth;
  bool infeasible = false;
};

DepthPlan plan(const InequalitySystem& sys) {
  DepthPlan p;
  p.at_depth.assign(static_cast<std::size_t>(sys.dim), {});
  for (std::size_t ci = 0; ci < sys.constraints.size(); ++ci) {
    const auto& c = sys.constraints[ci];
    if (static_cast<std::int64_t>(c.coeffs.size()) != sys.dim)
      throw std::invalid_argument("constraint arity does not match dimension");
    std::int64_t last = -1;
    for (std::int64_t i = 0; i < sys.dim; ++i) {
      if (c.coeffs[static_cast<std::size_t>(i)] != 0) last = i;
    }
    if (last < 0) {
      if (c.bound < 0) p.infeasible = true;
      continue;
    }
    p.at_depth[static_cast<std::size_t>(last)].push_back(ci);
  }
  return p;
}

template <typename Fn>
void dfs(const InequalitySystem& sys, const DepthPlan& p,
         const std::vector<std::int64_t>& bounds, std::vector<std::int64_t>& x,
         std::int64_t depth, Fn&& emit) {
  if (depth == sys.dim) {
    emit(x);
    return;
  }
  std::int64_t lo = 0;
  std::int64_t hi = bounds[static_cast<std::size_t>(depth)];
  for (std::size_t ci : p.at_depth[static_cast<std::size_t>(depth)]) {
    const auto& c = sys.constraints[ci];
    std::int64_t rest = 0;
    for (std::int64_t i = 0; i < depth; ++i) {
      rest += c.coeffs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    const std::int64_t cd = c.coeffs[static_cast<std::size_t>(depth)];
    const std::int64_t rhs = c.bound - rest;
    if (cd > 0) {
      hi = std::min(hi, floor_div(rhs, cd));
    } else {
      lo = std::max(lo, ceil_div(-rhs, -cd));
    }
  }
  for (std::int64_t v = std::max<std::int64_t>(lo, 0); v <= hi; ++v) {
    x[static_cast<std::size_t>(depth)] = v;
    dfs(sys, p, bounds, x, depth + 1, emit);
  }
  x[static_cast<std::size_t>(depth)] = 0;
}

Accum fold_stats(std::int64_t a, const InequalitySystem& sys,
                 const std::vector<std::int64_t>& bounds, int jobs) {
  const DepthPlan p = plan(sys);
  Accum total;
  if (p.infeasible) return total;
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const std::int64_t width = bounds.empty() ? 0 : bounds[0] + 1;
  if (jobs == 1 || sys.dim < 1 || width < 2) {
    std::vector<std::int64_t> x(static_cast<std::size_t>(sys.dim), 0);
    dfs(sys, p, bounds, x, 0,
        [&](const std::vector<std::int64_t>& pt) { total.add_point(a, pt); });
    return total;
  }
  // Split the first coordinate's range; the fold is associative, so merging
  // chunks in order reproduces the single-threaded result exactly.
  const int nthreads = static_cast<int>(std::min<std::int64_t>(jobs, width));
  std::vector<Accum> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (int tid = 0; tid < nthreads; ++tid) {
    pool.emplace_back([&, tid]() {
      const std::int64_t lo = width * tid / nthreads;
      const std::int64_t hi = width * (tid + 1) / nthreads - 1;
      std::vector<std::int64_t> x(static_cast<std::size_t>(sys.dim), 0);
      Accum& acc = parts[static_cast<std::size_t>(tid)];
      for (std::int64_t v = lo; v <= hi; ++v) {
        x[0] = v;
        // depth-0 constraints have a single nonzero coefficient
        bool ok = true;
        for (std::size_t ci : p.at_depth[0]) {
          const auto& c = sys.constraints[ci];
          if (c.coeffs[0] * v > c.bound) ok = false;
        }
        if (!ok) continue;
        dfs(sys, p, bounds, x, 1,
            [&](const std::vector<std::int64_t>& pt) { acc.add_point(a, pt); });
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : parts) total.merge_right(part);
  return total;
}

SizeStats stats_from_accum(std::int64_t a, const Accum& acc) {
  SizeStats s;
  s.count = acc.count;
  if (acc.count == 0) throw std::logic_error("polytope contains no points");
  s.max_size = acc.max_size;
  s.argmax = AperyTuple::make(a, acc.argmax);
  s.unique_max = (acc.max_multiplicity == 1);
  s.sum_size = acc.sum;
  s.sum_sq = acc.sum_sq;
  return s;
}

}  // namespace

BigRational SizeStats::mean() const { return BigRational(sum_size, count); }

InequalitySystem core_polytope(std::int64_t a, const std::vector<std::int64_t>& bs) {
  validate_pair_inputs(a, bs);
  InequalitySystem sys;
  sys.dim = a - 1;
  for (std::int64_t b : bs) {
    const std::int64_t k = b / a;
    const std::int64_t l = b % a;
    LinearConstraint cap;
    cap.coeffs.assign(static_cast<std::size_t>(sys.dim), 0);
    cap.coeffs[static_cast<std::size_t>(l - 1)] = 1;
    cap.bound = k;
    sys.constraints.push_back(std::move(cap));
    for (std::int64_t i = 1; i < a; ++i) {
      if (i + l == a) continue;  // multiples of a are always present
      LinearConstraint c;
      c.coeffs.assign(static_cast<std::size_t>(sys.dim), 0);
      if (i + l < a) {
        c.coeffs[static_cast<std::size_t>(i + l - 1)] = 1;
        c.coeffs[static_cast<std::size_t>(i - 1)] = -1;
        c.bound = k;
      } else {
        c.coeffs[static_cast<std::size_t>(i + l - a - 1)] = 1;
        c.coeffs[static_cast<std::size_t>(i - 1)] = -1;
        c.bound = k + 1;
      }
      sys.constraints.push_back(std::move(c));
    }
  }
  return sys;
}

std::vector<std::int64_t> coordinate_bounds(std::int64_t a,
                                            const std::vector<std::int64_t>& bs) {
  validate_pair_inputs(a, bs);
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(a), inf);
  for (std::int64_t b : bs) {
    const std::int64_t l = b % a;
    dist[static_cast<std::size_t>(l)] = std::min(dist[static_cast<std::size_t>(l)], b / a);
  }
  // Bellman-Ford on Z_a; arc i -> i+l_j (mod a) costs k_j + 1, residue 0 is
  // not a coordinate and is skipped.
  for (std::int64_t round = 0; round < a; ++round) {
    bool changed = false;
    for (std::int64_t b : bs) {
      const std::int64_t k = b / a;
      const std::int64_t l = b % a;
      for (std::int64_t i = 1; i < a; ++i) {
        const std::int64_t j = (i + l) % a;
        if (j == 0) continue;
        if (dist[static_cast<std::size_t>(i)] + k + 1 < dist[static_cast<std::size_t>(j)]) {
          dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + k + 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::vector<std::int64_t> bounds(dist.begin() + 1, dist.end());
  for (std::int64_t v : bounds) {
    if (v >= inf) throw std::logic_error("residue unreachable despite gcd check");
  }
  return bounds;
}

void enumerate_lattice_points(
    const InequalitySystem& sys, const std::vector<std::int64_t>& bounds,
    const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  if (static_cast<std::int64_t>(bounds.size()) != sys.dim)
    throw std::invalid_argument("bounds arity does not match dimension");
  const DepthPlan p = plan(sys);
  if (p.infeasible) return;
  std::vector<std::int64_t> x(static_cast<std::size_t>(sys.dim), 0);
  dfs(sys, p, bounds, x, 0, emit);
}

std::vector<AperyTuple> lattice_points(std::int64_t a, const InequalitySystem& sys,
                                       const std::vector<std::int64_t>& bounds) {
  std::vector<AperyTuple> out;
  enumerate_lattice_points(sys, bounds, [&](const std::vector<std::int64_t>& x) {
    out.push_back(AperyTuple::make(a, x));
  });
  return out;
}

SizeStats core_stats(std::int64_t a, const std::vector<std::int64_t>& bs, int jobs) {
  const InequalitySystem sys = core_polytope(a, bs);
  const std::vector<std::int64_t> bounds = coordinate_bounds(a, bs);
  SizeStats s = stats_from_accum(a, fold_stats(a, sys, bounds, jobs));
  if (bs.size() == 1) {
    const std::int64_t b = bs[0];
    if (s.count != anderson_count(a, b))
      throw std::logic_error("enumeration disagrees with the Anderson count");
    if (BigInt(s.max_size) != BigInt(olsson_stanton_max(a, b)) || !s.unique_max)
      throw std::logic_error("enumeration disagrees with the Olsson-Stanton maximum");
    if (s.mean() != armstrong_mean(a, b))
      throw std::logic_error("enumeration disagrees with the Armstrong mean");
  }
  return s;
}

std::vector<std::int64_t> apery_of_pair(std::int64_t a, std::int64_t b) {
  validate_pair_inputs(a, {b});
  // Smallest element of <a,b> congruent to i mod a is b*t with t = i*b^{-1}
  // mod a.
  std::int64_t binv = 0;
  for (std::int64_t t = 1; t < a; ++t) {
    if ((b % a) * t % a == 1) {
      binv = t;
      break;
    }
  }
  std::vector<std::int64_t> ap(static_cast<std::size_t>(a - 1));
  for (std::int64_t i = 1; i < a; ++i) {
    const std::int64_t t = (i % a) * binv % a;
    ap[static_cast<std::size_t>(i - 1)] = (b * t - i) / a;
  }
  return ap;
}

InequalitySystem oversemigroup_polytope(std::int64_t a, std::int64_t b) {
  const std::vector<std::int64_t> ap = apery_of_pair(a, b);
  InequalitySystem sys;
  sys.dim = a - 1;
  for (std::int64_t i = 1; i < a; ++i) {
    for (std::int64_t j = i; j < a; ++j) {
      const std::int64_t s = i + j;
      if (s == a) continue;
      LinearConstraint c;
      c.coeffs.assign(static_cast<std::size_t>(sys.dim), 0);
      c.coeffs[static_cast<std::size_t>(i - 1)] -= 1;
      c.coeffs[static_cast<std::size_t>(j - 1)] -= 1;
      if (s <= a - 1) {
        c.coeffs[static_cast<std::size_t>(s - 1)] += 1;
        c.bound = 0;
      } else {
        c.coeffs[static_cast<std::size_t>(s - a - 1)] += 1;
        c.bound = 1;
      }
      sys.constraints.push_back(std::move(c));
    }
  }
  for (std::int64_t i = 1; i < a; ++i) {
    LinearConstraint cap;
    cap.coeffs.assign(static_cast<std::size_t>(sys.dim), 0);
    cap.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    cap.bound = ap[static_cast<std::size_t>(i - 1)];
    sys.constraints.push_back(std::move(cap));
  }
  return sys;
}

SizeStats oversemigroup_stats(std::int64_t a, std::int64_t b, int jobs) {
  const InequalitySystem sys = oversemigroup_polytope(a, b);
  const std::vector<std::int64_t> bounds = apery_of_pair(a, b);
  return stats_from_accum(a, fold_stats(a, sys, bounds, jobs));
}

BigInt count_oversemigroups(std::int64_t a, std::int64_t b) {
  const InequalitySystem sys = oversemigroup_polytope(a, b);
  const std::vector<std::int64_t> bounds = apery_of_pair(a, b);
  BigInt count = 0;
  enumerate_lattice_points(sys, bounds,
                           [&](const std::vector<std::int64_t>&) { ++count; });
  if (a == 2) {
    if (count != BigInt((b - 1) / 2 + 1))
      throw std::logic_error("O(<2,b>) disagrees with k+1");
  } else if (a == 3) {
    if (count != overs3_formula(b / 6, b % 6))
      throw std::logic_error("O(<3,b>) disagrees with (3k+l)(k+1)");
  } else if (a == 4) {
    if (count != overs4_formula(b / 12, b % 12))
      throw std::logic_error("O(<4,b>) disagrees with the chart");
  }
  return count;
}

std::map<std::int64_t, BigInt> oversemigroups_by_genus_raw(std::int64_t a,
                                                           std::int64_t b) {
  const InequalitySystem sys = oversemigroup_polytope(a, b);
  const std::vector<std::int64_t> bounds = apery_of_pair(a, b);
  std::map<std::int64_t, BigInt> out;
  enumerate_lattice_points(sys, bounds, [&](const std::vector<std::int64_t>& x) {
    std::int64_t g = 0;
    for (std::int64_t v : x) g += v;
    ++out[g];
  });
  return out;
}

std::map<std::int64_t, BigInt> oversemigroups_by_middle_raw(std::int64_t a,
                                                            std::int64_t b) {
  if (a != 4)
    throw std::invalid_argument("middle-coordinate stratification needs a = 4");
  const InequalitySystem sys = oversemigroup_polytope(a, b);
  const std::vector<std::int64_t> bounds = apery_of_pair(a, b);
  std::map<std::int64_t, BigInt> out;
  enumerate_lattice_points(sys, bounds, [&](const std::vector<std::int64_t>& x) {
    ++out[x[1]];
  });
  return out;
}

std::map<std::int64_t, BigInt> count_oversemigroups_by_genus(std::int64_t a,
                                                             std::int64_t b) {
  if (a == 3) {
    auto strata = oversemigroups_by_genus_raw(a, b);
    const std::int64_t k = b / 6;
    const std::int64_t l = b % 6;
    BigInt total = 0;
    for (std::int64_t n = 0; n <= 6 * k + l - 1; ++n) {
      BigInt got = 0;
      if (auto it = strata.find(n); it != strata.end()) got = it->second;
      if (got != overs3_genus_formula(k, l, n))
        throw std::logic_error("genus stratum disagrees with the closed form at n=" +
                               std::to_string(n));
      total += got;
    }
    if (total != count_oversemigroups(a, b))
      throw std::logic_error("genus strata do not sum to O(S)");
    return strata;
  }
  if (a == 4) {
    auto strata = oversemigroups_by_middle_raw(a, b);
    const std::int64_t k = b / 12;
    BigInt total = 0;
    for (const auto& [n, c] : strata) total += c;
    if (b % 12 == 1) {
      for (std::int64_t n = 0; n <= 6 * k; ++n) {
        BigInt got = 0;
        if (auto it = strata.find(n); it != strata.end()) got = it->second;
        if (got != overs4_middle_formula(k, n))
          throw std::logic_error(
              "middle stratum disagrees with the closed form at n=" +
              std::to_string(n));
      }
    }
    if (total != count_oversemigroups(a, b))
      throw std::logic_error("middle strata do not sum to O(S)");
    return strata;
  }
  throw std::invalid_argument(
      "stratified closed forms are only available for a in {3, 4}; use the raw "
      "stratified enumeration instead");
}

std::vector<RatioRow> semigroup_core_ratio(std::int64_t a, std::int64_t b_limit) {
  if (a < 2 || a > 4)
    throw std::invalid_argument("ratio table is defined for a in {2, 3, 4}");
  std::vector<RatioRow> rows;
  for (std::int64_t b = a + 1; b <= b_limit; ++b) {
    if (std::gcd(a, b) != 1) continue;
    RatioRow r;
    r.b = b;
    r.oversemigroups = count_oversemigroups(a, b);
    r.cores = anderson_count(a, b);
    r.ratio = BigRational(r.oversemigroups, r.cores);
    rows.push_back(std::move(r));
  }
  return rows;
}

BigInt anderson_count(std::int64_t a, std::int64_t b) {
  return binomial(a + b, a) / BigInt(a + b);
}

std::int64_t olsson_stanton_max(std::int64_t a, std::int64_t b) {
  const BigInt v = (BigInt(a) * a - 1) * (BigInt(b) * b - 1) / 24;
  return static_cast<std::int64_t>(v);
}

BigRational armstrong_mean(std::int64_t a, std::int64_t b) {
  return BigRational(BigInt(a + b + 1) * (a - 1) * (b - 1), 24);
}

BigInt overs3_formula(std::int64_t k, std::int64_t l) {
  if (l != 1 && l != 2 && l != 4 && l != 5)
    throw std::invalid_argument("b mod 6 must be in {1,2,4,5}");
  return BigInt(3 * k + l) * (k + 1);
}

BigInt overs4_formula(std::int64_t k, std::int64_t l) {
  std::int64_t c2, c1, c0;
  switch (l) {
    case 1:  c2 = 30; c1 = 11;  c0 = 1;  break;
    case 3:  c2 = 42; c1 = 23;  c0 = 4;  break;
    case 5:  c2 = 54; c1 = 39;  c0 = 9;  break;
    case 7:  c2 = 66; c1 = 59;  c0 = 17; break;
    case 9:  c2 = 78; c1 = 83;  c0 = 29; break;
    case 11: c2 = 90; c1 = 111; c0 = 45; break;
    default:
      throw std::invalid_argument("b mod 12 must be in {1,3,5,7,9,11}");
  }
  const BigInt kk(k);
  return 24 * kk * kk * kk + c2 * kk * kk + c1 * kk + c0;
}

BigInt overs3_genus_formula(std::int64_t k, std::int64_t l, std::int64_t n) {
  if (2 * n <= 6 * k + l - 2) return BigInt(n / 3 + 1);
  return BigInt((6 * k + l - 1 - n) / 3 + 1);
}

BigInt overs4_middle_formula(std::int64_t k, std::int64_t n) {
  if (n <= 2 * k) return BigInt(n + 1) * (12 * k - 3 * n + 2) / 2;
  const std::int64_t ceil_half = (n + 1) / 2;
  const std::int64_t floor_half = n / 2;
  return BigInt(n + 1) * (3 * k - ceil_half + 1) +
         BigInt(3 * k - floor_half) * (3 * k - floor_half + 1) / 2;
}

BigRational symmetric_overs3_formula(std::int64_t k, std::int64_t l) {
  return BigRational(BigInt(18 * k + 9 * l - l * l - 2), 6);
}

}  // namespace corelattice
