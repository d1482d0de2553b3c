#include "corelattice/antiatom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bits.hpp"

namespace corelattice {

namespace {

void check_scan_budget(std::int64_t exponent, const std::string& what) {
  const std::int64_t budget = scan_budget();
  if (exponent > budget - 1)
    throw BudgetError(what + " exceeds exhaustive budget (2^" +
                      std::to_string(exponent) + " objects, cap 2^" +
                      std::to_string(budget - 1) +
                      "); set CORE_LATTICE_BUDGET to raise");
}

std::vector<std::int64_t> gaps_from_word(std::uint64_t w, std::int64_t frob) {
  std::vector<std::int64_t> gaps;
  for (std::int64_t i = 1; i <= frob; ++i) {
    if (!((w >> i) & 1)) gaps.push_back(i);
  }
  return gaps;
}

// Fast path: everything fits one word.
AntiAtomReport anti_atom_words(const NumericalSemigroup& s,
                               const std::vector<std::int64_t>& missing) {
  const std::int64_t f = s.frobenius();
  std::uint64_t sw = 1;
  for (std::int64_t n = 1; n <= f; ++n) {
    if (s.set().contains(n)) sw |= std::uint64_t{1} << n;
  }
  std::uint64_t mw = 0;
  for (std::int64_t m : missing) mw |= std::uint64_t{1} << m;

  AntiAtomReport rep{s, 0, static_cast<std::int64_t>(missing.size()), {}};
  std::uint64_t sub = mw;
  for (;;) {
    const std::uint64_t w = sw | sub;
    if (detail::atom_word64(w, f) == sw) {
      ++rep.p_value;
      rep.witnesses.push_back(NumericalSet::from_gaps(gaps_from_word(w, f)));
    }
    if (sub == 0) break;
    sub = (sub - 1) & mw;
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
  return rep;
}

// General path for F > 63.
AntiAtomReport anti_atom_general(const NumericalSemigroup& s,
                                 const std::vector<std::int64_t>& missing) {
  AntiAtomReport rep{s, 0, static_cast<std::int64_t>(missing.size()), {}};
  const auto& sgaps = s.set().gaps();
  const std::uint64_t subsets = std::uint64_t{1} << missing.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::int64_t> gaps;
    gaps.reserve(sgaps.size());
    for (std::int64_t g : sgaps) {
      bool removed = false;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if ((mask >> i & 1) && missing[i] == g) {
          removed = true;
          break;
        }
      }
      if (!removed) gaps.push_back(g);
    }
    NumericalSet t = NumericalSet::from_gaps(std::move(gaps));
    if (atom_monoid(t).set() == s.set()) {
      ++rep.p_value;
      rep.witnesses.push_back(std::move(t));
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
  return rep;
}

}  // namespace

AntiAtomReport anti_atom(const NumericalSemigroup& s) {
  const std::vector<std::int64_t> missing = s.missing_pairs();
  check_scan_budget(static_cast<std::int64_t>(missing.size()),
                    "anti-atom scan over subsets of M(S)");
  AntiAtomReport rep = s.frobenius() <= 63 ? anti_atom_words(s, missing)
                                           : anti_atom_general(s, missing);
  if (rep.p_value < 1 || (rep.m_size < 63 &&
                          BigInt(rep.p_value) > bigint_pow(2, rep.m_size)))
    throw std::logic_error("P(S) bound violated");
  return rep;
}

Classification classify_small_m(const NumericalSemigroup& s) {
  const AntiAtomReport rep = anti_atom(s);
  Classification c{SymmetryClass::Other, rep.m_size, rep.p_value};
  switch (rep.m_size) {
    case 0:
      c.kind = SymmetryClass::Symmetric;
      if (rep.p_value != 1 || !s.is_symmetric())
        throw std::logic_error("|M|=0 must mean symmetric with P=1");
      break;
    case 1:
      c.kind = SymmetryClass::Pseudosymmetric;
      if (rep.p_value != 2 || !s.is_pseudosymmetric())
        throw std::logic_error("|M|=1 must mean pseudosymmetric with P=2");
      break;
    case 2:
      c.kind = SymmetryClass::TwoMissing;
      if (rep.p_value != 2 && rep.p_value != 3)
        throw std::logic_error("|M|=2 must mean P in {2,3}");
      break;
    default:
      break;
  }
  return c;
}

NumericalSemigroup family_R(std::int64_t n) {
  if (n < 11 || n % 2 == 0)
    throw std::invalid_argument("R_N requires odd N >= 11");
  const std::int64_t half = (n + 1) / 2;
  std::vector<std::int64_t> gaps;
  for (std::int64_t v = 1; v <= n; ++v) {
    const bool member =
        v == half || (v > half && v < n - 1 && v % 2 == 0);
    if (!member) gaps.push_back(v);
  }
  NumericalSemigroup r = NumericalSemigroup::from_set(
      NumericalSet::from_gaps(std::move(gaps)));
  const AntiAtomReport rep = anti_atom(r);
  const std::int64_t expected_m = 2 * ((n - 1 + 3) / 4);
  if (rep.p_value != 2)
    throw std::logic_error("P(R_N) = 2 failed at N=" + std::to_string(n));
  if (rep.m_size != expected_m)
    throw std::logic_error("|M(R_N)| formula failed at N=" + std::to_string(n));
  return r;
}

NumericalSemigroup family_S(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("S_N requires N >= 1");
  std::vector<std::int64_t> gaps(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) gaps[static_cast<std::size_t>(i)] = i + 1;
  return NumericalSemigroup::from_set(NumericalSet::from_gaps(std::move(gaps)));
}

GammaValue gamma(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("gamma requires N >= 1");
  if (n > 63) throw BudgetError("gamma requires N <= 63");
  if (n > scan_budget())
    throw BudgetError("gamma(" + std::to_string(n) +
                      ") exceeds exhaustive budget; set CORE_LATTICE_BUDGET");
  // Scan all numerical sets with Frobenius number N: member masks over
  // [1, N-1]. A(T) = S_N iff no member of [1, N] passes the atom test.
  std::int64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint64_t w = 1 | (mask << 1);
    bool any_atom = false;
    std::uint64_t members = w >> 1;
    std::int64_t v = 1;
    while (members != 0) {
      if (members & 1) {
        if (detail::atom_candidate_ok64(w, n, v)) {
          any_atom = true;
          break;
        }
      }
      members >>= 1;
      ++v;
    }
    if (!any_atom) ++count;
  }
  GammaValue g;
  g.n = n;
  g.p = count;
  g.denominator = bigint_pow(2, n - 1);
  g.value = BigRational(g.p, g.denominator);
  return g;
}

BigInt count_semigroups_by_frobenius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Frobenius number must be >= 1");
  if (n > 63) throw BudgetError("exhaustive count requires N <= 63");
  if (n > scan_budget())
    throw BudgetError("count_semigroups_by_frobenius(" + std::to_string(n) +
                      ") exceeds exhaustive budget; set CORE_LATTICE_BUDGET");
  std::int64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint64_t w = 1 | (mask << 1);
    if (detail::is_semigroup_word64(w, n)) ++count;
  }
  const BigInt backelin = 4 * bigint_pow(2, (n - 1) / 2);
  if (BigInt(count) > backelin)
    throw std::logic_error("Backelin bound violated at N=" + std::to_string(n));
  return BigInt(count);
}

}  // namespace corelattice
