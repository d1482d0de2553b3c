#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corelattice {

// Exact arbitrary-precision arithmetic for counts, sums and means.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exceeding an exhaustive-scan cap is an explicit refusal, never a silent
// sample. See scan_budget().
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Cap N for operations that scan 2^(N-1) objects. Overridden by the
// CORE_LATTICE_BUDGET environment variable.
std::int64_t scan_budget();

// C(n, k) computed multiplicatively.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt bigint_pow(const BigInt& base, std::int64_t exp);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace corelattice
