#include "corelattice/bigint.hpp"

#include <algorithm>
#include <cstdlib>

namespace corelattice {

std::int64_t scan_budget() {
  if (const char* env = std::getenv("CORE_LATTICE_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v >= 1) return static_cast<std::int64_t>(v);
  }
  return 24;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // C(n-k+i, i) is integral, so this stays exact
  }
  return r;
}

BigInt bigint_pow(const BigInt& base, std::int64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  for (std::int64_t e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace corelattice
