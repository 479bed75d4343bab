#include "gk/exact_arith.hpp"

namespace gk {

// Euler's pentagonal-number recurrence.
BigInt partition_count(unsigned n) {
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    BigInt total = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const bool add = k % 2 == 1;
      total += add ? p[i - g1] : -p[i - g1];
      const unsigned g2 = k * (3 * k + 1) / 2;
      if (g2 <= i) total += add ? p[i - g2] : -p[i - g2];
    }
    p[i] = total;
  }
  return p[n];
}

BigInt abelian_group_count(const Factorization& f) {
  BigInt count = 1;
  for (const auto& term : f.terms()) {
    if (term.exponent > 100000) fail(ErrorCode::MagnitudeExceeded, "abelian_group_count: exponent too large");
    count *= partition_count(static_cast<unsigned>(term.exponent));
  }
  return count;
}

}  // namespace gk
