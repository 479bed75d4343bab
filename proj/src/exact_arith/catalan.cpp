#include <map>

#include "gk/exact_arith.hpp"

namespace gk {

std::vector<CatalanSolution> catalan_solutions(u64 max_base, u64 max_exp) {
  std::vector<CatalanSolution> out;
  if (max_base < 2 || max_exp < 2) return out;
  const auto primes = primes_up_to(max_base);
  std::map<BigInt, std::pair<u64, u64>> powers;
  for (u64 p : primes) {
    BigInt v = BigInt(p) * p;
    for (u64 m = 2; m <= max_exp; ++m, v *= p) powers.emplace(v, std::make_pair(p, m));
  }
  for (u64 q : primes) {
    BigInt v = BigInt(q) * q;
    for (u64 n = 2; n <= max_exp; ++n, v *= q) {
      auto it = powers.find(v + 1);
      if (it != powers.end()) out.push_back({it->second.first, q, it->second.second, n});
    }
  }
  return out;
}

}  // namespace gk
