#include <algorithm>

#include "exact_arith/mont128.hpp"
#include "gk/exact_arith.hpp"

namespace gk {

namespace {

using detail::Mont128;

constexpr u64 kTrialLimit = 1u << 16;

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

// Brent's cycle variant of Pollard rho on y -> y^2 + c. Returns a divisor of
// n, possibly n itself when this c fails.
u128 rho_brent(u128 n, u64 c_raw) {
  const Mont128 m(n);
  const u128 c = m.to(c_raw);
  auto f = [&](u128 y) { return m.add(m.mul(y, y), c); };
  constexpr u64 kBatch = 128;
  u128 y = m.to(2), x = y, ys = y, q = m.one(), g = 1;
  u64 r = 1;
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      const u64 steps = std::min(kBatch, r - k);
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = m.mul(q, x > y ? x - y : y - x);
      }
      g = detail::gcd_u128(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = detail::gcd_u128(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

u128 find_divisor(u128 n) {
  for (u64 c = 1;; ++c) {
    const u128 d = rho_brent(n, c);
    if (d != 1 && d != n) return d;
  }
}

void split(u128 n, std::vector<Factorization::Term>& out) {
  if (n == 1) return;
  if (is_prime(from_u128(n))) {
    out.push_back({from_u128(n), 1});
    return;
  }
  const BigInt root = boost::multiprecision::sqrt(from_u128(n));
  if (root * root == from_u128(n)) {
    split(to_u128(root), out);
    split(to_u128(root), out);
    return;
  }
  const u128 d = find_divisor(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(const BigInt& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "factorize: argument must be positive");
  if (n > magnitude_bound()) fail(ErrorCode::MagnitudeExceeded, "factorize: argument exceeds 2^128");
  std::vector<Factorization::Term> terms;
  BigInt rest = n;
  const u64 twos = rest == 0 ? 0 : boost::multiprecision::lsb(rest);
  if (twos) {
    terms.push_back({2, twos});
    rest >>= twos;
  }
  u128 m = to_u128(rest);
  for (u64 p : trial_primes()) {
    if (p == 2) continue;
    if (static_cast<u128>(p) * p > m) break;
    if (m % p) continue;
    u64 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    terms.push_back({p, e});
  }
  if (m > 1) {
    if (m < static_cast<u128>(kTrialLimit) * kTrialLimit) {
      terms.push_back({from_u128(m), 1});
    } else {
      split(m, terms);
    }
  }
  return Factorization::collect(std::move(terms));
}

}  // namespace gk
