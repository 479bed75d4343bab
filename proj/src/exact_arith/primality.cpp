#include <array>

#include "exact_arith/mont128.hpp"
#include "gk/exact_arith.hpp"

namespace gk {

namespace {

using detail::Mont128;

constexpr std::array<u64, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Smallest composite passing Miller-Rabin for all 13 bases above is larger
// than this (Sorenson & Webster 2015).
const u128 kThirteenBaseLimit = static_cast<u128>(3317044064679887ull) * 1000000000ull + 385961981ull;

bool strong_probable_prime(const Mont128& m, u128 n, u64 base) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const u128 a = base % n;
  if (a == 0) return true;
  const u128 minus_one = m.sub(0, m.one());
  u128 x = m.pow(m.to(a), d);
  if (x == m.one() || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = m.mul(x, x);
    if (x == minus_one) return true;
    if (x == m.one()) return false;
  }
  return false;
}

int jacobi(u128 a, u128 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_square(u128 n) {
  BigInt r = boost::multiprecision::sqrt(from_u128(n));
  return r * r == from_u128(n);
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
bool strong_lucas(const Mont128& m, u128 n) {
  if (is_square(n)) return false;
  long long d_signed = 5;
  for (;;) {
    const u128 dm = d_signed > 0 ? static_cast<u128>(d_signed) % n
                                 : (n - static_cast<u128>(-d_signed) % n) % n;
    const int j = jacobi(dm, n);
    if (j == -1) break;
    if (j == 0 && static_cast<u128>(d_signed > 0 ? d_signed : -d_signed) != n) return false;
    d_signed = d_signed > 0 ? -(d_signed + 2) : -d_signed + 2;
  }
  auto residue = [&](long long v) {
    return v >= 0 ? static_cast<u128>(v) % n : (n - static_cast<u128>(-v) % n) % n;
  };
  const u128 D = m.to(residue(d_signed));
  const u128 Q = m.to(residue((1 - d_signed) / 4));
  const u128 P = m.one();

  u128 k = n + 1;  // n is odd and below 2^128 - 1 here
  int s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }
  int top = 127;
  while (((k >> top) & 1) == 0) --top;
  u128 U = m.one(), V = P, Qk = Q;
  for (int bit = top - 1; bit >= 0; --bit) {
    U = m.mul(U, V);
    V = m.sub(m.mul(V, V), m.add(Qk, Qk));
    Qk = m.mul(Qk, Qk);
    if ((k >> bit) & 1) {
      const u128 nu = m.half(m.add(m.mul(P, U), V));
      const u128 nv = m.half(m.add(m.mul(D, U), m.mul(P, V)));
      U = nu;
      V = nv;
      Qk = m.mul(Qk, Q);
    }
  }
  if (U == 0 || V == 0) return true;
  for (int r = 1; r < s; ++r) {
    V = m.sub(m.mul(V, V), m.add(Qk, Qk));
    Qk = m.mul(Qk, Qk);
    if (V == 0) return true;
  }
  return false;
}

bool trial_screen(u128 n, bool& decided) {
  static constexpr std::array<unsigned, 25> small = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  decided = true;
  if (n < 2) return false;
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 97 * 97) return true;
  decided = false;
  return false;
}

bool is_prime_u128(u128 n) {
  bool decided = false;
  const bool screened = trial_screen(n, decided);
  if (decided) return screened;
  Mont128 m(n);
  if (n < kThirteenBaseLimit) {
    for (u64 b : kBases)
      if (!strong_probable_prime(m, n, b)) return false;
    return true;
  }
  return strong_probable_prime(m, n, 2) && strong_lucas(m, n);
}

}  // namespace

bool is_prime_u64(u64 n) { return is_prime_u128(n); }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n > magnitude_bound()) fail(ErrorCode::MagnitudeExceeded, "is_prime: argument exceeds 2^128");
  if (!fits_u128(n)) return false;  // n == 2^128
  return is_prime_u128(to_u128(n));
}

}  // namespace gk
