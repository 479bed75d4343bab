#pragma once

#include "gk/bigint.hpp"

namespace gk::detail {

struct Wide {
  u128 hi, lo;
};

inline Wide mul_wide(u128 a, u128 b) {
  const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
  const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
  return {p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64), (mid << 64) | static_cast<u64>(p00)};
}

inline u128 add_mod(u128 a, u128 b, u128 n) {
  u128 s = a + b;
  if (s < a || s >= n) s -= n;
  return s;
}

inline u128 sub_mod(u128 a, u128 b, u128 n) { return a >= b ? a - b : a + (n - b); }

// Montgomery arithmetic modulo an odd n < 2^128, R = 2^128.
class Mont128 {
 public:
  explicit Mont128(u128 n) : n_(n) {
    u128 x = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 7; ++i) x *= 2 - n * x;
    ninv_ = x;
    u128 r = (~n + 1) % n;  // R mod n
    one_ = r;
    for (int i = 0; i < 128; ++i) r = add_mod(r, r, n);
    r2_ = r;
  }

  u128 modulus() const { return n_; }
  u128 one() const { return one_; }

  u128 reduce(Wide t) const {
    const u128 m = t.lo * ninv_;
    const u128 mn_hi = mul_wide(m, n_).hi;
    return t.hi >= mn_hi ? t.hi - mn_hi : t.hi + (n_ - mn_hi);
  }
  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }
  u128 to(u128 a) const { return mul(a % n_, r2_); }
  u128 from(u128 a) const { return reduce({0, a}); }
  u128 add(u128 a, u128 b) const { return add_mod(a, b, n_); }
  u128 sub(u128 a, u128 b) const { return sub_mod(a, b, n_); }
  u128 half(u128 a) const {
    if ((a & 1) == 0) return a >> 1;
    // (a + n) / 2 without overflow
    return (a >> 1) + (n_ >> 1) + 1;
  }
  u128 pow(u128 base_m, u128 e) const {
    u128 r = one_;
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }

 private:
  u128 n_, ninv_, one_, r2_;
};

inline u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace gk::detail
