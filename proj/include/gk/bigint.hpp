#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gk {

using BigInt = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest value accepted by is_prime/factorize: 2^128.
const BigInt& magnitude_bound();

inline bool fits_u128(const BigInt& x) { return x >= 0 && boost::multiprecision::msb(x | 1) < 128; }

inline u128 to_u128(const BigInt& x) {
  u128 lo = static_cast<u64>(x & 0xFFFFFFFFFFFFFFFFull);
  u128 hi = static_cast<u64>((x >> 64) & 0xFFFFFFFFFFFFFFFFull);
  return (hi << 64) | lo;
}

inline BigInt from_u128(u128 x) {
  BigInt r = static_cast<u64>(x >> 64);
  r <<= 64;
  r += static_cast<u64>(x);
  return r;
}

inline BigInt pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }
inline BigInt pow2(unsigned exp) { return BigInt(1) << exp; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// Parses a non-negative decimal integer; throws Error(Parse) otherwise.
BigInt parse_natural(const std::string& text);

}  // namespace gk
