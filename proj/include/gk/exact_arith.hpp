#pragma once

#include <optional>
#include <vector>

#include "gk/bigint.hpp"
#include "gk/error.hpp"
#include "gk/factorization.hpp"

namespace gk {

// Deterministic for every n <= 2^128: Miller-Rabin with the first 13 prime
// bases below 3.3e24, Baillie-PSW above. Larger n raise MagnitudeExceeded.
bool is_prime(const BigInt& n);
bool is_prime_u64(u64 n);

// Complete factorization for 1 <= n <= 2^128 (trial division + Pollard rho).
Factorization factorize(const BigInt& n);

std::vector<u64> primes_up_to(u64 limit);

u64 valuation(const BigInt& n, const BigInt& t);
BigInt t_part(const BigInt& n, const BigInt& t);
BigInt legendre_valuation(const BigInt& n, const BigInt& t);

// e(r, a). For r = 2 the order is taken as 1 when a = 1 mod 4 and 2 when
// a = 3 mod 4.
BigInt mult_order(const BigInt& r, const BigInt& a);
u64 eta(u64 m);

std::vector<unsigned> divisors(unsigned n);
int mobius(unsigned n);
// Phi_n(a), exact.
BigInt cyclotomic_value(const BigInt& a, unsigned n);
// a^n - 1 and a^n + 1 factored through their cyclotomic pieces.
Factorization factor_power_minus_one(const BigInt& a, unsigned n);
Factorization factor_power_plus_one(const BigInt& a, unsigned n);

// Primes r with e(r, a) = n, ascending. Requires Phi_n(a) <= 2^128.
std::vector<BigInt> ppd_set(const BigInt& a, unsigned n);

// p prime and 2^p - 1 prime (Lucas-Lehmer).
bool mersenne_check(u64 p);

struct CatalanSolution {
  u64 p = 0, q = 0, m = 0, n = 0;
  bool operator==(const CatalanSolution&) const = default;
};
// All p^m - q^n = 1 with p, q prime <= max_base and 2 <= m, n <= max_exp.
std::vector<CatalanSolution> catalan_solutions(u64 max_base, u64 max_exp);

BigInt partition_count(unsigned n);
BigInt abelian_group_count(const Factorization& f);

BigInt integer_root(const BigInt& n, unsigned k);
struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};
// q = t^f with t prime, f >= 1; nullopt otherwise.
std::optional<PrimePower> as_prime_power(const BigInt& q);
// base^e == n for some e >= 1.
std::optional<unsigned> exact_log(const BigInt& n, const BigInt& base);

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace gk
