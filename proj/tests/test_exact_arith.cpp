#include <doctest.h>

#include <chrono>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "gk/exact_arith.hpp"

using namespace gk;

namespace {

// Independent oracles: plain trial division and direct enumeration.
bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

u64 naive_order(u64 r, u64 a) {
  u64 x = a % r;
  for (u64 k = 1;; ++k) {
    if (x == 1) return k;
    x = x * a % r;
  }
}

BigInt count_partitions(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  BigInt total = 0;
  for (unsigned k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(2047));
  CHECK(is_prime(8191));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(pow2(61) - 1));
  CHECK(is_prime(pow2(127) - 1));
  CHECK_FALSE(is_prime(pow2(128) - 1));
}

TEST_CASE("is_prime agrees with trial division below 10^5") {
  for (u64 n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == trial_prime(n));
}

TEST_CASE("is_prime rejects strong pseudoprimes") {
  // 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7.
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(BigInt("3317044064679887385961981")));  // base 2..37 pseudoprime
  CHECK_FALSE(is_prime(BigInt(1000003) * 1000033));
}

TEST_CASE("is_prime rejects values above 2^128") {
  try {
    is_prime(magnitude_bound() + 1);
    FAIL("expected MagnitudeExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MagnitudeExceeded);
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1023) == Factorization::parse("3·11·31"));
  CHECK(factorize(1).is_one());
  CHECK(factorize(pow2(25) * 729 * 25 * 7 * 11 * 17 * 31) == Factorization::parse("2^25·3^6·5^2·7·11·17·31"));
  CHECK_THROWS_AS(factorize(0), Error);
  CHECK_THROWS_AS(factorize(magnitude_bound() + 1), Error);
}

TEST_CASE("factorize round-trips every n up to 10^6") {
  for (u64 n = 1; n <= 1000000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(f.value() == n);
    for (const auto& t : f.terms()) REQUIRE(trial_prime(static_cast<u64>(t.prime)));
  }
}

TEST_CASE("factorize round-trips random 64-bit values") {
  std::mt19937_64 rng(20240501);
  std::mt19937 mr_rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 n = rng() | 1;
    const Factorization f = factorize(n);
    REQUIRE(f.value() == n);
    for (const auto& t : f.terms()) REQUIRE(boost::multiprecision::miller_rabin_test(t.prime, 40, mr_rng));
  }
}

TEST_CASE("factorize splits 2^k - 1 and 2^k + 1 for k <= 64 in under a second each") {
  for (unsigned k = 1; k <= 64; ++k)
    for (const BigInt& n : std::vector<BigInt>{pow2(k) - 1, pow2(k) + 1}) {
      if (n < 1) continue;
      const auto start = std::chrono::steady_clock::now();
      const Factorization f = factorize(n);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      REQUIRE(f.value() == n);
      CHECK(elapsed < std::chrono::seconds(1));
    }
  CHECK(factorize((pow2(61) - 1) * 1000003).terms().size() == 2);
}

TEST_CASE("t_part") {
  CHECK(t_part(3 * 15 * 63 * 255 * 1023, 3) == 729);
  CHECK(t_part(7, 2) == 1);
  CHECK(t_part(pow2(25) * 729 * 25 * 7 * 11 * 17 * 31, 2) == pow2(25));
  CHECK_THROWS_AS(t_part(12, 4), Error);
}

TEST_CASE("legendre_valuation examples and factorial oracle") {
  CHECK(legendre_valuation(31, 2) == 26);
  CHECK(legendre_valuation(1, 2) == 0);
  CHECK(legendre_valuation(10, 3) == 4);
  CHECK(legendre_valuation(127, 2) == 120);
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned t : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u})
      REQUIRE(legendre_valuation(n, t) == valuation(factorial(n), t));
}

TEST_CASE("mult_order examples") {
  CHECK(mult_order(31, 2) == 5);
  CHECK(mult_order(2, 7) == 2);
  CHECK(mult_order(2, 5) == 1);
  CHECK(mult_order(7, 2) == 3);
  CHECK_THROWS_AS(mult_order(7, 14), Error);
  CHECK_THROWS_AS(mult_order(9, 2), Error);
}

TEST_CASE("mult_order divides r-1 and is minimal") {
  for (u64 r : primes_up_to(10000)) {
    if (r == 2) continue;
    for (u64 a : {2u, 3u, 5u}) {
      if (a % r == 0) continue;
      const u64 e = static_cast<u64>(mult_order(r, a));
      REQUIRE((r - 1) % e == 0);
      REQUIRE(boost::multiprecision::powm(BigInt(a), e, BigInt(r)) == 1);
      REQUIRE(e == naive_order(r, a));
    }
  }
}

TEST_CASE("eta") {
  CHECK(eta(7) == 7);
  CHECK(eta(10) == 5);
  CHECK(eta(1) == 1);
  CHECK_THROWS_AS(eta(0), Error);
}

TEST_CASE("ppd_set examples") {
  CHECK(ppd_set(2, 6).empty());
  CHECK(ppd_set(2, 10) == std::vector<BigInt>{11});
  CHECK(ppd_set(2, 1).empty());
  CHECK(ppd_set(3, 1).empty());
  CHECK(ppd_set(3, 2) == std::vector<BigInt>{2});  // e(2, 3) = 2
  CHECK(ppd_set(5, 1) == std::vector<BigInt>{2});  // e(2, 5) = 1
  CHECK(ppd_set(2, 5) == std::vector<BigInt>{31});
}

TEST_CASE("Zsigmondy: ppd_set is non-empty outside the three exceptions") {
  for (unsigned a = 2; a <= 20; ++a)
    for (unsigned n = 1; n <= 30; ++n) {
      const bool exception = (n == 1 && (a == 2 || a == 3)) || (n == 6 && a == 2);
      INFO("a = " << a << ", n = " << n);
      REQUIRE(ppd_set(a, n).empty() == exception);
    }
}

TEST_CASE("every ppd divides a^n - 1 and no earlier a^k - 1") {
  for (unsigned a = 2; a <= 20; ++a)
    for (unsigned n = 1; n <= 30; ++n)
      for (const BigInt& r : ppd_set(a, n)) {
        INFO("a = " << a << ", n = " << n << ", r = " << r);
        REQUIRE((pow(BigInt(a), n) - 1) % r == 0);
        if (r == 2) {
          // e(2, a) is 1 for a = 1 mod 4 and 2 for a = 3 mod 4.
          REQUIRE(n == (a % 4 == 1 ? 1u : 2u));
          continue;
        }
        for (unsigned k = 1; k < n; ++k) REQUIRE((pow(BigInt(a), k) - 1) % r != 0);
      }
}

TEST_CASE("mersenne_check") {
  CHECK(mersenne_check(5));
  CHECK_FALSE(mersenne_check(11));
  CHECK_FALSE(mersenne_check(4));
  std::vector<u64> found;
  for (u64 p = 0; p <= 130; ++p)
    if (mersenne_check(p)) found.push_back(p);
  CHECK(found == std::vector<u64>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127});
}

TEST_CASE("catalan_solutions") {
  CHECK(catalan_solutions(100, 20) == std::vector<CatalanSolution>{{3, 2, 2, 3}});
  CHECK(catalan_solutions(2, 2).empty());
  CHECK(catalan_solutions(3, 3) == std::vector<CatalanSolution>{{3, 2, 2, 3}});
}

TEST_CASE("partition_count matches the pentagonal recurrence and direct enumeration") {
  CHECK(partition_count(9) == 30);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(100) == BigInt("190569292"));
  std::vector<BigInt> p(31, 0);
  p[0] = 1;
  for (int n = 1; n <= 30; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  for (unsigned n = 0; n <= 30; ++n) {
    REQUIRE(partition_count(n) == p[n]);
    REQUIRE(partition_count(n) == count_partitions(n, n));
  }
}

TEST_CASE("abelian_group_count") {
  CHECK(abelian_group_count(Factorization::parse("2^9·3^4·5^9·7·13·31")) == 4500);
  CHECK(abelian_group_count(Factorization()) == 1);
  CHECK(abelian_group_count(Factorization::parse("2^3")) == 3);
}

TEST_CASE("cyclotomic values and factored a^n -+ 1") {
  CHECK(cyclotomic_value(2, 12) == 13);
  CHECK(cyclotomic_value(3, 1) == 2);
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(factor_power_minus_one(2, n).value() == pow2(n) - 1);
    CHECK(factor_power_plus_one(3, n).value() == pow(BigInt(3), n) + 1);
  }
}

TEST_CASE("roots and prime powers") {
  CHECK(integer_root(BigInt(1) << 90, 3) == BigInt(1) << 30);
  CHECK(integer_root(26, 3) == 2);
  auto pp = as_prime_power(243);
  REQUIRE(pp);
  CHECK(pp->prime == 3);
  CHECK(pp->exponent == 5);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(as_prime_power(1));
  CHECK(exact_log(1024, 2) == 10u);
  CHECK_FALSE(exact_log(1000, 2));
}
