#include <doctest.h>

#include "gk/exact_arith.hpp"
#include "gk/factorization.hpp"

using namespace gk;

TEST_CASE("parse and print") {
  const Factorization f = Factorization::parse("2^25·3^6·5^2·7·11·17·31");
  CHECK(f.to_string() == "2^25·3^6·5^2·7·11·17·31");
  CHECK(Factorization::parse("2^25*3^6*5^2*7*11*17*31") == f);
  CHECK(Factorization::parse("1").is_one());
  CHECK(Factorization().to_string() == "1");
  CHECK(f.exponent_of(2) == 25);
  CHECK(f.exponent_of(13) == 0);
  CHECK(f.part(3) == 729);
  CHECK(f.primes() == std::vector<BigInt>{2, 3, 5, 7, 11, 17, 31});
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "2^", "x", "2^0", "4^2", "3·2", "2·2"}) {
    INFO(bad);
    CHECK_THROWS_AS(Factorization::parse(bad), Error);
  }
}

TEST_CASE("from_terms validates its invariants") {
  CHECK_NOTHROW(Factorization::from_terms({{2, 1}, {3, 2}}));
  CHECK_THROWS_AS(Factorization::from_terms({{4, 1}}), Error);
  CHECK_THROWS_AS(Factorization::from_terms({{3, 1}, {2, 1}}), Error);
  CHECK_THROWS_AS(Factorization::from_terms({{2, 0}}), Error);
  CHECK_THROWS_AS(Factorization::from_terms({{3, 1}, {3, 1}}), Error);
}

TEST_CASE("collect merges and sorts") {
  const Factorization f = Factorization::collect({{3, 1}, {2, 2}, {3, 4}});
  CHECK(f.to_string() == "2^2·3^5");
}

TEST_CASE("arithmetic on factorizations") {
  const Factorization a = factorize(360), b = factorize(12);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.quotient(b).value() == 30);
  CHECK_THROWS_AS(b.quotient(a), Error);
  CHECK((a * b).value() == 4320);
  CHECK(factorize(35).coprime_to(factorize(12)));
  CHECK_FALSE(factorize(35).coprime_to(factorize(10)));
  CHECK(a.restricted_to({2, 5}).value() == 40);
}

TEST_CASE("values round-trip through factorize") {
  for (u64 n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(Factorization::parse(f.to_string()) == f);
    REQUIRE(factorize(f.value()) == f);
  }
}
