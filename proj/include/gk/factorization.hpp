#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gk/bigint.hpp"

namespace gk {

// Exact positive integer held as ascending (prime, exponent) pairs.
class Factorization {
 public:
  struct Term {
    BigInt prime;
    u64 exponent = 0;
    bool operator==(const Term&) const = default;
  };

  Factorization() = default;

  // Validates primality, strict ascent and positive exponents.
  static Factorization from_terms(std::vector<Term> terms);
  static Factorization prime_power(const BigInt& prime, u64 exponent);
  // Trusted constructor for internal producers; merges and sorts.
  static Factorization collect(std::vector<Term> terms);
  // Accepts "2^25·3^6·5" (also '*' as separator) or "1".
  static Factorization parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::vector<BigInt> primes() const;
  u64 exponent_of(const BigInt& prime) const;
  BigInt part(const BigInt& prime) const;
  BigInt value() const;

  bool divides(const Factorization& other) const;
  bool coprime_to(const Factorization& other) const;
  // Throws Error(Domain) unless divisor divides *this.
  Factorization quotient(const Factorization& divisor) const;
  // Restriction to the given primes.
  Factorization restricted_to(const std::vector<BigInt>& primes) const;

  Factorization& operator*=(const Factorization& other);
  friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }
  bool operator==(const Factorization&) const = default;

  // "2^25·3^6·5^2·7" with U+00B7 separators; "1" for the empty product.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace gk
