#include <algorithm>
#include <cctype>

#include "gk/exact_arith.hpp"

namespace gk {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::MagnitudeExceeded: return "E_MAGNITUDE";
    case ErrorCode::IllegalSpec: return "E_ILLEGAL_SPEC";
    case ErrorCode::Unsupported: return "E_UNSUPPORTED";
    case ErrorCode::InvalidExponent: return "E_INVALID_EXPONENT";
    case ErrorCode::BoundTooSmall: return "E_BOUND_TOO_SMALL";
    case ErrorCode::Domain: return "E_DOMAIN";
    case ErrorCode::Parse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

const BigInt& magnitude_bound() {
  static const BigInt bound = pow2(128);
  return bound;
}

BigInt parse_natural(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(ErrorCode::Parse, "expected a non-negative decimal integer, got '" + text + "'");
  return BigInt(text);
}

u64 valuation(const BigInt& n, const BigInt& t) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "valuation: argument must be positive");
  if (t < 2) fail(ErrorCode::InvalidArgument, "valuation: base must be at least 2");
  if (t == 2) return boost::multiprecision::lsb(n);
  u64 v = 0;
  BigInt m = n, q, r;
  for (;;) {
    boost::multiprecision::divide_qr(m, t, q, r);
    if (r != 0) return v;
    m = q;
    ++v;
  }
}

BigInt t_part(const BigInt& n, const BigInt& t) {
  if (!is_prime(t)) fail(ErrorCode::InvalidArgument, "t_part: " + t.str() + " is not prime");
  return pow(t, static_cast<unsigned>(valuation(n, t)));
}

BigInt legendre_valuation(const BigInt& n, const BigInt& t) {
  if (!is_prime(t)) fail(ErrorCode::InvalidArgument, "legendre_valuation: " + t.str() + " is not prime");
  BigInt total = 0, m = n;
  while (m > 0) {
    m /= t;
    total += m;
  }
  return total;
}

BigInt mult_order(const BigInt& r, const BigInt& a) {
  if (!is_prime(r)) fail(ErrorCode::InvalidArgument, "mult_order: modulus " + r.str() + " is not prime");
  if (a < 2) fail(ErrorCode::InvalidArgument, "mult_order: base must be at least 2");
  if (a % r == 0) fail(ErrorCode::InvalidArgument, "mult_order: gcd(" + r.str() + ", " + a.str() + ") != 1");
  if (r == 2) return a % 4 == 1 ? 1 : 2;
  BigInt order = r - 1;
  const BigInt base = a % r;
  const Factorization order_factors = factorize(order);
  for (const auto& term : order_factors.terms()) {
    for (u64 i = 0; i < term.exponent; ++i) {
      const BigInt candidate = order / term.prime;
      if (boost::multiprecision::powm(base, candidate, r) != 1) break;
      order = candidate;
    }
  }
  return order;
}

u64 eta(u64 m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "eta: argument must be positive");
  return m % 2 ? m : m / 2;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(unsigned n) {
  int sign = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

BigInt cyclotomic_value(const BigInt& a, unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic_value: index must be positive");
  if (a < 2) fail(ErrorCode::InvalidArgument, "cyclotomic_value: base must be at least 2");
  BigInt num = 1, den = 1;
  for (unsigned d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) num *= pow(a, d) - 1;
    if (mu == -1) den *= pow(a, d) - 1;
  }
  return num / den;
}

Factorization factor_power_minus_one(const BigInt& a, unsigned n) {
  Factorization out;
  for (unsigned d : divisors(n)) out *= factorize(cyclotomic_value(a, d));
  return out;
}

Factorization factor_power_plus_one(const BigInt& a, unsigned n) {
  Factorization out;
  for (unsigned d : divisors(2 * n))
    if (n % d != 0) out *= factorize(cyclotomic_value(a, d));
  return out;
}

std::vector<BigInt> ppd_set(const BigInt& a, unsigned n) {
  if (a < 2 || n < 1) fail(ErrorCode::InvalidArgument, "ppd_set: need a >= 2 and n >= 1");
  const BigInt phi = cyclotomic_value(a, n);
  if (phi > magnitude_bound())
    fail(ErrorCode::MagnitudeExceeded, "ppd_set: Phi_" + std::to_string(n) + "(" + a.str() + ") exceeds 2^128");
  std::vector<BigInt> out;
  const Factorization phi_factors = factorize(phi);
  for (const auto& term : phi_factors.terms()) {
    if (term.prime == 2 && a % 2 == 0) continue;
    if (mult_order(term.prime, a) == n) out.push_back(term.prime);
  }
  return out;
}

bool mersenne_check(u64 p) {
  if (!is_prime_u64(p)) return false;
  if (p == 2) return true;
  const BigInt m = pow2(static_cast<unsigned>(p)) - 1;
  BigInt s = 4;
  for (u64 i = 0; i + 2 < p; ++i) s = (s * s - 2) % m;
  return s == 0;
}

BigInt integer_root(const BigInt& n, unsigned k) {
  if (n < 0 || k == 0) fail(ErrorCode::InvalidArgument, "integer_root: bad arguments");
  if (n < 2 || k == 1) return n;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  BigInt lo = 0, hi = pow2(bits / k + 1);
  while (lo < hi) {
    const BigInt mid = (lo + hi + 1) / 2;
    if (pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<PrimePower> as_prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  static const std::vector<u64> small = primes_up_to(1000);
  for (u64 t : small) {
    if (q % t != 0) continue;
    if (auto e = exact_log(q, t)) return PrimePower{t, *e};
    return std::nullopt;
  }
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(q));
  for (unsigned k = std::max(bits, 1u); k >= 2; --k) {
    const BigInt root = integer_root(q, k);
    if (pow(root, k) == q) {
      if (is_prime(root)) return PrimePower{root, k};
      return std::nullopt;
    }
  }
  if (is_prime(q)) return PrimePower{q, 1};
  return std::nullopt;
}

std::optional<unsigned> exact_log(const BigInt& n, const BigInt& base) {
  if (n < 1 || base < 2) return std::nullopt;
  unsigned e = 0;
  BigInt m = n;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1 || e == 0) return std::nullopt;
  return e;
}

}  // namespace gk
