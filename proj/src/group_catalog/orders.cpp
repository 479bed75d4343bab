#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

namespace {

// Factored polynomial pieces of |G| in q = t^f, built through the cyclotomic
// factors of t^(fk) -/+ 1 so every piece stays small.
struct Field {
  BigInt t;
  unsigned f;
  BigInt q;

  Factorization minus(unsigned k) const { return factor_power_minus_one(t, f * k); }
  Factorization plus(unsigned k) const { return factor_power_plus_one(t, f * k); }
  Factorization power(u64 n) const { return Factorization::prime_power(t, static_cast<u64>(f) * n); }
  BigInt qk(unsigned k) const { return pow(q, k); }
};

Factorization divide_by(const Factorization& order, const BigInt& d) {
  if (d == 1) return order;
  return order.quotient(factorize(d));
}

Factorization alternating_order(unsigned n) {
  if (n > 1000000) fail(ErrorCode::MagnitudeExceeded, "alternating degree above 10^6");
  std::vector<Factorization::Term> terms;
  for (u64 p : primes_up_to(n)) {
    u64 v = static_cast<u64>(legendre_valuation(n, p));
    if (p == 2) --v;
    terms.push_back({p, v});
  }
  return Factorization::collect(std::move(terms));
}

Factorization lie_order(const GroupSpec& s) {
  const Field F{s.characteristic, s.fexp, s.q()};
  const unsigned n = s.rank;
  Factorization o;
  switch (s.family) {
    case Family::A:
      o = F.power(static_cast<u64>(n) * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) o *= F.minus(i);
      return divide_by(o, gcd(BigInt(n + 1), F.q - 1));
    case Family::TwoA:
      o = F.power(static_cast<u64>(n) * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) o *= i % 2 ? F.plus(i) : F.minus(i);
      return divide_by(o, gcd(BigInt(n + 1), F.q + 1));
    case Family::B:
    case Family::C:
      o = F.power(static_cast<u64>(n) * n);
      for (unsigned i = 1; i <= n; ++i) o *= F.minus(2 * i);
      return divide_by(o, gcd(BigInt(2), F.q - 1));
    case Family::D:
      o = F.power(static_cast<u64>(n) * (n - 1)) * F.minus(n);
      for (unsigned i = 1; i < n; ++i) o *= F.minus(2 * i);
      return divide_by(o, gcd(BigInt(4), F.qk(n) - 1));
    case Family::TwoD:
      o = F.power(static_cast<u64>(n) * (n - 1)) * F.plus(n);
      for (unsigned i = 1; i < n; ++i) o *= F.minus(2 * i);
      return divide_by(o, gcd(BigInt(4), F.qk(n) + 1));
    case Family::G2:
      return F.power(6) * F.minus(6) * F.minus(2);
    case Family::TwoG2:
      return F.power(3) * F.plus(3) * F.minus(1);
    case Family::F4:
      return F.power(24) * F.minus(12) * F.minus(8) * F.minus(6) * F.minus(2);
    case Family::TwoF4:
      return F.power(12) * F.plus(6) * F.minus(4) * F.plus(3) * F.minus(1);
    case Family::TwoB2:
      return F.power(2) * F.plus(2) * F.minus(1);
    case Family::ThreeD4:
      // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
      return F.power(12) * F.minus(12).quotient(F.minus(4)) * F.minus(6) * F.minus(2);
    case Family::E6:
      o = F.power(36) * F.minus(12) * F.minus(9) * F.minus(8) * F.minus(6) * F.minus(5) * F.minus(2);
      return divide_by(o, gcd(BigInt(3), F.q - 1));
    case Family::TwoE6:
      o = F.power(36) * F.minus(12) * F.plus(9) * F.minus(8) * F.minus(6) * F.plus(5) * F.minus(2);
      return divide_by(o, gcd(BigInt(3), F.q + 1));
    case Family::E7:
      o = F.power(63);
      for (unsigned d : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) o *= F.minus(d);
      return divide_by(o, gcd(BigInt(2), F.q - 1));
    case Family::E8:
      o = F.power(120);
      for (unsigned d : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) o *= F.minus(d);
      return o;
    default:
      fail(ErrorCode::InvalidArgument, "not a Lie-type family");
  }
}

}  // namespace

Factorization group_order(const GroupSpec& spec) {
  validate(spec);
  if (spec.family == Family::Alt) return alternating_order(spec.rank);
  if (spec.family == Family::Sporadic) return find_named(spec.name)->order;
  return lie_order(spec);
}

std::vector<BigInt> prime_set(const GroupSpec& spec) { return group_order(spec).primes(); }

BigInt out_order(const GroupSpec& s) {
  validate(s);
  const BigInt f = s.fexp;
  switch (s.family) {
    case Family::A:
      if (s.rank == 1) return 2 * f;
      return 2 * f * gcd(BigInt(s.rank + 1), s.q() - 1);
    case Family::TwoA:
      return 2 * f * gcd(BigInt(s.rank + 1), s.q() + 1);
    case Family::B:
    case Family::C: {
      BigInt o = gcd(BigInt(2), s.q() - 1) * f;
      if (s.rank == 2 && s.characteristic == 2) o *= 2;
      return o;
    }
    case Family::D:
      return gcd(BigInt(4), pow(s.q(), s.rank) - 1) * f * (s.rank == 4 ? 6 : 2);
    case Family::TwoD:
      return gcd(BigInt(4), pow(s.q(), s.rank) + 1) * 2 * f;
    default:
      fail(ErrorCode::Unsupported, "out_order: " + s.label() + " is outside the classical families");
  }
}

}  // namespace gk
