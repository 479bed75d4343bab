#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

namespace {

bool power_of_two(unsigned n) { return n >= 1 && (n & (n - 1)) == 0; }
bool prime(unsigned n) { return is_prime_u64(n); }

[[noreturn]] void connected(const GroupSpec& s) {
  fail(ErrorCode::Unsupported, s.label() + ": no odd order component under the catalog's rules");
}

std::vector<BigInt> alternating_components(const GroupSpec& s) {
  const unsigned n = s.rank;
  const Factorization order = group_order(s);
  std::vector<BigInt> out;
  for (unsigned p = 3; p <= n; p += 2) {
    if (!prime(p)) continue;
    // p is joined to 2 once p + 4 points are available and to another odd
    // prime s once p + s are.
    const unsigned nearest_odd = p == 3 ? 5 : 3;
    if (p + 4 <= n || p + nearest_odd <= n) continue;
    out.push_back(order.part(p));
  }
  if (out.empty()) connected(s);
  return out;
}

std::vector<BigInt> lie_components(const GroupSpec& s) {
  const BigInt q = s.q();
  const unsigned n = s.rank;
  auto qp = [&](unsigned k) { return pow(q, k); };
  switch (s.family) {
    case Family::A:
      if (n == 1) {
        if (s.characteristic == 2) return {q - 1, q + 1};
        if (q % 4 == 1) return {(q + 1) / 2, q};
        return {(q - 1) / 2, q};
      }
      if (n == 2 && q == 2) return {3, 7};  // A_2(2) = A_1(7)
      if (prime(n + 1) && !(n + 1 == 3 && q == 4))
        return {(qp(n + 1) - 1) / ((q - 1) * gcd(BigInt(n + 1), q - 1))};
      if (n % 2 == 1 && prime(n) && (n + 1) % (q - 1) == 0) return {(qp(n) - 1) / (q - 1)};
      break;
    case Family::TwoA:
      if (prime(n + 1) && n + 1 >= 3) return {(qp(n + 1) + 1) / ((q + 1) * gcd(BigInt(n + 1), q + 1))};
      if (n % 2 == 1 && prime(n) && (n + 1) % (q + 1) == 0 && !(n == 3 && q == 3)) return {(qp(n) + 1) / (q + 1)};
      break;
    case Family::B:
    case Family::C:
      if (power_of_two(n)) return {(qp(n) + 1) / gcd(BigInt(2), q - 1)};
      if (prime(n) && (q == 2 || q == 3)) return {(qp(n) - 1) / gcd(BigInt(2), q - 1)};
      break;
    case Family::D:
      if (prime(n) && n >= 5 && (q == 2 || q == 3 || q == 5)) return {(qp(n) - 1) / (q - 1)};
      if (prime(n - 1) && n - 1 >= 3 && (q == 2 || q == 3)) return {(qp(n - 1) - 1) / gcd(BigInt(2), q - 1)};
      break;
    case Family::TwoD:
      if (power_of_two(n) && n >= 4) return {(qp(n) + 1) / gcd(BigInt(2), q + 1)};
      if (q == 2 && n >= 5 && power_of_two(n - 1)) return {qp(n - 1) + 1};
      if (q == 3 && prime(n) && power_of_two(n - 1)) return {(qp(n - 1) + 1) / 2, (qp(n) + 1) / 4};
      if (q == 3 && !prime(n) && n >= 5 && power_of_two(n - 1)) return {(qp(n - 1) + 1) / 2};
      if (q == 3 && prime(n) && n >= 5) return {(qp(n) + 1) / 4};
      break;
    case Family::G2:
      if (s.characteristic == 3) return {qp(2) - q + 1, qp(2) + q + 1};
      return {q % 3 == 1 ? qp(2) - q + 1 : qp(2) + q + 1};
    case Family::TwoG2: {
      const BigInt r = pow(BigInt(3), (s.fexp + 1) / 2);  // sqrt(3q)
      return {q - r + 1, q + r + 1};
    }
    case Family::TwoB2: {
      const BigInt r = pow2((s.fexp + 1) / 2);  // sqrt(2q)
      return {q - 1, q - r + 1, q + r + 1};
    }
    case Family::TwoF4: {
      const BigInt r = pow2((s.fexp + 1) / 2);      // sqrt(2q)
      const BigInt r3 = pow2((3 * s.fexp + 1) / 2);  // sqrt(2q^3)
      return {qp(2) + r3 + q + r + 1, qp(2) - r3 + q - r + 1};
    }
    case Family::F4:
      if (s.characteristic == 2) return {qp(4) + 1, qp(4) - qp(2) + 1};
      return {qp(4) - qp(2) + 1};
    case Family::ThreeD4:
      return {qp(4) - qp(2) + 1};
    case Family::E6:
      return {(qp(6) + qp(3) + 1) / gcd(BigInt(3), q - 1)};
    case Family::TwoE6:
      if (q > 2) return {(qp(6) - qp(3) + 1) / gcd(BigInt(3), q + 1)};
      break;
    case Family::E8: {
      const BigInt phi15 = (qp(10) + qp(5) + 1) / (qp(2) + q + 1);
      const BigInt phi30 = (qp(10) - qp(5) + 1) / (qp(2) - q + 1);
      const BigInt phi20 = (qp(10) + 1) / (qp(2) + 1);
      const BigInt phi24 = qp(8) - qp(4) + 1;
      const unsigned r5 = static_cast<unsigned>(q % 5);
      if (r5 == 0 || r5 == 1 || r5 == 4) return {phi20, phi24, phi15, phi30};
      return {phi24, phi15, phi30};
    }
    default:
      break;
  }
  connected(s);
}

}  // namespace

std::vector<BigInt> odd_order_components(const GroupSpec& spec) {
  validate(spec);
  if (const NamedGroup* g = find_named(spec)) return g->odd_components;
  if (spec.family == Family::Alt) return alternating_components(spec);
  return lie_components(spec);
}

}  // namespace gk
