#include <algorithm>

#include "checker/witness.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

using detail::str;
using detail::witness;

namespace {

using S = Strategy;
using K = WitnessKind;
using Outcome = Refutation::Outcome;

struct Context {
  u64 p;
  BigInt m;
  const Factorization& g;
};

std::optional<Factorization> order_of(const GroupSpec& s) {
  try {
    return group_order(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MagnitudeExceeded || e.code() == ErrorCode::Unsupported) return std::nullopt;
    throw;
  }
}

bool order_divisibility(const GroupSpec& s, const Context& c, Refutation& r) {
  const auto order = order_of(s);
  if (!order) return false;
  for (const auto& t : order->terms())
    if (c.g.exponent_of(t.prime) == 0) {
      r.witnesses.push_back(witness(K::PrimeOutside, S::OrderDivisibility,
                                    str(t.prime) + " divides |" + s.label() + "| but not |G|", {t.prime}));
      return true;
    }
  for (const auto& t : order->terms()) {
    const u64 vg = c.g.exponent_of(t.prime);
    if (t.exponent > vg) {
      r.witnesses.push_back(witness(K::ValuationExceeds, S::OrderDivisibility,
                                    "|" + s.label() + "|_" + str(t.prime) + " exceeds |G|_" + str(t.prime),
                                    {t.prime, t.exponent, vg}));
      return true;
    }
  }
  return false;
}

bool two_part_overflow(const GroupSpec& s, const Context& c, Refutation& r) {
  const auto order = order_of(s);
  if (!order) return false;
  const TwoPartCheck check = check_two_part_overflow(*order, c.p);
  if (!check.overflow) {
    r.diagnostic = "v_2(|" + s.label() + "|) = " + std::to_string(check.v_candidate) + " does not exceed v_2(|G|) = " +
                   std::to_string(check.v_group);
    return false;
  }
  r.witnesses.push_back(witness(K::ValuationExceeds, S::TwoPartOverflow,
                                "v_2(|" + s.label() + "|) = " + std::to_string(check.v_candidate) + " > v_2(|G|) = " +
                                    std::to_string(check.v_group),
                                {2, check.v_candidate, check.v_group}));
  return true;
}

// H is a nilpotent normal pi_1-subgroup with |G/K| dividing |Out(S)|; for a
// prime s != 2^p-1 every possible Sylow order |Q| = s^k, k >= 1, must satisfy
// 2^p-1 | |Q|-1.
bool lemma4(const GroupSpec& s, const Context& c, Refutation& r) {
  const auto order = order_of(s);
  if (!order || !order->divides(c.g)) return false;
  BigInt out;
  try {
    out = out_order(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
    return false;
  }
  const Factorization cofactor = c.g.quotient(*order);
  std::vector<BigInt> primes;
  const unsigned pu = static_cast<unsigned>(c.p);
  for (unsigned k : {2 * pu, 2 * (pu - 1)})
    for (const BigInt& t : ppd_set(2, k))
      if (cofactor.exponent_of(t) > 0) primes.push_back(t);
  for (const BigInt& t : cofactor.primes())
    if (std::find(primes.begin(), primes.end(), t) == primes.end()) primes.push_back(t);

  for (const BigInt& t : primes) {
    if (t == c.m) continue;
    const u64 vg = c.g.exponent_of(t), vs = order->exponent_of(t), vo = valuation(out, t);
    const u64 v = vg - vs;
    if (v <= vo) continue;  // |Q| = 1 is possible
    bool closes = true;
    for (u64 k = v - vo; k <= v; ++k)
      if (check_lemma4(c.m, pow(t, static_cast<unsigned>(k)))) closes = false;
    if (!closes) continue;
    const std::string who = "|" + s.label() + "|";
    r.witnesses.push_back(witness(K::Valuation, S::Lemma4Divisibility, "v_" + str(t) + "(|G|)", {c.g.value(), t, vg}));
    r.witnesses.push_back(witness(K::Valuation, S::Lemma4Divisibility, "v_" + str(t) + "(" + who + ")", {order->value(), t, vs}));
    r.witnesses.push_back(witness(K::Valuation, S::Lemma4Divisibility, "v_" + str(t) + "(|Out(" + s.label() + ")|)",
                                  {out, t, vo}));
    r.witnesses.push_back(witness(K::Less, S::Lemma4Divisibility,
                                  "the Sylow " + str(t) + "-subgroup Q of H is nontrivial", {BigInt(vo), BigInt(v)}));
    for (u64 k = v - vo; k <= v; ++k) {
      const BigInt q = pow(t, static_cast<unsigned>(k));
      r.witnesses.push_back(witness(K::NotDivides, S::Lemma4Divisibility,
                                    "|Q| = " + str(t) + "^" + std::to_string(k) + ": 2^p-1 does not divide |Q|-1",
                                    {c.m, q - 1}));
    }
    return true;
  }
  return false;
}

bool zsigmondy_outside(const GroupSpec& s, const Context& c, Refutation& r) {
  const auto order = order_of(s);
  if (!order) return false;
  for (const auto& t : order->terms()) {
    if (c.g.exponent_of(t.prime) > 0 || t.prime == 2) continue;
    const BigInt e = mult_order(t.prime, 2);
    r.witnesses.push_back(witness(K::PrimitiveDivisor, S::ZsigmondyOutside,
                                  str(t.prime) + " is a primitive prime divisor of 2^" + str(e) + "-1",
                                  {2, e, t.prime}));
    r.witnesses.push_back(witness(K::PrimeOutside, S::ZsigmondyOutside,
                                  str(t.prime) + " divides |" + s.label() + "| but not |G|", {t.prime}));
    return true;
  }
  return false;
}

bool confirm(const GroupSpec& s, const Context& c, Refutation& r) {
  if (s.family != Family::C || s.q() != 2) return false;
  const BigInt order = group_order(s).value();
  r.witnesses.push_back(witness(K::Equal, S::Confirm, "r = p", {BigInt(s.rank), BigInt(c.p)}));
  r.witnesses.push_back(witness(K::Equal, S::Confirm, "|" + s.label() + "| = |G|, so G/K = 1 and H = 1", {order, c.g.value()}));
  return s.rank == c.p && order == c.g.value();
}

}  // namespace

Refutation refute_solution(const GroupSpec& s, const std::vector<Strategy>& chain, u64 p,
                           const Factorization& group_order) {
  const Context c{p, detail::mersenne(p), group_order};
  Refutation r;
  for (Strategy strategy : chain) {
    Refutation attempt;
    bool decided = false;
    switch (strategy) {
      case S::OrderDivisibility: decided = order_divisibility(s, c, attempt); break;
      case S::TwoPartOverflow: decided = two_part_overflow(s, c, attempt); break;
      case S::Lemma4Divisibility: decided = lemma4(s, c, attempt); break;
      case S::ZsigmondyOutside: decided = zsigmondy_outside(s, c, attempt); break;
      case S::Confirm: decided = confirm(s, c, attempt); break;
      default: break;
    }
    if (decided) {
      attempt.outcome = strategy == S::Confirm ? Outcome::Confirmed : Outcome::Refuted;
      attempt.strategy = strategy;
      return attempt;
    }
    if (!attempt.diagnostic.empty()) r.diagnostic += (r.diagnostic.empty() ? "" : "; ") + attempt.diagnostic;
  }
  if (r.diagnostic.empty()) r.diagnostic = "no strategy in the chain decides " + s.label();
  return r;
}

}  // namespace gk
