#include <algorithm>
#include <array>

#include "gk/candidates.hpp"
#include "gk/exact_arith.hpp"

namespace gk {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 9> kStrategyNames{{
    {Strategy::OrderDivisibility, "OrderDivisibility"},
    {Strategy::TwoPartOverflow, "TwoPartOverflow"},
    {Strategy::ModContradiction, "ModContradiction"},
    {Strategy::TPartBound, "TPartBound"},
    {Strategy::Lemma4Divisibility, "Lemma4Divisibility"},
    {Strategy::ZsigmondyOutside, "ZsigmondyOutside"},
    {Strategy::CatalanNoSolution, "CatalanNoSolution"},
    {Strategy::BoundedSearchEmpty, "BoundedSearchEmpty"},
    {Strategy::Confirm, "Confirm"},
}};

// sqrt(base * q) for q = base^(2m+1).
BigInt shaped_root(const BigInt& q, unsigned base) {
  const auto e = exact_log(q, base);
  if (!e || *e % 2 == 0) fail(ErrorCode::Domain, "q = " + q.str() + " is not an odd power of " + std::to_string(base));
  return pow(BigInt(base), (*e + 1) / 2);
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  for (const auto& [k, name] : kStrategyNames)
    if (k == s) return name;
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto& [k, n] : kStrategyNames)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view expr_text(ExprKind kind) {
  switch (kind) {
    case ExprKind::TwistedE6: return "(q^6-q^3+1)/(3,q+1)";
    case ExprKind::UntwistedE6: return "(q^6+q^3+1)/(3,q-1)";
    case ExprKind::Phi12: return "q^4-q^2+1";
    case ExprKind::QuarticPlusOne: return "q^4+1";
    case ExprKind::QMinusOne: return "q-1";
    case ExprKind::QPlusOne: return "q+1";
    case ExprKind::Identity: return "q";
    case ExprKind::HalfQPlusOne: return "(q+1)/2";
    case ExprKind::HalfQMinusOne: return "(q-1)/2";
    case ExprKind::SuzukiMinus: return "q-sqrt(2q)+1";
    case ExprKind::SuzukiPlus: return "q+sqrt(2q)+1";
    case ExprKind::ReeMinus: return "q-sqrt(3q)+1";
    case ExprKind::ReePlus: return "q+sqrt(3q)+1";
    case ExprKind::ReeTitsPlus: return "q^2+sqrt(2q^3)+q+sqrt(2q)+1";
    case ExprKind::ReeTitsMinus: return "q^2-sqrt(2q^3)+q-sqrt(2q)+1";
    case ExprKind::Phi15: return "(q^10+q^5+1)/(q^2+q+1)";
    case ExprKind::Phi30: return "(q^10-q^5+1)/(q^2-q+1)";
    case ExprKind::Phi20: return "(q^10+1)/(q^2+1)";
    case ExprKind::Phi24: return "q^8-q^4+1";
    case ExprKind::G2Minus: return "q^2-q+1";
    case ExprKind::G2Plus: return "q^2+q+1";
    case ExprKind::PlusOverTwoQMinus: return "(q^n+1)/(2,q-1)";
    case ExprKind::MinusOverTwoQMinus: return "(q^n-1)/(2,q-1)";
    case ExprKind::PlusOverTwoQPlus: return "(q^n+1)/(2,q+1)";
    case ExprKind::PrevPlusOverTwo: return "(q^(n-1)+1)/(2,q+1)";
    case ExprKind::PlusOverFour: return "(q^n+1)/(4,q^n+1)";
    case ExprKind::Linear: return "(q^n-1)/(q-1)";
    case ExprKind::LinearGcd: return "(q^n-1)/((q-1)(n,q-1))";
    case ExprKind::Unitary: return "(q^n+1)/(q+1)";
    case ExprKind::UnitaryGcd: return "(q^n+1)/((q+1)(n,q+1))";
  }
  return "?";
}

bool uses_rank(ExprKind kind) {
  switch (kind) {
    case ExprKind::PlusOverTwoQMinus:
    case ExprKind::MinusOverTwoQMinus:
    case ExprKind::PlusOverTwoQPlus:
    case ExprKind::PrevPlusOverTwo:
    case ExprKind::PlusOverFour:
    case ExprKind::Linear:
    case ExprKind::LinearGcd:
    case ExprKind::Unitary:
    case ExprKind::UnitaryGcd:
      return true;
    default:
      return false;
  }
}

unsigned root_base(ExprKind kind) {
  switch (kind) {
    case ExprKind::SuzukiMinus:
    case ExprKind::SuzukiPlus:
    case ExprKind::ReeTitsPlus:
    case ExprKind::ReeTitsMinus:
      return 2;
    case ExprKind::ReeMinus:
    case ExprKind::ReePlus:
      return 3;
    default:
      return 0;
  }
}

BigInt expr_numerator(ExprKind kind, const BigInt& q, unsigned n) {
  auto qp = [&](unsigned k) { return pow(q, k); };
  switch (kind) {
    case ExprKind::TwistedE6: return qp(6) - qp(3) + 1;
    case ExprKind::UntwistedE6: return qp(6) + qp(3) + 1;
    case ExprKind::Phi12: return qp(4) - qp(2) + 1;
    case ExprKind::QuarticPlusOne: return qp(4) + 1;
    case ExprKind::QMinusOne: return q - 1;
    case ExprKind::QPlusOne: return q + 1;
    case ExprKind::Identity: return q;
    case ExprKind::HalfQPlusOne: return q + 1;
    case ExprKind::HalfQMinusOne: return q - 1;
    case ExprKind::SuzukiMinus: return q - shaped_root(q, 2) + 1;
    case ExprKind::SuzukiPlus: return q + shaped_root(q, 2) + 1;
    case ExprKind::ReeMinus: return q - shaped_root(q, 3) + 1;
    case ExprKind::ReePlus: return q + shaped_root(q, 3) + 1;
    case ExprKind::ReeTitsPlus: {
      const BigInt r = shaped_root(q, 2);
      return qp(2) + q * r + q + r + 1;
    }
    case ExprKind::ReeTitsMinus: {
      const BigInt r = shaped_root(q, 2);
      return qp(2) - q * r + q - r + 1;
    }
    case ExprKind::Phi15: return cyclotomic_value(q, 15);
    case ExprKind::Phi30: return cyclotomic_value(q, 30);
    case ExprKind::Phi20: return cyclotomic_value(q, 20);
    case ExprKind::Phi24: return cyclotomic_value(q, 24);
    case ExprKind::G2Minus: return qp(2) - q + 1;
    case ExprKind::G2Plus: return qp(2) + q + 1;
    case ExprKind::PlusOverTwoQMinus:
    case ExprKind::PlusOverTwoQPlus:
    case ExprKind::PlusOverFour:
      return qp(n) + 1;
    case ExprKind::MinusOverTwoQMinus: return qp(n) - 1;
    case ExprKind::PrevPlusOverTwo: return qp(n - 1) + 1;
    case ExprKind::Linear:
    case ExprKind::LinearGcd:
      return (qp(n) - 1) / (q - 1);
    case ExprKind::Unitary:
    case ExprKind::UnitaryGcd:
      if (n % 2 == 0) fail(ErrorCode::Domain, "(q^n+1)/(q+1) needs odd n");
      return (qp(n) + 1) / (q + 1);
  }
  return 0;
}

BigInt expr_denominator(ExprKind kind, const BigInt& q, unsigned n) {
  switch (kind) {
    case ExprKind::TwistedE6: return gcd(BigInt(3), q + 1);
    case ExprKind::UntwistedE6: return gcd(BigInt(3), q - 1);
    case ExprKind::HalfQPlusOne:
    case ExprKind::HalfQMinusOne:
      return 2;
    case ExprKind::PlusOverTwoQMinus:
    case ExprKind::MinusOverTwoQMinus:
      return gcd(BigInt(2), q - 1);
    case ExprKind::PlusOverTwoQPlus:
    case ExprKind::PrevPlusOverTwo:
      return gcd(BigInt(2), q + 1);
    case ExprKind::PlusOverFour: return gcd(BigInt(4), pow(q, n) + 1);
    case ExprKind::LinearGcd: return gcd(BigInt(n), q - 1);
    case ExprKind::UnitaryGcd: return gcd(BigInt(n), q + 1);
    default: return 1;
  }
}

std::vector<BigInt> denominator_candidates(ExprKind kind, unsigned n) {
  switch (kind) {
    case ExprKind::TwistedE6:
    case ExprKind::UntwistedE6:
      return {1, 3};
    case ExprKind::HalfQPlusOne:
    case ExprKind::HalfQMinusOne:
      return {2};
    case ExprKind::PlusOverTwoQMinus:
    case ExprKind::MinusOverTwoQMinus:
    case ExprKind::PlusOverTwoQPlus:
    case ExprKind::PrevPlusOverTwo:
      return {1, 2};
    case ExprKind::PlusOverFour: return {1, 2, 4};
    case ExprKind::LinearGcd:
    case ExprKind::UnitaryGcd: {
      std::vector<BigInt> out;
      for (unsigned d : divisors(n)) out.emplace_back(d);
      return out;
    }
    default: return {1};
  }
}

QDomain QDomain::any(const BigInt& min_q) {
  QDomain d;
  d.shape = Shape::AnyPrimePower;
  d.min_q = min_q;
  return d;
}

QDomain QDomain::powers_of(unsigned base, unsigned min_exponent) {
  QDomain d;
  d.shape = Shape::PowersOf;
  d.base = base;
  d.min_exponent = min_exponent;
  return d;
}

QDomain QDomain::odd_powers_of(unsigned base, unsigned min_exponent) {
  QDomain d;
  d.shape = Shape::OddPowersOf;
  d.base = base;
  d.min_exponent = min_exponent;
  return d;
}

QDomain QDomain::fixed(std::vector<unsigned> values) {
  QDomain d;
  d.shape = Shape::Values;
  std::sort(values.begin(), values.end());
  d.values = std::move(values);
  return d;
}

BigInt QDomain::smallest() const {
  switch (shape) {
    case Shape::AnyPrimePower: {
      BigInt q = min_q;
      while (!as_prime_power(q)) ++q;
      return q;
    }
    case Shape::PowersOf:
    case Shape::OddPowersOf: return pow(BigInt(base), min_exponent);
    case Shape::Values: return values.front();
  }
  return 2;
}

bool QDomain::contains(const BigInt& q) const {
  switch (shape) {
    case Shape::AnyPrimePower: return q >= min_q && as_prime_power(q).has_value();
    case Shape::PowersOf:
    case Shape::OddPowersOf: {
      const auto e = exact_log(q, base);
      if (!e || *e < min_exponent) return false;
      return shape == Shape::PowersOf || *e % 2 == 1;
    }
    case Shape::Values:
      return std::any_of(values.begin(), values.end(), [&](unsigned v) { return q == v; });
  }
  return false;
}

std::string QDomain::describe() const {
  switch (shape) {
    case Shape::AnyPrimePower: return "q >= " + min_q.str() + " a prime power";
    case Shape::PowersOf:
      return "q = " + std::to_string(base) + "^e, e >= " + std::to_string(min_exponent);
    case Shape::OddPowersOf:
      return "q = " + std::to_string(base) + "^e, e odd >= " + std::to_string(min_exponent);
    case Shape::Values: {
      std::string s = "q in {";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + std::to_string(values[i]);
      return s + "}";
    }
  }
  return {};
}

RankDomain RankDomain::none() { return {}; }

RankDomain RankDomain::from(unsigned min, std::function<bool(unsigned)> admits, std::string text) {
  RankDomain r;
  r.present = true;
  r.min = min;
  r.admits = std::move(admits);
  r.text = std::move(text);
  return r;
}

bool RankDomain::contains(unsigned n) const {
  if (!present) return n == 0;
  return n >= min && (!admits || admits(n));
}

std::optional<BigInt> ComponentExpr::evaluate(const BigInt& q, unsigned n) const {
  if (!qs.contains(q) || !ranks.contains(n)) return std::nullopt;
  if (const unsigned b = root_base(kind); b != 0) {
    const auto e = exact_log(q, b);
    if (!e || *e % 2 == 0) return std::nullopt;
  }
  if (side && !side(q, n)) return std::nullopt;
  const BigInt num = expr_numerator(kind, q, n);
  const BigInt den = expr_denominator(kind, q, n);
  if (num % den != 0) fail(ErrorCode::Domain, std::string(expr_text(kind)) + " is not integral at q = " + q.str());
  return num / den;
}

GroupSpec ComponentExpr::group_at(const BigInt& q, unsigned n) const {
  const int rank = static_cast<int>(n) + rank_offset;
  return GroupSpec::lie(family, static_cast<unsigned>(std::max(rank, 0)), q);
}

std::string ComponentExpr::describe() const {
  std::string s(expr_text(kind));
  s += " over " + qs.describe();
  if (ranks.present) s += ", " + ranks.text;
  if (!side_text.empty()) s += ", " + side_text;
  return s;
}

}  // namespace gk
