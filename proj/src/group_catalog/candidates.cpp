#include "gk/candidates.hpp"
#include "gk/exact_arith.hpp"

namespace gk {

namespace {

bool power_of_two(unsigned n) { return n >= 1 && (n & (n - 1)) == 0; }
bool odd_prime(unsigned n) { return n >= 3 && is_prime_u64(n); }
bool fermat_shape(unsigned n) { return n >= 3 && power_of_two(n - 1); }  // n = 2^m + 1, m >= 1

ComponentExpr expr(ExprKind kind, Family family, QDomain qs, RankDomain ranks = RankDomain::none(),
                   int rank_offset = 0, SideCondition side = {}, std::string side_text = {}) {
  ComponentExpr e{kind, family, rank_offset, std::move(ranks), std::move(qs), std::move(side), std::move(side_text)};
  return e;
}

RankDomain odd_prime_ranks(unsigned min = 3) {
  return RankDomain::from(min, odd_prime, min == 3 ? "r an odd prime" : "r >= " + std::to_string(min) + " prime");
}

SideCondition q_odd() {
  return [](const BigInt& q, unsigned) { return q % 2 == 1; };
}

SideCondition q_mod(unsigned m, std::vector<unsigned> residues) {
  return [m, residues](const BigInt& q, unsigned) {
    const unsigned r = static_cast<unsigned>(q % m);
    for (unsigned x : residues)
      if (x == r) return true;
    return false;
  };
}

const std::vector<Strategy> kDefaultChain{Strategy::OrderDivisibility, Strategy::Lemma4Divisibility,
                                          Strategy::ZsigmondyOutside};
const std::vector<Strategy> kLemma4Chain{Strategy::Lemma4Divisibility, Strategy::OrderDivisibility};

}  // namespace

std::string_view argument_name(ArgumentId id) {
  switch (id) {
    case ArgumentId::TwistedE6TwoAdic: return "E6 2-adic";
    case ArgumentId::OddF4Mod4: return "F4 odd mod 4";
    case ArgumentId::SuzukiTwoAdic: return "2B2 2-adic";
    case ArgumentId::E8Phi24Mod16: return "E8 Phi24 mod 16";
    case ArgumentId::E8Phi15: return "E8 Phi15";
    case ArgumentId::E8Phi30: return "E8 Phi30";
    case ArgumentId::E8Phi20Mod4: return "E8 Phi20 mod 4";
    case ArgumentId::ReeTitsTwoAdic: return "2F4 2-adic";
    case ArgumentId::EvenF4TwoAdic: return "F4 even 2-adic";
    case ArgumentId::ReeMinusLemma8: return "2G2 minus t-part";
    case ArgumentId::ReePlusSubcases: return "2G2 plus subcases";
    case ArgumentId::G2ThreeLemma8: return "G2(3^m) minus t-part";
    case ArgumentId::G2ThreeMod8: return "G2(3^m) plus mod 8";
    case ArgumentId::TwistedDFermatThree: return "2D_r(3) (3^(r-1)+1)/2";
    case ArgumentId::TwistedDQuarterLemma8: return "2D_r(3) (3^r+1)/4 t-part";
    case ArgumentId::BnOddLemma8: return "B_n(q) t-part";
    case ArgumentId::CatalanPowerOfThree: return "2^(p+1) - 3^r = 1";
    case ArgumentId::ThreeD4Mod4: return "3D4 mod 4";
    case ArgumentId::G2CoprimeLemma8: return "G2(q) t-part";
    case ArgumentId::TwistedDPrevThree: return "2D_n(3) composite n";
    case ArgumentId::TwistedDTwo: return "2D_n(2)";
    case ArgumentId::TwistedDnEven: return "2D_n(q) q even";
    case ArgumentId::TwistedDnOddLemma8: return "2D_n(q) q odd t-part";
    case ArgumentId::DrFiveLemma8: return "D_r(5) t-part";
    case ArgumentId::CnEvenTwoAdic: return "C_n(q) q even";
    case ArgumentId::CnLemma8: return "C_n(q) n >= 4 t-part";
    case ArgumentId::CTwoMod8: return "C_2(q) mod 8";
    case ArgumentId::AOnePlusOne: return "A_1(2^m) q+1";
    case ArgumentId::AOneSquareRootMod8: return "A_1(q) f even mod 8";
    case ArgumentId::AOneTwoSylow: return "A_1(q) 2-Sylow";
    case ArgumentId::AOneMinusCatalan: return "A_1(q) (q-1)/2";
    case ArgumentId::ArLemma8: return "rank >= 7 t-part";
    case ArgumentId::ArFiveOddMod4: return "A_r r=5 mod 4";
    case ArgumentId::ArThreeSubcases: return "r=3 subcases";
    case ArgumentId::ArMinusFiveMod4: return "A_4 mod 4";
    case ArgumentId::ArMinusFiveEven: return "A_4 q=2, (5,q-1)=5";
    case ArgumentId::ArMinusThreeTwoSylow: return "A_2(q) 2-Sylow";
    case ArgumentId::UnitaryLemma8: return "2A rank >= 7 t-part";
    case ArgumentId::UnitaryMinusFiveMod4: return "2A_4 mod 4";
    case ArgumentId::UnitaryMinusThreeTwoSylow: return "2A_2(q) 2-Sylow";
  }
  return "?";
}

std::vector<CandidateCase> list_candidates(u64 p) {
  if (!mersenne_check(p) || p < 5)
    fail(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " does not give a Mersenne prime 2^p-1 > 7");

  using S = Strategy;
  using A = ArgumentId;
  using E = ExprKind;
  using F = Family;
  std::vector<CandidateCase> cs;
  auto add = [&](CaseKind kind, std::string title, std::vector<ComponentExpr> exprs, std::vector<S> strategies,
                 std::vector<A> args, std::vector<S> chain = kDefaultChain) {
    CandidateCase c;
    c.id = static_cast<int>(cs.size()) + 1;
    c.kind = kind;
    c.title = std::move(title);
    c.exprs = std::move(exprs);
    c.strategies = std::move(strategies);
    c.arguments = std::move(args);
    c.solution_chain = std::move(chain);
    cs.push_back(std::move(c));
  };

  // 1-3: groups outside the parametric Lie families.
  add(CaseKind::NamedTable, "sporadic groups, 2A3(2), 2F4(2)', 2A5(2), E7(2), E7(3), A2(4), 2E6(2)", {},
      {S::OrderDivisibility, S::BoundedSearchEmpty}, {});
  add(CaseKind::AlternatingPrimePair, "Alt(n), n and n-2 prime", {}, {S::TwoPartOverflow, S::OrderDivisibility}, {});
  add(CaseKind::AlternatingNear, "Alt(n), n in {q, q+1, q+2}, q prime, n or n-2 composite", {},
      {S::TwoPartOverflow, S::OrderDivisibility}, {});

  add(CaseKind::Lie, "2E6(q), q > 2, and E6(q)",
      {expr(E::TwistedE6, F::TwoE6, QDomain::any(3)), expr(E::UntwistedE6, F::E6, QDomain::any(2))},
      {S::TPartBound, S::ModContradiction, S::BoundedSearchEmpty}, {A::TwistedE6TwoAdic});
  add(CaseKind::Lie, "F4(q), q odd", {expr(E::Phi12, F::F4, QDomain::any(3), {}, 0, q_odd(), "q odd")},
      {S::ModContradiction, S::BoundedSearchEmpty}, {A::OddF4Mod4});
  add(CaseKind::Lie, "2B2(q), q = 2^(2m+1) > 2",
      {expr(E::QMinusOne, F::TwoB2, QDomain::odd_powers_of(2)), expr(E::SuzukiMinus, F::TwoB2, QDomain::odd_powers_of(2)),
       expr(E::SuzukiPlus, F::TwoB2, QDomain::odd_powers_of(2))},
      {S::ZsigmondyOutside, S::ModContradiction, S::BoundedSearchEmpty}, {A::SuzukiTwoAdic},
      {S::ZsigmondyOutside, S::OrderDivisibility});
  {
    auto side = q_mod(5, {2, 3});
    add(CaseKind::Lie, "E8(q), q = 2, 3 mod 5",
        {expr(E::Phi24, F::E8, QDomain::any(), {}, 0, side, "q = 2, 3 mod 5"),
         expr(E::Phi15, F::E8, QDomain::any(), {}, 0, side, "q = 2, 3 mod 5"),
         expr(E::Phi30, F::E8, QDomain::any(), {}, 0, side, "q = 2, 3 mod 5")},
        {S::ModContradiction, S::BoundedSearchEmpty}, {A::E8Phi24Mod16, A::E8Phi15, A::E8Phi30});
  }
  {
    auto side = q_mod(5, {0, 1, 4});
    add(CaseKind::Lie, "E8(q), q = 0, 1, 4 mod 5",
        {expr(E::Phi20, F::E8, QDomain::any(), {}, 0, side, "q = 0, 1, 4 mod 5"),
         expr(E::Phi24, F::E8, QDomain::any(), {}, 0, side, "q = 0, 1, 4 mod 5"),
         expr(E::Phi15, F::E8, QDomain::any(), {}, 0, side, "q = 0, 1, 4 mod 5"),
         expr(E::Phi30, F::E8, QDomain::any(), {}, 0, side, "q = 0, 1, 4 mod 5")},
        {S::ModContradiction, S::BoundedSearchEmpty}, {A::E8Phi20Mod4, A::E8Phi24Mod16, A::E8Phi15, A::E8Phi30});
  }
  add(CaseKind::Lie, "2F4(q), q = 2^(2m+1) > 2",
      {expr(E::ReeTitsPlus, F::TwoF4, QDomain::odd_powers_of(2)),
       expr(E::ReeTitsMinus, F::TwoF4, QDomain::odd_powers_of(2))},
      {S::ModContradiction, S::BoundedSearchEmpty}, {A::ReeTitsTwoAdic});
  add(CaseKind::Lie, "F4(q), q = 2^m",
      {expr(E::QuarticPlusOne, F::F4, QDomain::powers_of(2)), expr(E::Phi12, F::F4, QDomain::powers_of(2))},
      {S::ModContradiction, S::BoundedSearchEmpty}, {A::EvenF4TwoAdic});
  add(CaseKind::Lie, "2G2(q), q = 3^(2m+1) > 3",
      {expr(E::ReePlus, F::TwoG2, QDomain::odd_powers_of(3)), expr(E::ReeMinus, F::TwoG2, QDomain::odd_powers_of(3))},
      {S::TPartBound, S::ModContradiction, S::BoundedSearchEmpty}, {A::ReeMinusLemma8, A::ReePlusSubcases});
  add(CaseKind::Lie, "G2(q), q = 3^m",
      {expr(E::G2Minus, F::G2, QDomain::powers_of(3)), expr(E::G2Plus, F::G2, QDomain::powers_of(3))},
      {S::TPartBound, S::ModContradiction, S::BoundedSearchEmpty}, {A::G2ThreeLemma8, A::G2ThreeMod8});
  {
    auto ranks = RankDomain::from(3, [](unsigned n) { return odd_prime(n) && fermat_shape(n); }, "r = 2^m+1 prime");
    add(CaseKind::Lie, "2D_r(3), r = 2^m+1 prime",
        {expr(E::PrevPlusOverTwo, F::TwoD, QDomain::fixed({3}), ranks),
         expr(E::PlusOverFour, F::TwoD, QDomain::fixed({3}), ranks)},
        {S::ModContradiction, S::TPartBound, S::BoundedSearchEmpty},
        {A::TwistedDFermatThree, A::TwistedDQuarterLemma8});
  }
  add(CaseKind::Lie, "B_n(q), n = 2^m >= 4, q odd",
      {expr(E::PlusOverTwoQMinus, F::B, QDomain::any(3),
            RankDomain::from(4, power_of_two, "n = 2^m >= 4"), 0, q_odd(), "q odd")},
      {S::TPartBound, S::BoundedSearchEmpty}, {A::BnOddLemma8});
  add(CaseKind::Lie, "B_r(3)", {expr(E::MinusOverTwoQMinus, F::B, QDomain::fixed({3}), odd_prime_ranks())},
      {S::CatalanNoSolution, S::BoundedSearchEmpty}, {A::CatalanPowerOfThree});
  add(CaseKind::Lie, "3D4(q)", {expr(E::Phi12, F::ThreeD4, QDomain::any())}, {S::ModContradiction, S::BoundedSearchEmpty},
      {A::ThreeD4Mod4});
  {
    auto side = [](const BigInt& q, unsigned) { return q > 2 && q % 3 != 0; };
    add(CaseKind::Lie, "G2(q), 2 < q = +-1 mod 3",
        {expr(E::G2Plus, F::G2, QDomain::any(3), {}, 0, side, "q = +-1 mod 3"),
         expr(E::G2Minus, F::G2, QDomain::any(3), {}, 0, side, "q = +-1 mod 3")},
        {S::TPartBound, S::BoundedSearchEmpty}, {A::G2CoprimeLemma8});
  }
  add(CaseKind::Lie, "2D_n(3), n = 2^m+1 composite",
      {expr(E::PrevPlusOverTwo, F::TwoD, QDomain::fixed({3}),
            RankDomain::from(5, [](unsigned n) { return fermat_shape(n) && !is_prime_u64(n); }, "n = 2^m+1 composite"))},
      {S::ModContradiction, S::BoundedSearchEmpty}, {A::TwistedDPrevThree});
  add(CaseKind::Lie, "2D_r(3), r >= 5 prime, r != 2^m+1",
      {expr(E::PlusOverFour, F::TwoD, QDomain::fixed({3}),
            RankDomain::from(5, [](unsigned n) { return odd_prime(n) && !fermat_shape(n); }, "r >= 5 prime, r != 2^m+1"))},
      {S::TPartBound, S::BoundedSearchEmpty}, {A::TwistedDQuarterLemma8});
  add(CaseKind::Lie, "2D_n(2), n = 2^m+1 >= 5",
      {expr(E::PrevPlusOverTwo, F::TwoD, QDomain::fixed({2}), RankDomain::from(5, fermat_shape, "n = 2^m+1, m >= 2"))},
      {S::ModContradiction, S::BoundedSearchEmpty}, {A::TwistedDTwo});
  add(CaseKind::Lie, "2D_n(q), n = 2^m >= 4",
      {expr(E::PlusOverTwoQPlus, F::TwoD, QDomain::any(), RankDomain::from(4, power_of_two, "n = 2^m >= 4"))},
      {S::ModContradiction, S::TPartBound, S::BoundedSearchEmpty}, {A::TwistedDnEven, A::TwistedDnOddLemma8});
  add(CaseKind::Lie, "D_(r+1)(q), q = 2, 3",
      {expr(E::MinusOverTwoQMinus, F::D, QDomain::fixed({2, 3}), odd_prime_ranks(), 1)},
      {S::TwoPartOverflow, S::CatalanNoSolution, S::BoundedSearchEmpty}, {A::CatalanPowerOfThree},
      {S::TwoPartOverflow});
  add(CaseKind::Lie, "D_r(q), q = 2, 3, 5, r >= 5 prime",
      {expr(E::Linear, F::D, QDomain::fixed({2, 3, 5}), odd_prime_ranks(5))},
      {S::Lemma4Divisibility, S::CatalanNoSolution, S::TPartBound, S::BoundedSearchEmpty},
      {A::CatalanPowerOfThree, A::DrFiveLemma8}, kLemma4Chain);
  add(CaseKind::Lie, "C_r(3)", {expr(E::MinusOverTwoQMinus, F::C, QDomain::fixed({3}), odd_prime_ranks())},
      {S::CatalanNoSolution, S::BoundedSearchEmpty}, {A::CatalanPowerOfThree});
  add(CaseKind::Lie, "C_n(q), n = 2^m >= 2",
      {expr(E::PlusOverTwoQMinus, F::C, QDomain::any(), RankDomain::from(2, power_of_two, "n = 2^m >= 2"), 0,
            [](const BigInt& q, unsigned n) { return !(n == 2 && q == 2); }, "C_2(2) excluded")},
      {S::ModContradiction, S::TPartBound, S::BoundedSearchEmpty}, {A::CnEvenTwoAdic, A::CnLemma8, A::CTwoMod8});
  add(CaseKind::Lie, "A_1(q), q = 2^m > 2",
      {expr(E::QPlusOne, F::A, QDomain::powers_of(2, 2), {}, 1),
       expr(E::QMinusOne, F::A, QDomain::powers_of(2, 2), {}, 1)},
      {S::ModContradiction, S::Lemma4Divisibility, S::BoundedSearchEmpty}, {A::AOnePlusOne}, kLemma4Chain);
  add(CaseKind::Lie, "A_1(q), 3 <= q = +-1 mod 4",
      {expr(E::HalfQPlusOne, F::A, QDomain::any(5), {}, 1, q_mod(4, {1}), "q = 1 mod 4"),
       expr(E::Identity, F::A, QDomain::any(5), {}, 1, q_odd(), "q odd"),
       expr(E::HalfQMinusOne, F::A, QDomain::any(5), {}, 1, q_mod(4, {3}), "q = -1 mod 4")},
      {S::ModContradiction, S::Lemma4Divisibility, S::CatalanNoSolution, S::BoundedSearchEmpty},
      {A::AOneSquareRootMod8, A::AOneTwoSylow, A::AOneMinusCatalan}, kLemma4Chain);
  add(CaseKind::Lie, "A_r(q), (q-1) | (r+1)",
      {expr(E::Linear, F::A, QDomain::any(), odd_prime_ranks(), 0,
            [](const BigInt& q, unsigned r) { return (r + 1) % (q - 1) == 0; }, "(q-1) | (r+1)")},
      {S::TPartBound, S::Lemma4Divisibility, S::OrderDivisibility, S::ModContradiction, S::BoundedSearchEmpty},
      {A::ArLemma8, A::ArFiveOddMod4, A::ArThreeSubcases}, kLemma4Chain);
  add(CaseKind::Lie, "A_(r-1)(q), (r, q) != (3, 2), (3, 4)",
      {expr(E::LinearGcd, F::A, QDomain::any(), odd_prime_ranks(), -1,
            [](const BigInt& q, unsigned r) { return !(r == 3 && (q == 2 || q == 4)); }, "(r, q) != (3, 2), (3, 4)")},
      {S::TPartBound, S::Lemma4Divisibility, S::OrderDivisibility, S::ModContradiction, S::BoundedSearchEmpty},
      {A::ArLemma8, A::ArMinusFiveMod4, A::ArMinusFiveEven, A::ArThreeSubcases, A::ArMinusThreeTwoSylow},
      kLemma4Chain);
  add(CaseKind::Lie, "2A_r(q), (q+1) | (r+1), (r, q) != (3, 3), (5, 2)",
      {expr(E::Unitary, F::TwoA, QDomain::any(), odd_prime_ranks(), 0,
            [](const BigInt& q, unsigned r) {
              return (r + 1) % (q + 1) == 0 && !(r == 3 && q == 3) && !(r == 5 && q == 2);
            },
            "(q+1) | (r+1), (r, q) != (3, 3), (5, 2)")},
      {S::TPartBound, S::ModContradiction, S::BoundedSearchEmpty}, {A::UnitaryLemma8}, kLemma4Chain);
  add(CaseKind::Lie, "2A_(r-1)(q)",
      {expr(E::UnitaryGcd, F::TwoA, QDomain::any(), odd_prime_ranks(), -1,
            [](const BigInt& q, unsigned r) { return !(r == 3 && q == 2); }, "2A_2(2) excluded")},
      {S::TPartBound, S::ModContradiction, S::Lemma4Divisibility, S::BoundedSearchEmpty},
      {A::UnitaryLemma8, A::UnitaryMinusFiveMod4, A::UnitaryMinusThreeTwoSylow}, kLemma4Chain);
  add(CaseKind::Lie, "C_r(2)",
      {expr(E::MinusOverTwoQMinus, F::C, QDomain::fixed({2}), RankDomain::from(3, odd_prime, "r prime"))},
      {S::Confirm}, {}, {S::Confirm});
  return cs;
}

}  // namespace gk
