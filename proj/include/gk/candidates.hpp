#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/bigint.hpp"
#include "gk/group_spec.hpp"

namespace gk {

enum class Strategy {
  OrderDivisibility,
  TwoPartOverflow,
  ModContradiction,
  TPartBound,
  Lemma4Divisibility,
  ZsigmondyOutside,
  CatalanNoSolution,
  BoundedSearchEmpty,
  Confirm,
};
std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

// Closed forms for odd order components. N is the part monotone in q and in
// the rank parameter n; D is the gcd divisor (1 when absent).
enum class ExprKind {
  TwistedE6,          // (q^6-q^3+1)/(3,q+1)
  UntwistedE6,        // (q^6+q^3+1)/(3,q-1)
  Phi12,              // q^4-q^2+1
  QuarticPlusOne,     // q^4+1
  QMinusOne,          // q-1
  QPlusOne,           // q+1
  Identity,           // q
  HalfQPlusOne,       // (q+1)/2
  HalfQMinusOne,      // (q-1)/2
  SuzukiMinus,        // q-sqrt(2q)+1
  SuzukiPlus,         // q+sqrt(2q)+1
  ReeMinus,           // q-sqrt(3q)+1
  ReePlus,            // q+sqrt(3q)+1
  ReeTitsPlus,        // q^2+sqrt(2q^3)+q+sqrt(2q)+1
  ReeTitsMinus,       // q^2-sqrt(2q^3)+q-sqrt(2q)+1
  Phi15,              // (q^10+q^5+1)/(q^2+q+1)
  Phi30,              // (q^10-q^5+1)/(q^2-q+1)
  Phi20,              // (q^10+1)/(q^2+1)
  Phi24,              // q^8-q^4+1
  G2Minus,            // q^2-q+1
  G2Plus,             // q^2+q+1
  PlusOverTwoQMinus,  // (q^n+1)/(2,q-1)
  MinusOverTwoQMinus, // (q^n-1)/(2,q-1)
  PlusOverTwoQPlus,   // (q^n+1)/(2,q+1)
  PrevPlusOverTwo,    // (q^(n-1)+1)/(2,q+1)
  PlusOverFour,       // (q^n+1)/(4,q^n+1)
  Linear,             // (q^n-1)/(q-1)
  LinearGcd,          // (q^n-1)/((q-1)(n,q-1))
  Unitary,            // (q^n+1)/(q+1)
  UnitaryGcd,         // (q^n+1)/((q+1)(n,q+1))
};

std::string_view expr_text(ExprKind kind);
bool uses_rank(ExprKind kind);
// Square-root forms need q = base^(2m+1); returns base (2 or 3) or 0.
unsigned root_base(ExprKind kind);

BigInt expr_numerator(ExprKind kind, const BigInt& q, unsigned n);
BigInt expr_denominator(ExprKind kind, const BigInt& q, unsigned n);
std::vector<BigInt> denominator_candidates(ExprKind kind, unsigned n);

struct QDomain {
  enum class Shape { AnyPrimePower, PowersOf, OddPowersOf, Values };
  Shape shape = Shape::AnyPrimePower;
  unsigned base = 0;          // PowersOf / OddPowersOf
  unsigned min_exponent = 1;  // PowersOf / OddPowersOf
  std::vector<unsigned> values;
  BigInt min_q = 2;  // AnyPrimePower

  static QDomain any(const BigInt& min_q = 2);
  static QDomain powers_of(unsigned base, unsigned min_exponent = 1);
  static QDomain odd_powers_of(unsigned base, unsigned min_exponent = 3);
  static QDomain fixed(std::vector<unsigned> values);

  BigInt smallest() const;
  bool contains(const BigInt& q) const;
  std::string describe() const;
};

struct RankDomain {
  bool present = false;
  unsigned min = 0;
  std::function<bool(unsigned)> admits;  // null admits every n >= min
  std::string text;

  static RankDomain none();
  static RankDomain from(unsigned min, std::function<bool(unsigned)> admits, std::string text);
  bool contains(unsigned n) const;
};

using SideCondition = std::function<bool(const BigInt& q, unsigned n)>;

// An odd-order-component expression together with the parameter region where
// the case analysis evaluates it.
struct ComponentExpr {
  ExprKind kind;
  Family family;
  int rank_offset = 0;  // group rank = n + rank_offset
  RankDomain ranks;
  QDomain qs;
  SideCondition side;
  std::string side_text;

  // Value at (q, n), or nullopt when q lacks the required shape or the side
  // condition fails.
  std::optional<BigInt> evaluate(const BigInt& q, unsigned n) const;
  GroupSpec group_at(const BigInt& q, unsigned n) const;
  std::string describe() const;
};

// Arithmetic arguments replayed at a concrete p (one table entry per use).
enum class ArgumentId {
  TwistedE6TwoAdic,
  OddF4Mod4,
  SuzukiTwoAdic,
  E8Phi24Mod16,
  E8Phi15,
  E8Phi30,
  E8Phi20Mod4,
  ReeTitsTwoAdic,
  EvenF4TwoAdic,
  ReeMinusLemma8,
  ReePlusSubcases,
  G2ThreeLemma8,
  G2ThreeMod8,
  TwistedDFermatThree,
  TwistedDQuarterLemma8,
  BnOddLemma8,
  CatalanPowerOfThree,
  ThreeD4Mod4,
  G2CoprimeLemma8,
  TwistedDPrevThree,
  TwistedDTwo,
  TwistedDnEven,
  TwistedDnOddLemma8,
  DrFiveLemma8,
  CnEvenTwoAdic,
  CnLemma8,
  CTwoMod8,
  AOnePlusOne,
  AOneSquareRootMod8,
  AOneTwoSylow,
  AOneMinusCatalan,
  ArLemma8,
  ArFiveOddMod4,
  ArThreeSubcases,
  ArMinusFiveMod4,
  ArMinusFiveEven,
  ArMinusThreeTwoSylow,
  UnitaryLemma8,
  UnitaryMinusFiveMod4,
  UnitaryMinusThreeTwoSylow,
};
std::string_view argument_name(ArgumentId id);

enum class CaseKind { NamedTable, AlternatingPrimePair, AlternatingNear, Lie };

struct CandidateCase {
  int id = 0;
  CaseKind kind = CaseKind::Lie;
  std::string title;
  std::vector<ComponentExpr> exprs;
  std::vector<Strategy> strategies;        // the order the argument uses them
  std::vector<Strategy> solution_chain;    // applied to each surviving solution
  std::vector<ArgumentId> arguments;
};

inline constexpr int kCaseCount = 32;
inline constexpr int kConfirmCase = 32;

// The fixed case catalog; throws Error(InvalidExponent) unless 2^p - 1 is a
// Mersenne prime above 7.
std::vector<CandidateCase> list_candidates(u64 p);

}  // namespace gk
