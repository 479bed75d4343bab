#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gk/candidates.hpp"
#include "gk/factorization.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

// Exact facts recorded in a trace. Every kind except Note is re-checked by
// revalidate(); the meaning of values per kind:
//   Residue          {x, m, r}        x mod m = r
//   Valuation        {x, t, v}        v_t(x) = v
//   NotDivides       {a, b}           a does not divide b
//   Less             {a, b}           a < b
//   Equal            {a, b}           a = b
//   Unequal          {a, b}           a != b
//   Bracket          {lo, x, hi}      lo < x < hi
//   ValuationExceeds {t, v, vG}       v > vG and v_t(|G|) = vG
//   PrimeOutside     {r}              r prime, r does not divide |G|
//   PrimitiveDivisor {a, n, r}        r prime and e(r, a) = n
//   TPartBelow       {t, k}           |G|_t < 2^k
//   NotPower         {x, b}           x is not b^e for any e >= 0
//   NotPrimePower    {x}              x is not a prime power
//   Composite        {x}              x > 1 is not prime
//   NotMember        {x, l1, l2, ...} x is none of the l_i
enum class WitnessKind {
  Note,
  Residue,
  Valuation,
  NotDivides,
  Less,
  Equal,
  Unequal,
  Bracket,
  ValuationExceeds,
  PrimeOutside,
  PrimitiveDivisor,
  TPartBelow,
  NotPower,
  NotPrimePower,
  Composite,
  NotMember,
};
std::string_view witness_kind_name(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::Note;
  Strategy strategy = Strategy::BoundedSearchEmpty;
  std::string text;
  std::vector<BigInt> values;
};

// Checks one witness against |G|; returns an empty string when it holds.
std::string check_witness(const Witness& w, const Factorization& group_order);

enum class StepStatus { Refuted, Confirmed, Assumed, Failed };
std::string_view status_name(StepStatus s);

struct StepResult {
  int case_id = 0;  // 0 for the assumed structural records
  std::string title;
  StepStatus status = StepStatus::Failed;
  Strategy strategy = Strategy::BoundedSearchEmpty;
  std::vector<Witness> witnesses;
  std::string diagnostic;
};

enum class Verdict { TheoremVerified, Inconclusive };
std::string_view verdict_name(Verdict v);

struct VerificationTrace {
  u64 p = 0;
  BigInt q_bound = 0;  // 0: every search bound derived automatically
  Factorization group_order;
  PrimeGraph graph;
  std::vector<std::size_t> degree_pattern;
  OrderComponents order_components;
  std::vector<Witness> preliminaries;
  std::vector<StepResult> assumed;
  std::vector<StepResult> steps;  // case ids 1..32 in order
  std::vector<std::string> revalidation_errors;
  Verdict verdict = Verdict::Inconclusive;
};

// Largest supported exponent; larger Mersenne exponents raise MagnitudeExceeded.
inline constexpr u64 kMaxExponent = 61;

struct Solution {
  BigInt q;
  unsigned n = 0;  // rank parameter, 0 when the expression has none
  BigInt denominator;
  GroupSpec group;
};

struct SolveResult {
  std::vector<Solution> solutions;
  std::vector<Witness> witnesses;
  BigInt required_bound = 0;  // largest q the exhaustive search had to reach
};

// Every q in the expression's domain (with rank parameters) where it equals
// 2^p - 1. q_bound = 0 derives the range; a positive q_bound smaller than
// the derived range raises Error(BoundTooSmall).
SolveResult solve_component_equation(const ComponentExpr& expr, u64 p, const BigInt& q_bound = 0);

struct ArgumentCheck {
  bool consistent = true;
  std::vector<Witness> witnesses;
  std::string diagnostic;
};
// Replays one tabulated congruence or size argument at the concrete p.
ArgumentCheck check_mod_contradiction(ArgumentId id, u64 p);

// B = (2^2-1)(2^4-1)...(2^(2n)-1).
Factorization lemma8_product(unsigned n);
// B_t < 2^(3n), and B_t < 2^(2n) when t >= 5.
bool check_lemma8_bound(unsigned n, const BigInt& t);

// m_other divides subgroup_order - 1.
bool check_lemma4(const BigInt& m_other, const BigInt& subgroup_order);

struct TwoPartCheck {
  u64 v_candidate = 0;
  u64 v_group = 0;
  bool overflow = false;
};
// Compares the 2-part of a candidate order with |C_p(2)|_2 = 2^(p^2).
TwoPartCheck check_two_part_overflow(const Factorization& candidate_order, u64 p);
// The same for Alt(n): v_2(n!/2) against p^2.
TwoPartCheck check_two_part_overflow_alternating(const BigInt& n, u64 p);

struct Refutation {
  enum class Outcome { Refuted, Confirmed, Open } outcome = Outcome::Open;
  Strategy strategy = Strategy::BoundedSearchEmpty;
  std::vector<Witness> witnesses;
  std::string diagnostic;
};
// Applies the chain to a concrete simple group S with 2^p - 1 among its odd
// order components, stopping at the first strategy that decides.
Refutation refute_solution(const GroupSpec& s, const std::vector<Strategy>& chain, u64 p,
                           const Factorization& group_order);

StepResult refute_candidate(const CandidateCase& c, u64 p, const BigInt& q_bound = 0);

VerificationTrace verify_theorem(u64 p, const BigInt& q_bound = 0);

// Independent pass over a finished trace; empty when every witness holds and
// the record structure matches the verdict rules.
std::vector<std::string> revalidate(const VerificationTrace& trace);

std::string trace_text(const VerificationTrace& trace);
std::string trace_json(const VerificationTrace& trace, int indent = 2);

}  // namespace gk
