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

class StepRun {
 public:
  StepRun(const CandidateCase& c, u64 p, const BigInt& q_bound)
      : c_(c), p_(p), m_(detail::mersenne(p)), q_bound_(q_bound),
        g_(group_order(GroupSpec::lie(Family::C, static_cast<unsigned>(p), 2))) {
    res_.case_id = c.id;
    res_.title = c.title;
    res_.strategy = c.strategies.empty() ? S::BoundedSearchEmpty : c.strategies.front();
  }

  StepResult run() {
    switch (c_.kind) {
      case CaseKind::NamedTable: named(); break;
      case CaseKind::AlternatingPrimePair: alternating_pair(); break;
      case CaseKind::AlternatingNear: alternating_near(); break;
      case CaseKind::Lie: lie(); break;
    }
    finish();
    return std::move(res_);
  }

 private:
  void failed(const std::string& why) {
    if (res_.diagnostic.empty()) res_.diagnostic = why;
    else res_.diagnostic += "; " + why;
    failed_ = true;
  }

  void take(std::vector<Witness>&& ws) {
    for (auto& w : ws) res_.witnesses.push_back(std::move(w));
  }

  void settle(const GroupSpec& s, const std::vector<Strategy>& chain) {
    Refutation r = refute_solution(s, chain, p_, g_);
    take(std::move(r.witnesses));
    switch (r.outcome) {
      case Outcome::Refuted: break;
      case Outcome::Confirmed: ++confirmed_; break;
      case Outcome::Open: failed(s.label() + ": " + r.diagnostic); break;
    }
  }

  void named() {
    for (const NamedGroup& g : named_groups()) {
      const auto& comps = g.odd_components;
      if (std::find(comps.begin(), comps.end(), m_) == comps.end()) {
        std::vector<BigInt> values{m_};
        values.insert(values.end(), comps.begin(), comps.end());
        res_.witnesses.push_back(witness(K::NotMember, S::BoundedSearchEmpty,
                                         g.name + ": 2^p-1 is not an odd order component", std::move(values)));
        continue;
      }
      if (g.as_lie) {
        settle(*g.as_lie, {S::OrderDivisibility});
        continue;
      }
      // Table groups outside the Lie families: compare the tabulated order.
      bool refuted = false;
      for (const auto& t : g.order.terms()) {
        const u64 vg = g_.exponent_of(t.prime);
        if (vg == 0) {
          res_.witnesses.push_back(witness(K::PrimeOutside, S::OrderDivisibility,
                                           str(t.prime) + " divides |" + g.name + "| but not |G|", {t.prime}));
          refuted = true;
          break;
        }
        if (t.exponent > vg) {
          res_.witnesses.push_back(witness(K::ValuationExceeds, S::OrderDivisibility,
                                           "|" + g.name + "|_" + str(t.prime) + " exceeds |G|_" + str(t.prime),
                                           {t.prime, t.exponent, vg}));
          refuted = true;
          break;
        }
      }
      if (!refuted) failed(g.name + " has 2^p-1 as a component and its order divides |G|");
    }
  }

  // Alt(n) with a given degree: 2-part first, then full divisibility.
  void alternating(const BigInt& n) {
    const TwoPartCheck two = check_two_part_overflow_alternating(n, p_);
    if (two.overflow) {
      res_.witnesses.push_back(witness(K::ValuationExceeds, S::TwoPartOverflow,
                                       "v_2(" + str(n) + "!/2) = " + std::to_string(two.v_candidate) + " > p^2 = " +
                                           std::to_string(two.v_group),
                                       {2, two.v_candidate, two.v_group}));
      return;
    }
    res_.witnesses.push_back(witness(K::Note, S::TwoPartOverflow,
                                     "v_2(" + str(n) + "!/2) = " + std::to_string(two.v_candidate) + " equals p^2 = " +
                                         std::to_string(two.v_group) + "; the 2-part alone does not decide"));
    if (n > 1000000) {
      failed("Alt(" + str(n) + ") 2-part does not overflow and the degree is too large to factor the order");
      return;
    }
    settle(GroupSpec::alternating(static_cast<unsigned>(n)), {S::OrderDivisibility});
  }

  void alternating_pair() {
    // Odd order components of Alt(n) with n, n-2 prime are n and n-2.
    const BigInt above = m_ + 2;
    res_.witnesses.push_back(witness(K::Residue, S::ModContradiction, "n-2 = 2^p-1 gives n = 2^p+1, divisible by 3",
                                     {above, 3, above % 3}));
    if (above % 3 != 0) failed("2^p+1 not divisible by 3");
    const BigInt below = m_ - 2;
    if (!is_prime(below)) {
      res_.witnesses.push_back(witness(K::Composite, S::BoundedSearchEmpty, "n = 2^p-1 needs n-2 = 2^p-3 prime", {below}));
      return;
    }
    const BigInt closed = pow2(static_cast<unsigned>(p_)) - p_ - 2;
    const BigInt legendre = legendre_valuation(m_, 2) - 1;
    res_.witnesses.push_back(witness(K::Equal, S::TwoPartOverflow,
                                     "v_2((2^p-1)!/2) by Legendre equals 2^p-p-2", {legendre, closed}));
    if (legendre != closed) failed("Legendre valuation disagrees with 2^p-p-2");
    alternating(m_);
  }

  void alternating_near() {
    const bool pair = is_prime(m_ - 2);
    for (const BigInt& n : std::vector<BigInt>{m_, m_ + 1, m_ + 2}) {
      if (n == m_ && pair) {
        res_.witnesses.push_back(witness(K::Note, S::BoundedSearchEmpty,
                                         "n = 2^p-1 with n-2 prime belongs to the prime-pair case"));
        continue;
      }
      alternating(n);
    }
  }

  void lie() {
    for (ArgumentId id : c_.arguments) {
      ArgumentCheck a = check_mod_contradiction(id, p_);
      take(std::move(a.witnesses));
      if (!a.consistent) failed(std::string(argument_name(id)) + ": " + a.diagnostic);
    }
    for (const ComponentExpr& e : c_.exprs) {
      SolveResult sr = solve_component_equation(e, p_, q_bound_);
      take(std::move(sr.witnesses));
      for (const Solution& s : sr.solutions) settle(s.group, c_.solution_chain);
    }
  }

  void finish() {
    const bool confirm_case = c_.id == kConfirmCase;
    if (confirm_case && confirmed_ != 1) failed("expected exactly one confirmed solution, found " + std::to_string(confirmed_));
    if (!confirm_case && confirmed_ != 0) failed("a confirmation outside the confirming case");
    if (res_.witnesses.empty()) failed("no witnesses recorded");
    if (failed_) res_.status = StepStatus::Failed;
    else res_.status = confirm_case ? StepStatus::Confirmed : StepStatus::Refuted;
    if (confirm_case) res_.strategy = S::Confirm;
  }

  const CandidateCase& c_;
  u64 p_;
  BigInt m_;
  BigInt q_bound_;
  Factorization g_;
  StepResult res_;
  bool failed_ = false;
  int confirmed_ = 0;
};

}  // namespace

StepResult refute_candidate(const CandidateCase& c, u64 p, const BigInt& q_bound) {
  if (!mersenne_check(p) || p < 5)
    fail(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " does not give a Mersenne prime 2^p-1 > 7");
  return StepRun(c, p, q_bound).run();
}

}  // namespace gk
