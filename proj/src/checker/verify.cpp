#include <future>

#include "checker/witness.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

using detail::str;
using detail::witness;

namespace {

using K = WitnessKind;
using S = Strategy;

BigInt product(const std::vector<BigInt>& xs) {
  BigInt r = 1;
  for (const BigInt& x : xs) r *= x;
  return r;
}

// Facts about C_p(2) the case analysis starts from; all are re-checked.
std::vector<Witness> preliminaries(const VerificationTrace& t) {
  const BigInt m = detail::mersenne(t.p);
  const auto comps = components(t.graph);
  std::vector<Witness> out;
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty, "GK(G) has two connected components",
                        {BigInt(comps.size()), 2}));
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty, "the odd order component m_2 is 2^p-1",
                        {t.order_components.components.at(1).m.value(), m}));
  const std::size_t three = t.graph.index_of(3);
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty, "deg(3) = |pi_1| - 1",
                        {BigInt(t.graph.degree(three)), BigInt(comps.front().size() - 1)}));
  std::vector<BigInt> apart;
  for (std::size_t i = 0; i < t.graph.size(); ++i)
    if (i != three && !t.graph.adjacent(i, three)) apart.push_back(t.graph.vertices()[i]);
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty,
                        "the product of the primes not adjacent to 3 equals that of ppd(2^p-1)",
                        {product(apart), product(ppd_set(2, static_cast<unsigned>(t.p)))}));
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty, "2^p-1 is the largest prime of |G|",
                        {t.graph.vertices().back(), m}));
  out.push_back(witness(K::Equal, S::BoundedSearchEmpty, "2^p-1 is an isolated vertex",
                        {BigInt(t.graph.degree(t.graph.index_of(m))), 0}));
  return out;
}

StepResult assumed(std::string title, std::string text) {
  StepResult r;
  r.case_id = 0;
  r.title = std::move(title);
  r.status = StepStatus::Assumed;
  r.witnesses.push_back(detail::note(S::BoundedSearchEmpty, std::move(text)));
  return r;
}

bool verdict_holds(const VerificationTrace& t) {
  if (!t.revalidation_errors.empty() || t.steps.size() != static_cast<std::size_t>(kCaseCount)) return false;
  int confirmed = 0;
  for (const StepResult& s : t.steps) {
    if (s.status == StepStatus::Failed) return false;
    if (s.status == StepStatus::Confirmed) {
      if (s.case_id != kConfirmCase) return false;
      ++confirmed;
    }
  }
  for (const StepResult& s : t.assumed)
    if (s.status != StepStatus::Assumed) return false;
  return confirmed == 1;
}

}  // namespace

VerificationTrace verify_theorem(u64 p, const BigInt& q_bound) {
  if (p > kMaxExponent)
    fail(ErrorCode::MagnitudeExceeded,
         "p = " + std::to_string(p) + " is above the supported range (p <= " + std::to_string(kMaxExponent) + ")");
  if (!mersenne_check(p) || p < 5)
    fail(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " does not give a Mersenne prime 2^p-1 > 7");

  VerificationTrace t;
  t.p = p;
  t.q_bound = q_bound;
  const GroupSpec c = GroupSpec::lie(Family::C, static_cast<unsigned>(p), 2);
  t.group_order = group_order(c);
  t.graph = build_graph(c);
  t.degree_pattern = degree_pattern(t.graph);
  t.order_components = order_components(t.group_order, t.graph);
  t.preliminaries = preliminaries(t);

  t.assumed.push_back(assumed("G is neither Frobenius nor 2-Frobenius",
                              "cited: a group with disconnected prime graph of this shape is not a Frobenius or "
                              "2-Frobenius group"));
  t.assumed.push_back(assumed("normal series 1 <= H < K <= G",
                              "cited: H nilpotent pi_1-group, K/H simple with 2^p-1 an odd order component, G/K a "
                              "pi_1-subgroup of Out(K/H)"));

  const auto cases = list_candidates(p);
  std::vector<std::future<StepResult>> runs;
  runs.reserve(cases.size());
  for (const CandidateCase& cc : cases)
    runs.push_back(std::async(std::launch::async, [&cc, p, &q_bound] { return refute_candidate(cc, p, q_bound); }));
  for (auto& r : runs) t.steps.push_back(r.get());

  t.revalidation_errors = revalidate(t);
  t.verdict = verdict_holds(t) ? Verdict::TheoremVerified : Verdict::Inconclusive;
  return t;
}

}  // namespace gk
