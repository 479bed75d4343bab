#include "gk/checker.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

std::string_view witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Note: return "Note";
    case WitnessKind::Residue: return "Residue";
    case WitnessKind::Valuation: return "Valuation";
    case WitnessKind::NotDivides: return "NotDivides";
    case WitnessKind::Less: return "Less";
    case WitnessKind::Equal: return "Equal";
    case WitnessKind::Unequal: return "Unequal";
    case WitnessKind::Bracket: return "Bracket";
    case WitnessKind::ValuationExceeds: return "ValuationExceeds";
    case WitnessKind::PrimeOutside: return "PrimeOutside";
    case WitnessKind::PrimitiveDivisor: return "PrimitiveDivisor";
    case WitnessKind::TPartBelow: return "TPartBelow";
    case WitnessKind::NotPower: return "NotPower";
    case WitnessKind::NotPrimePower: return "NotPrimePower";
    case WitnessKind::Composite: return "Composite";
    case WitnessKind::NotMember: return "NotMember";
  }
  return "?";
}

std::string_view status_name(StepStatus s) {
  switch (s) {
    case StepStatus::Refuted: return "Refuted";
    case StepStatus::Confirmed: return "Confirmed";
    case StepStatus::Assumed: return "Assumed";
    case StepStatus::Failed: return "Failed";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) { return v == Verdict::TheoremVerified ? "TheoremVerified" : "Inconclusive"; }

namespace {

std::size_t arity(WitnessKind k) {
  switch (k) {
    case WitnessKind::Note: return 0;
    case WitnessKind::PrimeOutside:
    case WitnessKind::NotPrimePower:
    case WitnessKind::Composite: return 1;
    case WitnessKind::NotDivides:
    case WitnessKind::Less:
    case WitnessKind::Equal:
    case WitnessKind::Unequal:
    case WitnessKind::TPartBelow:
    case WitnessKind::NotPower: return 2;
    case WitnessKind::Residue:
    case WitnessKind::Valuation:
    case WitnessKind::Bracket:
    case WitnessKind::ValuationExceeds:
    case WitnessKind::PrimitiveDivisor: return 3;
    case WitnessKind::NotMember: return 1;  // at least
  }
  return 0;
}

bool holds(const Witness& w, const Factorization& g) {
  const auto& v = w.values;
  switch (w.kind) {
    case WitnessKind::Note: return true;
    case WitnessKind::Residue: return v[1] > 0 && v[0] % v[1] == v[2];
    case WitnessKind::Valuation: return v[0] > 0 && is_prime(v[1]) && BigInt(valuation(v[0], v[1])) == v[2];
    case WitnessKind::NotDivides: return v[0] != 0 && v[1] % v[0] != 0;
    case WitnessKind::Less: return v[0] < v[1];
    case WitnessKind::Equal: return v[0] == v[1];
    case WitnessKind::Unequal: return v[0] != v[1];
    case WitnessKind::Bracket: return v[0] < v[1] && v[1] < v[2];
    case WitnessKind::ValuationExceeds:
      return is_prime(v[0]) && v[1] > v[2] && BigInt(g.exponent_of(v[0])) == v[2];
    case WitnessKind::PrimeOutside: return is_prime(v[0]) && g.exponent_of(v[0]) == 0;
    case WitnessKind::PrimitiveDivisor:
      return v[0] >= 2 && is_prime(v[2]) && v[0] % v[2] != 0 && mult_order(v[2], v[0]) == v[1];
    case WitnessKind::TPartBelow: return is_prime(v[0]) && g.part(v[0]) < pow2(static_cast<unsigned>(v[1]));
    case WitnessKind::NotPower:
      return v[1] >= 2 && v[0] >= 1 && v[0] != 1 && !exact_log(v[0], v[1]);
    case WitnessKind::NotPrimePower: return v[0] >= 1 && !as_prime_power(v[0]);
    case WitnessKind::Composite: return v[0] > 1 && !is_prime(v[0]);
    case WitnessKind::NotMember:
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[0]) return false;
      return true;
  }
  return false;
}

}  // namespace

std::string check_witness(const Witness& w, const Factorization& group_order) {
  const std::size_t need = arity(w.kind);
  const bool size_ok = w.kind == WitnessKind::NotMember ? w.values.size() >= need : w.values.size() == need;
  if (!size_ok) return std::string(witness_kind_name(w.kind)) + " witness has " + std::to_string(w.values.size()) + " values";
  try {
    if (holds(w, group_order)) return {};
  } catch (const Error& e) {
    return std::string(witness_kind_name(w.kind)) + " witness could not be checked: " + e.what();
  }
  std::string vals;
  for (const BigInt& x : w.values) vals += (vals.empty() ? "" : ", ") + x.str();
  return std::string(witness_kind_name(w.kind)) + " {" + vals + "} does not hold: " + w.text;
}

std::vector<std::string> revalidate(const VerificationTrace& t) {
  std::vector<std::string> errors;
  const auto add = [&errors](std::string s) { errors.push_back(std::move(s)); };

  Factorization expected;
  try {
    expected = group_order(GroupSpec::lie(Family::C, static_cast<unsigned>(t.p), 2));
  } catch (const Error& e) {
    add(std::string("cannot recompute |C_p(2)|: ") + e.what());
    return errors;
  }
  if (!(expected == t.group_order)) add("group order differs from |C_p(2)|");

  for (const Witness& w : t.preliminaries)
    if (auto e = check_witness(w, expected); !e.empty()) add("preliminaries: " + e);

  if (t.assumed.size() != 2) add("expected two assumed structural records");
  for (const StepResult& s : t.assumed)
    if (s.status != StepStatus::Assumed || s.case_id != 0) add("assumed record '" + s.title + "' is malformed");

  if (t.steps.size() != static_cast<std::size_t>(kCaseCount))
    add("expected " + std::to_string(kCaseCount) + " case records, found " + std::to_string(t.steps.size()));
  int confirmed = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const StepResult& s = t.steps[i];
    const std::string where = "step " + std::to_string(s.case_id);
    if (s.case_id != static_cast<int>(i) + 1) add(where + ": out of order at position " + std::to_string(i + 1));
    if (s.status == StepStatus::Assumed) add(where + ": case records cannot be assumed");
    if (s.status == StepStatus::Failed && s.diagnostic.empty()) add(where + ": failed without a diagnostic");
    if (s.status == StepStatus::Confirmed) {
      ++confirmed;
      if (s.case_id != kConfirmCase) add(where + ": confirmed outside the confirming case");
    }
    std::size_t checkable = 0;
    for (const Witness& w : s.witnesses) {
      if (w.kind != WitnessKind::Note) ++checkable;
      if (auto e = check_witness(w, expected); !e.empty()) add(where + ": " + e);
    }
    if ((s.status == StepStatus::Refuted || s.status == StepStatus::Confirmed) && checkable == 0)
      add(where + ": no checkable witness");
  }
  if (confirmed > 1) add("more than one confirmed record");
  return errors;
}

}  // namespace gk
