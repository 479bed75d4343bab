#include <sstream>

#include "gk/error.hpp"
#include "gk/report.hpp"

namespace gk {

using nlohmann::json;

namespace {

BigInt big(const json& j) {
  if (!j.is_string()) fail(ErrorCode::Parse, "expected a decimal string");
  return parse_natural(j.get<std::string>());
}

std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const BigInt& x : xs) out.push_back(x.str());
  return out;
}

json step_json(const StepResult& s) {
  json ws = json::array();
  for (const Witness& w : s.witnesses) ws.push_back(witness_json(w));
  return {{"case_id", s.case_id},
          {"title", s.title},
          {"status", status_name(s.status)},
          {"strategy", strategy_name(s.strategy)},
          {"witnesses", ws},
          {"diagnostic", s.diagnostic}};
}

}  // namespace

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& t : f.terms()) factors.push_back({{"prime", t.prime.str()}, {"exponent", t.exponent}});
  return {{"value", f.value().str()}, {"factored", f.to_string()}, {"factors", factors}};
}

Factorization factorization_from_json(const json& j) {
  try {
    std::vector<Factorization::Term> terms;
    for (const json& t : j.at("factors")) terms.push_back({big(t.at("prime")), t.at("exponent").get<u64>()});
    Factorization f = Factorization::from_terms(std::move(terms));
    if (j.contains("value") && f.value() != big(j.at("value")))
      fail(ErrorCode::Parse, "factor list does not multiply to the recorded value");
    return f;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed factorization: ") + e.what());
  }
}

json order_components_json(const OrderComponents& oc) {
  json comps = json::array();
  for (const OrderComponent& c : oc.components)
    comps.push_back({{"m", factorization_json(c.m)}, {"support", strings(c.support)}});
  return comps;
}

OrderComponents order_components_from_json(const json& j) {
  try {
    OrderComponents oc;
    for (const json& c : j) {
      OrderComponent comp;
      comp.m = factorization_from_json(c.at("m"));
      for (const json& s : c.at("support")) comp.support.push_back(big(s));
      oc.components.push_back(std::move(comp));
    }
    return oc;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed order components: ") + e.what());
  }
}

json graph_json(const PrimeGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a.str(), b.str()});
  json comps = json::array();
  for (const auto& c : components(g)) comps.push_back(strings(c));
  return {{"vertices", strings(g.vertices())},
          {"edges", edges},
          {"components", comps},
          {"degree_pattern", degree_pattern(g)}};
}

json spec_json(const GroupSpec& s) {
  json j = {{"family", family_tag(s.family)}, {"label", s.label()}};
  if (is_lie_type(s.family)) {
    j["rank"] = s.rank;
    j["q"] = s.q().str();
  } else if (s.family == Family::Alt) {
    j["degree"] = s.rank;
  } else {
    j["name"] = s.name;
  }
  return j;
}

json witness_json(const Witness& w) {
  return {{"kind", witness_kind_name(w.kind)},
          {"strategy", strategy_name(w.strategy)},
          {"text", w.text},
          {"values", strings(w.values)}};
}

json trace_document(const VerificationTrace& t) {
  json pre = json::array();
  for (const Witness& w : t.preliminaries) pre.push_back(witness_json(w));
  json assumed = json::array();
  for (const StepResult& s : t.assumed) assumed.push_back(step_json(s));
  json steps = json::array();
  for (const StepResult& s : t.steps) steps.push_back(step_json(s));
  return {{"schema", "gkcheck.trace/" + std::to_string(kSchemaVersion)},
          {"p", t.p},
          {"q_bound", t.q_bound.str()},
          {"group_order", factorization_json(t.group_order)},
          {"graph", graph_json(t.graph)},
          {"degree_pattern", t.degree_pattern},
          {"order_components", order_components_json(t.order_components)},
          {"preliminaries", pre},
          {"assumed", assumed},
          {"steps", steps},
          {"revalidation_errors", t.revalidation_errors},
          {"verdict", verdict_name(t.verdict)}};
}

std::string trace_json(const VerificationTrace& t, int indent) { return trace_document(t).dump(indent); }

std::string degree_pattern_text(const PrimeGraph& g) {
  std::string out;
  const auto degrees = degree_pattern(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    out += (i ? " " : "") + g.vertices()[i].str() + ":" + std::to_string(degrees[i]);
  return out;
}

std::string abbreviate(const BigInt& x, std::size_t max_digits) {
  std::string s = x.str();
  if (s.size() <= max_digits) return s;
  return "<" + std::to_string(s.size()) + " digits>";
}

namespace {

void write_witness(std::ostream& os, const Witness& w) {
  os << "      " << witness_kind_name(w.kind);
  if (!w.values.empty()) {
    os << " {";
    for (std::size_t i = 0; i < w.values.size(); ++i) os << (i ? ", " : "") << abbreviate(w.values[i]);
    os << "}";
  }
  os << "  " << w.text << "\n";
}

void write_step(std::ostream& os, const StepResult& s) {
  os << "  ";
  if (s.case_id) os << "step " << (s.case_id < 10 ? " " : "") << s.case_id << "  ";
  os << status_name(s.status) << "  " << s.title;
  if (s.status != StepStatus::Assumed) os << "  [" << strategy_name(s.strategy) << "]";
  os << "\n";
  if (!s.diagnostic.empty()) os << "      diagnostic: " << s.diagnostic << "\n";
  for (const Witness& w : s.witnesses) write_witness(os, w);
}

}  // namespace

std::string trace_text(const VerificationTrace& t) {
  std::ostringstream os;
  os << "gkcheck trace for C_" << t.p << "(2), 2^p-1 = " << ((BigInt(1) << static_cast<unsigned>(t.p)) - 1)
     << "\n";
  os << "q bound: " << (t.q_bound == 0 ? std::string("automatic") : t.q_bound.str()) << "\n";
  os << "|G| = " << t.group_order.to_string() << "\n";
  os << "degree pattern: " << degree_pattern_text(t.graph) << "\n";
  os << "order components:";
  for (const OrderComponent& c : t.order_components.components) os << " " << c.m.to_string() << ";";
  os << "\n\npreliminaries\n";
  for (const Witness& w : t.preliminaries) write_witness(os, w);
  os << "\nassumed\n";
  for (const StepResult& s : t.assumed) write_step(os, s);
  os << "\ncases\n";
  for (const StepResult& s : t.steps) write_step(os, s);
  os << "\nrevalidation: ";
  if (t.revalidation_errors.empty()) os << "every witness holds\n";
  else {
    os << t.revalidation_errors.size() << " error(s)\n";
    for (const std::string& e : t.revalidation_errors) os << "  " << e << "\n";
  }
  os << "verdict: " << verdict_name(t.verdict) << "\n";
  return os.str();
}

}  // namespace gk
