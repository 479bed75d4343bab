#include "gk/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "gk/checker.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"
#include "gk/report.hpp"

namespace gk::cli {

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kNotVerified = 1, kInvalid = 2, kComputation = 3 };

struct SpecArgs {
  std::string family;
  std::optional<unsigned> rank;
  std::string q;
  std::optional<unsigned> degree;
  std::string name;
};

struct Options {
  SpecArgs spec;
  std::string format = "text";
  u64 p = 0;
  std::string q_bound;
  std::optional<int> case_id;
};

void add_spec_options(CLI::App* cmd, SpecArgs& s) {
  cmd->add_option("--family", s.family, "family tag: A 2A B C D 2D G2 2G2 F4 2F4 2B2 3D4 E6 2E6 E7 E8 Alt Sporadic");
  cmd->add_option("--rank", s.rank, "Lie rank (degree for Alt)");
  cmd->add_option("--q", s.q, "field size q = t^f");
  cmd->add_option("--degree", s.degree, "degree for Alt");
  cmd->add_option("--name", s.name, "name of a sporadic or table group, e.g. M11");
}

void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

GroupSpec make_spec(const SpecArgs& a) {
  if (!a.name.empty()) {
    if (!a.family.empty() && a.family != "Sporadic") fail(ErrorCode::InvalidArgument, "--name takes no --family");
    return GroupSpec::named(a.name);
  }
  if (a.family.empty()) fail(ErrorCode::InvalidArgument, "--family (or --name) is required");
  const auto family = parse_family(a.family);
  if (!family) fail(ErrorCode::InvalidArgument, "unknown family '" + a.family + "'");
  if (*family == Family::Alt) {
    const auto degree = a.degree ? a.degree : a.rank;
    if (!degree) fail(ErrorCode::InvalidArgument, "Alt needs --degree");
    return GroupSpec::alternating(*degree);
  }
  if (*family == Family::Sporadic) fail(ErrorCode::InvalidArgument, "Sporadic needs --name");
  if (a.q.empty()) fail(ErrorCode::InvalidArgument, "--q is required for Lie families");
  const BigInt q = parse_natural(a.q);
  if (!a.rank && is_classical(*family)) fail(ErrorCode::InvalidArgument, "--rank is required for classical families");
  return GroupSpec::lie(*family, a.rank.value_or(0), q);
}

GroupSpec graph_spec(const SpecArgs& a) {
  GroupSpec s = make_spec(a);
  if (s.family != Family::B && s.family != Family::C)
    fail(ErrorCode::Unsupported, "prime graphs are computed for families B and C only");
  return s;
}

json document(const std::string& kind, json body) {
  json j = {{"schema", "gkcheck." + kind + "/" + std::to_string(kSchemaVersion)}};
  j.update(body);
  return j;
}

int cmd_order(const Options& o, std::ostream& out) {
  const GroupSpec s = make_spec(o.spec);
  const Factorization f = group_order(s);
  if (o.format == "structured") {
    out << document("order", {{"group", spec_json(s)}, {"order", factorization_json(f)}}).dump(2) << "\n";
  } else {
    out << "group: " << s.label() << "\n";
    out << "order: " << f.to_string() << "\n";
    out << "value: " << f.value() << "\n";
  }
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const GroupSpec s = graph_spec(o.spec);
  const PrimeGraph g = build_graph(s);
  if (o.format == "structured")
    out << document("graph", {{"group", spec_json(s)}, {"graph", graph_json(g)}}).dump(2) << "\n";
  else if (o.format == "dot")
    out << to_dot(g);
  else
    out << to_adjacency_text(g);
  return kOk;
}

int cmd_degpat(const Options& o, std::ostream& out) {
  const GroupSpec s = graph_spec(o.spec);
  const PrimeGraph g = build_graph(s);
  if (o.format == "structured") {
    json pattern = json::array();
    const auto degrees = degree_pattern(g);
    for (std::size_t i = 0; i < g.size(); ++i)
      pattern.push_back({{"prime", g.vertices()[i].str()}, {"degree", degrees[i]}});
    out << document("degpat", {{"group", spec_json(s)}, {"degree_pattern", pattern}}).dump(2) << "\n";
  } else {
    out << degree_pattern_text(g) << "\n";
  }
  return kOk;
}

int cmd_oc(const Options& o, std::ostream& out) {
  const GroupSpec s = graph_spec(o.spec);
  const OrderComponents oc = order_components(s);
  if (o.format == "structured") {
    out << document("oc", {{"group", spec_json(s)}, {"order_components", order_components_json(oc)}}).dump(2)
        << "\n";
  } else {
    for (std::size_t i = 0; i < oc.components.size(); ++i) {
      const OrderComponent& c = oc.components[i];
      out << "m_" << i + 1 << " = " << c.m.to_string() << " = " << c.m.value() << "  {";
      for (std::size_t k = 0; k < c.support.size(); ++k) out << (k ? " " : "") << c.support[k];
      out << "}\n";
    }
  }
  return kOk;
}

BigInt q_bound_of(const Options& o) {
  if (!o.q_bound.empty()) return parse_natural(o.q_bound);
  if (const char* env = std::getenv("GKCHECK_Q_BOUND"); env && *env) return parse_natural(env);
  return 0;
}

void check_exponent(u64 p) {
  if (p > kMaxExponent)
    fail(ErrorCode::MagnitudeExceeded, "p = " + std::to_string(p) + " is above the supported range (p <= " +
                                           std::to_string(kMaxExponent) + ")");
  if (!mersenne_check(p) || p < 5)
    fail(ErrorCode::InvalidExponent, "p = " + std::to_string(p) + " does not give a Mersenne prime 2^p-1 > 7");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BigInt bound = q_bound_of(o);
  check_exponent(o.p);
  const VerificationTrace t = verify_theorem(o.p, bound);
  if (o.format == "structured") out << trace_json(t) << "\n";
  else out << trace_text(t);
  return t.verdict == Verdict::TheoremVerified ? kOk : kNotVerified;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  check_exponent(o.p);
  const auto cases = list_candidates(o.p);
  if (o.case_id && (*o.case_id < 1 || *o.case_id > kCaseCount))
    fail(ErrorCode::InvalidArgument, "--case must lie in 1.." + std::to_string(kCaseCount));
  json all = json::array();
  for (const CandidateCase& c : cases) {
    if (o.case_id && c.id != *o.case_id) continue;
    json strategies = json::array(), chain = json::array(), exprs = json::array(), args = json::array();
    for (Strategy s : c.strategies) strategies.push_back(strategy_name(s));
    for (Strategy s : c.solution_chain) chain.push_back(strategy_name(s));
    for (const ComponentExpr& e : c.exprs) exprs.push_back(e.describe());
    for (ArgumentId a : c.arguments) args.push_back(argument_name(a));
    if (o.format == "structured") {
      all.push_back({{"case_id", c.id},
                     {"title", c.title},
                     {"strategies", strategies},
                     {"solution_chain", chain},
                     {"expressions", exprs},
                     {"arguments", args}});
      continue;
    }
    out << "step " << c.id << ": " << c.title << "\n  strategies:";
    for (Strategy s : c.strategies) out << " " << strategy_name(s);
    out << "\n";
    for (const ComponentExpr& e : c.exprs) out << "  = 2^p-1: " << e.describe() << "\n";
    for (ArgumentId a : c.arguments) out << "  argument: " << argument_name(a) << "\n";
  }
  if (o.format == "structured") out << document("catalog", {{"p", o.p}, {"cases", all}}).dump(2) << "\n";
  return kOk;
}

// Fast internal consistency checks, one line each.
int cmd_selftest(std::ostream& out) {
  int failures = 0;
  const auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  const GroupSpec c5 = GroupSpec::lie(Family::C, 5, 2);
  check("order C_5(2)", group_order(c5) == Factorization::parse("2^25·3^6·5^2·7·11·17·31"));
  check("degree pattern C_5(2)", degree_pattern_text(build_graph(c5)) == "2:4 3:5 5:3 7:3 11:1 17:2 31:0");
  const auto oc = order_components(c5);
  check("order components C_5(2)", oc.components.size() == 2 && oc.components[1].m.value() == 31);
  check("ppd(2^6-1) empty", ppd_set(2, 6).empty());
  check("ppd(2^10-1) = {11}", ppd_set(2, 10) == std::vector<BigInt>{11});
  check("Catalan (100, 20)", catalan_solutions(100, 20) == std::vector<CatalanSolution>{{3, 2, 2, 3}});
  check("abelian groups 4500",
        abelian_group_count(Factorization::parse("2^9·3^4·5^9·7·13·31")) == 4500);
  check("Mersenne 13", mersenne_check(13) && !mersenne_check(11));
  return failures ? kNotVerified : kOk;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MagnitudeExceeded:
    case ErrorCode::BoundTooSmall:
    case ErrorCode::Domain: return kComputation;
    default: return kInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime graphs, order components and the C_p(2) characterization replay", "gkcheck"};
  app.require_subcommand(1);
  Options o;

  auto* order = app.add_subcommand("order", "factored order of a simple group");
  add_spec_options(order, o.spec);
  add_format(order, o.format, {"text", "structured"});

  auto* graph = app.add_subcommand("graph", "prime graph of B_n(q) or C_n(q)");
  add_spec_options(graph, o.spec);
  add_format(graph, o.format, {"text", "structured", "dot"});

  auto* degpat = app.add_subcommand("degpat", "degree pattern of B_n(q) or C_n(q)");
  add_spec_options(degpat, o.spec);
  add_format(degpat, o.format, {"text", "structured"});

  auto* oc = app.add_subcommand("oc", "order components of B_n(q) or C_n(q)");
  add_spec_options(oc, o.spec);
  add_format(oc, o.format, {"text", "structured"});

  auto* verify = app.add_subcommand("verify", "replay the characterization of C_p(2)");
  verify->add_option("--p", o.p, "Mersenne exponent")->required();
  verify->add_option("--q-bound", o.q_bound, "largest q the searches may reach (default: derived; env GKCHECK_Q_BOUND)");
  add_format(verify, o.format, {"text", "structured"});

  auto* catalog = app.add_subcommand("catalog", "list the candidate cases");
  catalog->add_option("--p", o.p, "Mersenne exponent")->required();
  catalog->add_option("--case", o.case_id, "a single case id");
  add_format(catalog, o.format, {"text", "structured"});

  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

  std::vector<const char*> argv{"gkcheck"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: E_USAGE: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (order->parsed()) return cmd_order(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (degpat->parsed()) return cmd_degpat(o, out);
    if (oc->parsed()) return cmd_oc(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const Error& e) {
    err << "error: " << error_tag(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kInvalid;
}

}  // namespace gk::cli
