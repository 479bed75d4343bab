#include <set>
#include <sstream>

#include "gk/error.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

std::string to_adjacency_text(const PrimeGraph& g) {
  std::ostringstream out;
  out << "# gkcheck adjacency v1\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.vertices()[i] << ':';
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.adjacent(i, j)) out << ' ' << g.vertices()[j];
    out << '\n';
  }
  return out.str();
}

PrimeGraph parse_adjacency_text(std::string_view text) {
  std::vector<BigInt> vertices;
  std::set<std::pair<BigInt, BigInt>> listed;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::Parse, "adjacency line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) bad("missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string v;
    if (!(head >> v)) bad("missing vertex");
    const BigInt a = parse_natural(v);
    vertices.push_back(a);
    std::istringstream rest(line.substr(colon + 1));
    while (rest >> v) listed.emplace(a, parse_natural(v));
  }
  std::vector<std::pair<BigInt, BigInt>> edges;
  for (const auto& [a, b] : listed) {
    if (!listed.count({b, a})) fail(ErrorCode::Parse, "adjacency is not symmetric at " + a.str() + "-" + b.str());
    if (a < b) edges.emplace_back(a, b);
  }
  return PrimeGraph(vertices, edges);
}

std::string to_dot(const PrimeGraph& g, std::string_view name) {
  const auto comps = components(g);
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const BigInt& v : comps[c]) out << "  \"" << v << "\" [label=\"" << v << "\", component=" << c + 1 << "];\n";
  for (const auto& [a, b] : g.edges()) out << "  \"" << a << "\" -- \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gk
