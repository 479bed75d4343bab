#include <algorithm>
#include <sstream>

#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

namespace gk {

namespace detail {
extern const std::string_view kNamedGroupsText;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  fail(ErrorCode::Parse, "named-group table line " + std::to_string(line) + ": " + why);
}

void check_components(const NamedGroup& g, std::size_t line) {
  for (const BigInt& c : g.odd_components) {
    if (c % 2 == 0) bad_line(line, "component " + c.str() + " is even");
    const Factorization fc = factorize(c);
    if (!fc.divides(g.order)) bad_line(line, "component " + c.str() + " does not divide the order");
    for (const auto& t : fc.terms())
      if (g.order.exponent_of(t.prime) != t.exponent)
        bad_line(line, "component " + c.str() + " is not coprime to its cofactor");
  }
}

}  // namespace

std::vector<NamedGroup> parse_named_groups(std::string_view text) {
  std::vector<NamedGroup> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto fields = split(s, '|');
    if (fields.size() != 4) bad_line(line, "expected 4 '|'-separated fields");
    NamedGroup g;
    g.name = fields[0];
    if (g.name.empty()) bad_line(line, "empty name");
    const auto kind = split(fields[1], ' ');
    g.kind = kind[0];
    if (g.kind == "lie") {
      if (kind.size() != 4) bad_line(line, "lie kind needs family, rank and q");
      const auto fam = parse_family(kind[1]);
      if (!fam) bad_line(line, "unknown family '" + kind[1] + "'");
      g.as_lie = GroupSpec::lie(*fam, static_cast<unsigned>(parse_natural(kind[2])), parse_natural(kind[3]));
    } else if ((g.kind != "sporadic" && g.kind != "tits") || kind.size() != 1) {
      bad_line(line, "unknown kind '" + fields[1] + "'");
    }
    g.order = Factorization::parse(fields[2]);
    for (const auto& c : split(fields[3], ';')) g.odd_components.push_back(parse_natural(c));
    if (!std::is_sorted(g.odd_components.begin(), g.odd_components.end()))
      bad_line(line, "components must be ascending");
    check_components(g, line);
    if (std::any_of(out.begin(), out.end(), [&](const NamedGroup& o) { return o.name == g.name; }))
      bad_line(line, "duplicate name '" + g.name + "'");
    out.push_back(std::move(g));
  }
  return out;
}

const std::vector<NamedGroup>& named_groups() {
  static const std::vector<NamedGroup> table = parse_named_groups(detail::kNamedGroupsText);
  return table;
}

const NamedGroup* find_named(std::string_view name) {
  for (const auto& g : named_groups())
    if (g.name == name) return &g;
  return nullptr;
}

const NamedGroup* find_named(const GroupSpec& spec) {
  if (spec.family == Family::Sporadic) return find_named(spec.name);
  for (const auto& g : named_groups())
    if (g.as_lie && *g.as_lie == spec) return &g;
  return nullptr;
}

}  // namespace gk
