#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/factorization.hpp"
#include "gk/group_spec.hpp"

namespace gk {

Factorization group_order(const GroupSpec& spec);
std::vector<BigInt> prime_set(const GroupSpec& spec);

// Odd order components m_2, m_3, ... in the order the case analysis lists
// them. Throws Error(Unsupported) when the spec has a connected prime graph or
// lies outside the catalog's rules.
std::vector<BigInt> odd_order_components(const GroupSpec& spec);

// |Out| as used by the case analysis (the A_1(q) entry is the 2f bound).
BigInt out_order(const GroupSpec& spec);

struct NamedGroup {
  std::string name;
  std::string kind;                 // "sporadic", "tits" or "lie"
  std::optional<GroupSpec> as_lie;  // set for kind "lie"
  Factorization order;
  std::vector<BigInt> odd_components;
};

// Parses the named-group table format (see data/named_groups.txt).
std::vector<NamedGroup> parse_named_groups(std::string_view text);
const std::vector<NamedGroup>& named_groups();
const NamedGroup* find_named(std::string_view name);
const NamedGroup* find_named(const GroupSpec& spec);

}  // namespace gk
