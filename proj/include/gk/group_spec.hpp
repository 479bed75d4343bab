#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gk/bigint.hpp"

namespace gk {

enum class Family { A, TwoA, B, C, D, TwoD, G2, TwoG2, F4, TwoF4, TwoB2, ThreeD4, E6, TwoE6, E7, E8, Alt, Sporadic };

std::string_view family_tag(Family f);  // "A", "2A", ..., "Alt", "Sporadic"
std::optional<Family> parse_family(std::string_view tag);
bool is_lie_type(Family f);
bool is_classical(Family f);

// Simple group identifier. Lie families use rank and q = characteristic^fexp;
// Alt uses rank as the degree; Sporadic (and the other named table entries)
// use name.
struct GroupSpec {
  Family family = Family::A;
  unsigned rank = 0;
  BigInt characteristic = 0;
  unsigned fexp = 0;
  std::string name;

  BigInt q() const;
  std::string label() const;
  bool operator==(const GroupSpec&) const = default;

  // These validate and throw Error(IllegalSpec) on a non-simple or
  // malformed parameter set. Exceptional families ignore the rank argument.
  static GroupSpec lie(Family family, unsigned rank, const BigInt& q);
  static GroupSpec alternating(unsigned degree);
  static GroupSpec named(const std::string& name);
};

void validate(const GroupSpec& spec);

}  // namespace gk
