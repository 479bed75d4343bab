#pragma once

#include <string>
#include <vector>

#include "gk/checker.hpp"

namespace gk::detail {

inline Witness witness(WitnessKind kind, Strategy strategy, std::string text, std::vector<BigInt> values = {}) {
  return Witness{kind, strategy, std::move(text), std::move(values)};
}

inline Witness note(Strategy strategy, std::string text) { return witness(WitnessKind::Note, strategy, std::move(text)); }

inline BigInt mersenne(u64 p) { return pow2(static_cast<unsigned>(p)) - 1; }

inline std::string str(const BigInt& x) { return x.str(); }

}  // namespace gk::detail
