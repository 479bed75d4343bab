#pragma once

#include <string>

#include <json.hpp>

#include "gk/checker.hpp"
#include "gk/factorization.hpp"
#include "gk/group_spec.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

// Structured documents (docs/formats.md). Integers are decimal strings so
// no reader ever sees a rounded value.
inline constexpr int kSchemaVersion = 1;

nlohmann::json factorization_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

nlohmann::json order_components_json(const OrderComponents& oc);
OrderComponents order_components_from_json(const nlohmann::json& j);

nlohmann::json graph_json(const PrimeGraph& g);
nlohmann::json spec_json(const GroupSpec& s);
nlohmann::json witness_json(const Witness& w);
nlohmann::json trace_document(const VerificationTrace& t);

// "2:4 3:5 5:3 ..." in ascending vertex order.
std::string degree_pattern_text(const PrimeGraph& g);

// Decimal, or "<n digits>" past max_digits.
std::string abbreviate(const BigInt& x, std::size_t max_digits = 60);

}  // namespace gk
