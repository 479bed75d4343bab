#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gk/factorization.hpp"
#include "gk/group_spec.hpp"

namespace gk {

class PrimeGraph {
 public:
  PrimeGraph() = default;
  // Vertices must be distinct primes; they are sorted. Edges name vertices.
  PrimeGraph(std::vector<BigInt> vertices, const std::vector<std::pair<BigInt, BigInt>>& edges);

  const std::vector<BigInt>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Throws Error(Domain) for a prime that is not a vertex.
  std::size_t index_of(const BigInt& prime) const;
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
  bool adjacent(const BigInt& a, const BigInt& b) const { return adj_[index_of(a)][index_of(b)]; }
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  // Ascending pairs (a < b).
  std::vector<std::pair<BigInt, BigInt>> edges() const;

  bool operator==(const PrimeGraph&) const = default;

 private:
  std::vector<BigInt> vertices_;
  std::vector<std::vector<bool>> adj_;
};

// Adjacency of two distinct primes of B_n(q) = C_n(q) in the prime graph.
// Throws Error(Domain) when r or s does not divide the order.
bool adjacent_bc(unsigned n, const BigInt& q, const BigInt& r, const BigInt& s);

// Families B and C only; other families raise Error(Unsupported).
PrimeGraph build_graph(const GroupSpec& spec);

// Connected components; the one holding 2 comes first, the rest ascend by
// their smallest prime. Each component is ascending.
std::vector<std::vector<BigInt>> components(const PrimeGraph& g);

// Degrees listed by ascending vertex.
std::vector<std::size_t> degree_pattern(const PrimeGraph& g);

struct OrderComponent {
  Factorization m;
  std::vector<BigInt> support;
  bool operator==(const OrderComponent&) const = default;
};

struct OrderComponents {
  std::vector<OrderComponent> components;
  bool operator==(const OrderComponents&) const = default;
};

OrderComponents order_components(const Factorization& order, const PrimeGraph& g);
OrderComponents order_components(const GroupSpec& spec);

// Plain-text adjacency and DOT renderings (grammar in docs/formats.md).
std::string to_adjacency_text(const PrimeGraph& g);
PrimeGraph parse_adjacency_text(std::string_view text);
std::string to_dot(const PrimeGraph& g, std::string_view name = "GK");

}  // namespace gk
