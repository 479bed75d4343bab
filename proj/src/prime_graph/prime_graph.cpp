#include <algorithm>
#include <map>
#include <numeric>

#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

PrimeGraph::PrimeGraph(std::vector<BigInt> vertices, const std::vector<std::pair<BigInt, BigInt>>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(ErrorCode::InvalidArgument, "prime graph: duplicate vertex");
  adj_.assign(vertices_.size(), std::vector<bool>(vertices_.size(), false));
  for (const auto& [a, b] : edges) {
    const std::size_t i = index_of(a), j = index_of(b);
    if (i == j) fail(ErrorCode::InvalidArgument, "prime graph: loop at " + a.str());
    adj_[i][j] = adj_[j][i] = true;
  }
}

std::size_t PrimeGraph::index_of(const BigInt& prime) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), prime);
  if (it == vertices_.end() || *it != prime) fail(ErrorCode::Domain, prime.str() + " is not a vertex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t PrimeGraph::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::count(adj_[i].begin(), adj_[i].end(), true));
}

std::size_t PrimeGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += degree(i);
  return total / 2;
}

std::vector<std::pair<BigInt, BigInt>> PrimeGraph::edges() const {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adj_[i][j]) out.emplace_back(vertices_[i], vertices_[j]);
  return out;
}

namespace {

u64 small(const BigInt& x) { return static_cast<u64>(x); }

// e(r, q) for every vertex other than the characteristic.
bool adjacent_by_orders(unsigned n, const BigInt& t, const BigInt& q, const BigInt& r, const BigInt& s) {
  if (r == t || s == t) {
    const BigInt& other = r == t ? s : r;
    const u64 k = small(mult_order(other, q));
    return eta(k) <= n - 1;
  }
  const u64 k = small(mult_order(r, q));
  const u64 l = small(mult_order(s, q));
  const u64 ek = eta(k), el = eta(l);
  if (ek + el <= n) return true;
  auto odd_ratio = [](u64 num, u64 den) { return num % den == 0 && (num / den) % 2 == 1; };
  if (ek < el) return odd_ratio(l, k);
  if (el < ek) return odd_ratio(k, l);
  return odd_ratio(l, k) || odd_ratio(k, l);
}

void require_bc(const GroupSpec& spec) {
  if (spec.family != Family::B && spec.family != Family::C)
    fail(ErrorCode::Unsupported, "prime graphs are built for families B and C only, not " + spec.label());
}

}  // namespace

bool adjacent_bc(unsigned n, const BigInt& q, const BigInt& r, const BigInt& s) {
  const GroupSpec spec = GroupSpec::lie(Family::C, n, q);
  const Factorization order = group_order(spec);
  if (order.exponent_of(r) == 0) fail(ErrorCode::Domain, r.str() + " does not divide |" + spec.label() + "|");
  if (order.exponent_of(s) == 0) fail(ErrorCode::Domain, s.str() + " does not divide |" + spec.label() + "|");
  if (r == s) fail(ErrorCode::Domain, "adjacency needs two distinct primes");
  return adjacent_by_orders(n, spec.characteristic, q, r, s);
}

PrimeGraph build_graph(const GroupSpec& spec) {
  require_bc(spec);
  validate(spec);
  const std::vector<BigInt> primes = prime_set(spec);
  const BigInt q = spec.q();
  std::vector<std::pair<BigInt, BigInt>> edges;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (adjacent_by_orders(spec.rank, spec.characteristic, q, primes[i], primes[j]))
        edges.emplace_back(primes[i], primes[j]);
  return PrimeGraph(primes, edges);
}

std::vector<std::vector<BigInt>> components(const PrimeGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<BigInt>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(g.vertices()[i]);
  std::vector<std::vector<BigInt>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  // Vertices are ascending, so each component's front is its minimum and 2,
  // when present, heads the first component after sorting.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::size_t> degree_pattern(const PrimeGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.degree(i));
  return out;
}

OrderComponents order_components(const Factorization& order, const PrimeGraph& g) {
  if (order.primes() != g.vertices()) fail(ErrorCode::InvalidArgument, "order and prime graph disagree on primes");
  OrderComponents oc;
  for (auto& comp : components(g)) oc.components.push_back({order.restricted_to(comp), comp});
  return oc;
}

OrderComponents order_components(const GroupSpec& spec) {
  require_bc(spec);
  return order_components(group_order(spec), build_graph(spec));
}

}  // namespace gk
