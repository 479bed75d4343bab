#include <doctest.h>

#include <random>

#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"
#include "gk/prime_graph.hpp"

using namespace gk;

namespace {

GroupSpec c(unsigned n, const BigInt& q) { return GroupSpec::lie(Family::C, n, q); }
GroupSpec b(unsigned n, const BigInt& q) { return GroupSpec::lie(Family::B, n, q); }

using Edge = std::pair<BigInt, BigInt>;

}  // namespace

TEST_CASE("adjacent_bc examples") {
  CHECK_FALSE(adjacent_bc(5, 2, 2, 31));
  CHECK(adjacent_bc(5, 2, 3, 11));
  CHECK_FALSE(adjacent_bc(5, 2, 5, 17));
  CHECK(adjacent_bc(5, 2, 3, 11) == adjacent_bc(5, 2, 11, 3));
  CHECK_THROWS_AS(adjacent_bc(5, 2, 3, 13), Error);
}

TEST_CASE("GK(C_5(2)) edges, components, degrees") {
  const PrimeGraph g = build_graph(c(5, 2));
  const std::vector<Edge> expected{{2, 3}, {2, 5}, {2, 7}, {2, 17}, {3, 5}, {3, 7}, {3, 11}, {3, 17}, {5, 7}};
  CHECK(g.size() == 7);
  CHECK(g.edges() == expected);
  CHECK(components(g) == std::vector<std::vector<BigInt>>{{2, 3, 5, 7, 11, 17}, {31}});
  CHECK(degree_pattern(g) == std::vector<std::size_t>{4, 5, 3, 3, 1, 2, 0});
  CHECK(build_graph(b(5, 2)) == g);
}

TEST_CASE("degree pattern re-derived pair by pair") {
  // Independent evaluation of the two adjacency rules for q = 2.
  const unsigned n = 5;
  const std::vector<u64> primes{2, 3, 5, 7, 11, 17, 31};
  std::vector<std::size_t> deg(primes.size(), 0);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      bool adj;
      if (primes[i] == 2) {
        adj = eta(static_cast<u64>(mult_order(primes[j], 2))) <= n - 1;
      } else {
        u64 k = static_cast<u64>(mult_order(primes[i], 2)), l = static_cast<u64>(mult_order(primes[j], 2));
        if (eta(k) > eta(l)) std::swap(k, l);
        adj = eta(k) + eta(l) <= n || (l % k == 0 && (l / k) % 2 == 1) || (eta(k) == eta(l) && k % l == 0 && (k / l) % 2 == 1);
      }
      if (adj) ++deg[i], ++deg[j];
    }
  CHECK(deg == std::vector<std::size_t>{4, 5, 3, 3, 1, 2, 0});
}

TEST_CASE("C_2(2) is rejected and other families are unsupported") {
  CHECK_THROWS_AS(build_graph(GroupSpec::lie(Family::C, 2, 2)), Error);
  try {
    build_graph(GroupSpec::lie(Family::A, 3, 4));
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
}

TEST_CASE("order components of C_p(2)") {
  for (unsigned p : {5u, 7u, 13u}) {
    const OrderComponents oc = order_components(c(p, 2));
    REQUIRE(oc.components.size() == 2);
    BigInt m1 = pow2(p * p) * (pow2(p) + 1);
    for (unsigned i = 1; i < p; ++i) m1 *= pow2(2 * i) - 1;
    CHECK(oc.components[0].m.value() == m1);
    CHECK(oc.components[1].m.value() == pow2(p) - 1);
    CHECK(oc.components[1].support == std::vector<BigInt>{pow2(p) - 1});
    CHECK(oc == order_components(b(p, 2)));
  }
}

TEST_CASE("corollary: deg(3) and the non-neighbours of 3") {
  for (unsigned p : {5u, 7u, 13u}) {
    const PrimeGraph g = build_graph(c(p, 2));
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[1] == std::vector<BigInt>{pow2(p) - 1});
    const std::size_t three = g.index_of(3);
    CHECK(g.degree(three) == comps[0].size() - 1);
    CHECK(g.degree(g.index_of(pow2(p) - 1)) == 0);
    std::vector<BigInt> apart;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != three && !g.adjacent(i, three)) apart.push_back(g.vertices()[i]);
    CHECK(apart == ppd_set(2, p));
  }
}

TEST_CASE("property: graphs are symmetric, irreflexive, handshake-even; components are cliques beyond the first") {
  std::mt19937 rng(5);
  const std::vector<unsigned> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 49};
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 2 + rng() % 9;
    const unsigned q = qs[rng() % qs.size()];
    if (n == 2 && q == 2) continue;
    const GroupSpec spec = c(n, q);
    const PrimeGraph g = build_graph(spec);
    INFO(spec.label());
    REQUIRE(g.vertices() == prime_set(spec));
    std::size_t sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      REQUIRE_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < g.size(); ++j) REQUIRE(g.adjacent(i, j) == g.adjacent(j, i));
      sum += g.degree(i);
      REQUIRE(g.degree(i) < g.size());
    }
    REQUIRE(sum % 2 == 0);
    REQUIRE(sum == 2 * g.edge_count());
    const auto comps = components(g);
    REQUIRE(comps.front().front() == 2);
    for (std::size_t k = 1; k < comps.size(); ++k)
      for (const BigInt& x : comps[k])
        for (const BigInt& y : comps[k])
          if (x != y) REQUIRE(g.adjacent(x, y));
    const OrderComponents oc = order_components(spec);
    BigInt product = 1;
    for (std::size_t k = 0; k < oc.components.size(); ++k) {
      REQUIRE(oc.components[k].support == comps[k]);
      for (std::size_t l = k + 1; l < oc.components.size(); ++l)
        REQUIRE(oc.components[k].m.coprime_to(oc.components[l].m));
      product *= oc.components[k].m.value();
    }
    REQUIRE(product == group_order(spec).value());
  }
}

TEST_CASE("property: B_n(q) and C_n(q) have identical labelled graphs") {
  std::mt19937 rng(11);
  const std::vector<unsigned> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 3 + rng() % 8;
    const unsigned q = qs[rng() % qs.size()];
    CHECK(build_graph(b(n, q)) == build_graph(c(n, q)));
  }
}

TEST_CASE("small graphs") {
  const PrimeGraph single({7}, {});
  CHECK(components(single).size() == 1);
  const PrimeGraph edgeless({3, 5, 7}, {});
  CHECK(components(edgeless).size() == 3);
  CHECK(degree_pattern(edgeless) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(edgeless.index_of(11), Error);
}

TEST_CASE("adjacency text round-trips; DOT output names every vertex") {
  const PrimeGraph g = build_graph(c(7, 2));
  const std::string text = to_adjacency_text(g);
  CHECK(text.rfind("# gkcheck adjacency v1\n", 0) == 0);
  CHECK(parse_adjacency_text(text) == g);
  CHECK_THROWS_AS(parse_adjacency_text("2: 3\n3:\n"), Error);
  CHECK_THROWS_AS(parse_adjacency_text("2: x\n"), Error);
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("graph \"GK\" {", 0) == 0);
  for (const BigInt& v : g.vertices()) CHECK(dot.find("\"" + v.str() + "\" [label=") != std::string::npos);
  CHECK(dot.find("\"2\" -- \"3\";") != std::string::npos);
}
