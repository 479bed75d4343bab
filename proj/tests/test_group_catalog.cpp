#include <doctest.h>

#include <set>

#include "gk/candidates.hpp"
#include "gk/exact_arith.hpp"
#include "gk/group_catalog.hpp"

using namespace gk;

namespace {

GroupSpec lie(Family f, unsigned n, unsigned q) { return GroupSpec::lie(f, n, q); }

BigInt product(const std::vector<BigInt>& xs) {
  BigInt r = 1;
  for (const BigInt& x : xs) r *= x;
  return r;
}

// Order of PSL/PSp/... straight from the textbook products, for comparison.
BigInt psl_order(unsigned n, const BigInt& q) {
  BigInt o = pow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) o *= pow(q, i) - 1;
  return o / gcd(BigInt(n), q - 1);
}

BigInt psp_order(unsigned n, const BigInt& q) {
  BigInt o = pow(q, n * n);
  for (unsigned i = 1; i <= n; ++i) o *= pow(q, 2 * i) - 1;
  return o / gcd(BigInt(2), q - 1);
}

std::vector<GroupSpec> sweep() {
  std::vector<GroupSpec> out;
  // Skips the few non-simple parameter sets.
  const auto lie = [&out](Family f, unsigned n, unsigned q) {
    try {
      return GroupSpec::lie(f, n, q);
    } catch (const Error&) {
      return GroupSpec::alternating(5);
    }
  };
  const std::vector<unsigned> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};
  for (unsigned q : qs) {
    for (unsigned n = 1; n <= 8; ++n) {
      out.push_back(lie(Family::A, n, q));
      if (n >= 2) out.push_back(lie(Family::TwoA, n, q));
      if (n >= 2 && !(n == 2 && q == 2)) out.push_back(lie(Family::C, n, q));
      if (n >= 3) out.push_back(lie(Family::B, n, q));
      if (n >= 4) out.push_back(lie(Family::D, n, q));
      if (n >= 4) out.push_back(lie(Family::TwoD, n, q));
    }
    for (Family f : {Family::G2, Family::F4, Family::ThreeD4, Family::E6, Family::TwoE6, Family::E7, Family::E8})
      if (!(f == Family::G2 && q == 2)) out.push_back(lie(f, 0, q));
  }
  for (unsigned q : {8u, 32u, 128u}) out.push_back(lie(Family::TwoB2, 0, q));
  for (unsigned q : {27u, 243u}) out.push_back(lie(Family::TwoG2, 0, q));
  for (unsigned q : {8u, 32u}) out.push_back(lie(Family::TwoF4, 0, q));
  for (unsigned d = 5; d <= 40; ++d) out.push_back(GroupSpec::alternating(d));
  return out;
}

}  // namespace

TEST_CASE("group_order examples") {
  CHECK(group_order(lie(Family::C, 5, 2)) == Factorization::parse("2^25·3^6·5^2·7·11·17·31"));
  CHECK(group_order(lie(Family::A, 2, 5)) == Factorization::parse("2^5·3·5^3·31"));
  CHECK(group_order(lie(Family::TwoB2, 0, 8)) == Factorization::parse("2^6·5·7·13"));
  CHECK(group_order(GroupSpec::alternating(5)).value() == 60);
  CHECK(group_order(GroupSpec::named("M11")).value() == 7920);
}

TEST_CASE("prime_set examples") {
  CHECK(prime_set(lie(Family::C, 5, 2)) == std::vector<BigInt>{2, 3, 5, 7, 11, 17, 31});
  CHECK(prime_set(GroupSpec::alternating(5)) == std::vector<BigInt>{2, 3, 5});
}

TEST_CASE("orders agree with textbook products") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (unsigned n = 2; n <= 7; ++n) {
      if (!(n == 2 && q <= 3)) CHECK(group_order(lie(Family::A, n - 1, q)).value() == psl_order(n, q));
      if (!(n == 2 && q == 2)) CHECK(group_order(lie(Family::C, n, q)).value() == psp_order(n, q));
    }
}

TEST_CASE("|B_n(q)| = |C_n(q)|") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u, 11u})
    for (unsigned n = 3; n <= 9; ++n) CHECK(group_order(lie(Family::B, n, q)) == group_order(lie(Family::C, n, q)));
}

TEST_CASE("illegal specs are rejected") {
  CHECK_THROWS_AS(lie(Family::TwoB2, 0, 2), Error);
  CHECK_THROWS_AS(lie(Family::TwoB2, 0, 4), Error);
  CHECK_THROWS_AS(lie(Family::TwoG2, 0, 3), Error);
  CHECK_THROWS_AS(lie(Family::TwoG2, 0, 9), Error);
  CHECK_THROWS_AS(lie(Family::TwoF4, 0, 4), Error);
  CHECK_THROWS_AS(lie(Family::C, 1, 5), Error);
  CHECK_THROWS_AS(lie(Family::C, 2, 2), Error);
  CHECK_THROWS_AS(lie(Family::A, 2, 6), Error);
  CHECK_THROWS_AS(GroupSpec::alternating(4), Error);
  CHECK_THROWS_AS(GroupSpec::named("M13"), Error);
}

TEST_CASE("odd order components of selected groups") {
  CHECK(odd_order_components(lie(Family::C, 5, 2)) == std::vector<BigInt>{31});
  CHECK(odd_order_components(lie(Family::TwoB2, 0, 8)) == std::vector<BigInt>{7, 5, 13});
  CHECK(odd_order_components(lie(Family::A, 2, 5)) == std::vector<BigInt>{31});
  CHECK(odd_order_components(lie(Family::A, 3, 5)) == std::vector<BigInt>{31});
  CHECK(odd_order_components(lie(Family::A, 2, 2)) == std::vector<BigInt>{3, 7});
  CHECK(odd_order_components(lie(Family::G2, 0, 4)) == std::vector<BigInt>{13});
  CHECK(odd_order_components(GroupSpec::alternating(31)) == std::vector<BigInt>{29, 31});
  CHECK(odd_order_components(GroupSpec::named("J4")) == std::vector<BigInt>{23, 29, 31, 37, 43});
  CHECK(odd_order_components(lie(Family::A, 3, 3)) == std::vector<BigInt>{13});
  CHECK_THROWS_AS(odd_order_components(lie(Family::A, 3, 7)), Error);
}

TEST_CASE("property: odd order components are odd, divide the order and split it coprimely") {
  std::size_t checked = 0;
  for (const GroupSpec& s : sweep()) {
    std::vector<BigInt> comps;
    try {
      comps = odd_order_components(s);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::Unsupported);
      continue;
    }
    INFO(s.label());
    const Factorization order = group_order(s);
    const BigInt total = order.value();
    REQUIRE_FALSE(comps.empty());
    for (const BigInt& m : comps) {
      REQUIRE(m % 2 == 1);
      REQUIRE(m > 1);
      REQUIRE(total % m == 0);
      REQUIRE(gcd(m, total / m) == 1);
    }
    REQUIRE(gcd(product(comps), total / product(comps)) == 1);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("property: out_order stays within 2 f gcd bounds") {
  for (unsigned q : {2u, 3u, 4u, 8u, 9u, 25u, 27u})
    for (unsigned n = 2; n <= 6; ++n) {
      const GroupSpec a = lie(Family::A, n, q);
      CHECK(BigInt(2 * a.fexp) * gcd(BigInt(n + 1), a.q() - 1) % out_order(a) == 0);
      if (!(n == 2 && q == 2)) {
        const GroupSpec c = lie(Family::C, n, q);
        CHECK(BigInt(2 * c.fexp * 2) % out_order(c) == 0);
      }
    }
  CHECK(out_order(lie(Family::A, 1, 32)) == 10);
}

TEST_CASE("named-group table passes its own consistency checks") {
  const auto& table = named_groups();
  std::size_t sporadic = 0;
  for (const NamedGroup& g : table) {
    INFO(g.name);
    if (g.kind == "sporadic") ++sporadic;
    const BigInt total = g.order.value();
    for (const BigInt& m : g.odd_components) {
      REQUIRE(m % 2 == 1);
      REQUIRE(total % m == 0);
      REQUIRE(gcd(m, total / m) == 1);
    }
    if (g.as_lie) REQUIRE(group_order(*g.as_lie) == g.order);
  }
  CHECK(sporadic == 26);
  CHECK(find_named("Ly") != nullptr);
}

TEST_CASE("named-group parser rejects malformed records") {
  CHECK_THROWS_AS(parse_named_groups("X | sporadic | 2^3·4 | 3\n"), Error);
  CHECK_THROWS_AS(parse_named_groups("X | sporadic | 2^3·3\n"), Error);
  CHECK_THROWS_AS(parse_named_groups("X | weird | 2^3·3 | 3\n"), Error);
  CHECK_THROWS_AS(parse_named_groups("X | sporadic | 2^3·3^2 | 3\n"), Error);  // 3 shares a factor with 24
  CHECK_THROWS_AS(parse_named_groups("X | sporadic | 2^3·3 | 4\n"), Error);
  CHECK(parse_named_groups("# comment\n\nX | sporadic | 2^3·3 | 3\n").size() == 1);
}

TEST_CASE("component expressions evaluate exactly") {
  using K = ExprKind;
  CHECK(expr_numerator(K::Linear, 2, 5) == 31);
  CHECK(expr_numerator(K::Linear, 5, 3) == 31);
  CHECK(expr_denominator(K::LinearGcd, 5, 3) == 1);
  CHECK(expr_denominator(K::LinearGcd, 4, 3) == 3);
  CHECK(expr_numerator(K::Phi24, 2, 0) == 241);
  CHECK(expr_numerator(K::Phi15, 2, 0) == 151);
  CHECK(expr_numerator(K::Phi30, 2, 0) == 331);
  CHECK(expr_numerator(K::Phi20, 2, 0) == 205);
  CHECK(expr_numerator(K::SuzukiMinus, 8, 0) == 5);
  CHECK(expr_numerator(K::SuzukiPlus, 8, 0) == 13);
  CHECK(expr_numerator(K::ReeMinus, 27, 0) == 19);
  CHECK(expr_numerator(K::ReePlus, 27, 0) == 37);
  CHECK(expr_numerator(K::ReeTitsPlus, 8, 0) == 109);
  CHECK(expr_numerator(K::ReeTitsMinus, 8, 0) == 37);
  CHECK_THROWS_AS(expr_numerator(K::SuzukiMinus, 16, 0), Error);
}

TEST_CASE("candidate catalog structure") {
  CHECK_THROWS_AS(list_candidates(11), Error);
  CHECK_THROWS_AS(list_candidates(3), Error);
  for (u64 p : {5u, 7u, 13u}) {
    const auto cases = list_candidates(p);
    REQUIRE(cases.size() == static_cast<std::size_t>(kCaseCount));
    std::set<std::string> titles;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const CandidateCase& c = cases[i];
      INFO("case " << c.id);
      CHECK(c.id == static_cast<int>(i) + 1);
      CHECK_FALSE(c.strategies.empty());
      const bool confirm = std::find(c.strategies.begin(), c.strategies.end(), Strategy::Confirm) != c.strategies.end();
      CHECK(confirm == (c.id == kConfirmCase));
      CHECK(titles.insert(c.title).second);
      if (c.kind == CaseKind::Lie) CHECK_FALSE(c.exprs.empty());
    }
  }
}

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::OrderDivisibility, Strategy::TwoPartOverflow, Strategy::ModContradiction,
                     Strategy::TPartBound, Strategy::Lemma4Divisibility, Strategy::ZsigmondyOutside,
                     Strategy::CatalanNoSolution, Strategy::BoundedSearchEmpty, Strategy::Confirm})
    CHECK(parse_strategy(strategy_name(s)) == s);
  CHECK_FALSE(parse_strategy("Nope"));
}
