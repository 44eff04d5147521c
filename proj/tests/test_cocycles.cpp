#include <catch_amalgamated.hpp>

#include <random>

#include "rgv/rgv.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rgv;

namespace {

std::size_t at(int n, int a, int b, int c) {
  return (static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)) *
             static_cast<std::size_t>(n) +
         static_cast<std::size_t>(c);
}

bool quadruple_fails(const ThreeCocycle& l, const std::vector<int>& q) {
  const FiniteGroup& g = l.group();
  int a = q[0], b = q[1], c = q[2], d = q[3];
  return l(a, b, c) * l(a, g.mul(b, c), d) * l(b, c, d) != l(g.mul(a, b), c, d) * l(a, b, g.mul(c, d));
}

}  // namespace

TEST_CASE("cyclic cocycle values", "[cocycles]") {
  REQUIRE(cyclic_cocycle(2, 1)(1, 1, 1) == RootOfUnity::minus_one());
  REQUIRE(cyclic_cocycle(3, 1)(1, 2, 2) == RootOfUnity(3, 1));
  REQUIRE(cyclic_cocycle(3, 1)(1, 1, 1).is_one());
  REQUIRE(cyclic_cocycle(4, 3)(2, 3, 1) == RootOfUnity(4, 6));
  REQUIRE(cyclic_cocycle(5, 0).is_trivial());
  REQUIRE(cyclic_cocycle(5, 5).is_trivial());
  REQUIRE(cyclic_cocycle(6, 1).multiplicative_order() == 6);
  REQUIRE(cyclic_cocycle(6, 2).multiplicative_order() == 3);
}

TEST_CASE("cyclic cocycles satisfy the cocycle identity", "[cocycles]") {
  for (int n = 1; n <= 8; ++n)
    for (int q = 0; q < n; ++q) {
      ThreeCocycle l = cyclic_cocycle(n, q);
      CAPTURE(n, q);
      REQUIRE_FALSE(check_three_cocycle(l).has_value());
      REQUIRE_NOTHROW(verify_three_cocycle(l));
      if (n <= 6) REQUIRE(oracle::is_cocycle(l.group(), [&](int a, int b, int c) { return l(a, b, c); }));
    }
}

TEST_CASE("cocycle products", "[cocycles]") {
  for (int n : {2, 3, 4, 6})
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) REQUIRE(cyclic_cocycle(n, q) * cyclic_cocycle(n, r) == cyclic_cocycle(n, q + r));
}

TEST_CASE("the cyclic formula follows the chosen generator", "[cocycles]") {
  // Z6 as Z2 x Z3: the least generator is used when none is given.
  FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  for (int q = 0; q < 6; ++q) REQUIRE_FALSE(check_three_cocycle(cyclic_cocycle_on(g, q)).has_value());
  REQUIRE_THROWS_AS(cyclic_cocycle_on(fx::z2xz2(), 1), Error);
  REQUIRE_THROWS_AS(cyclic_cocycle_on(FiniteGroup::cyclic(4), 1, 2), Error);
}

TEST_CASE("single-entry corruption is reported with a violating quadruple", "[cocycles]") {
  ThreeCocycle l = cyclic_cocycle(4, 1);
  auto values = l.values();
  values[at(4, 1, 2, 3)] = values[at(4, 1, 2, 3)] * RootOfUnity::minus_one();
  ThreeCocycle bad = ThreeCocycle::from_values(l.group(), values);
  auto v = check_three_cocycle(bad);
  REQUIRE(v);
  REQUIRE(v->kind == CocycleViolation::Kind::cocycle_identity);
  REQUIRE(v->elements.size() == 4);
  REQUIRE(quadruple_fails(bad, v->elements));
  try {
    verify_three_cocycle(bad);
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::cocycle_violation);
    REQUIRE(e.detail()["elements"].size() == 4);
  }
}

TEST_CASE("on Z2 a negated entry swaps the two classes", "[cocycles]") {
  // Z2 has a single non-identity triple, so negating it stays a cocycle.
  auto values = cyclic_cocycle(2, 1).values();
  values[at(2, 1, 1, 1)] = values[at(2, 1, 1, 1)] * RootOfUnity::minus_one();
  ThreeCocycle flipped = ThreeCocycle::from_values(FiniteGroup::cyclic(2), values);
  REQUIRE_FALSE(check_three_cocycle(flipped).has_value());
  REQUIRE(flipped == cyclic_cocycle(2, 0));
}

TEST_CASE("non-normalized tables are rejected with the triple", "[cocycles]") {
  FiniteGroup g = FiniteGroup::cyclic(3);
  std::vector<RootOfUnity> values(27);
  values[at(3, 0, 1, 2)] = RootOfUnity(3, 1);
  auto v = check_three_cocycle(ThreeCocycle::from_values(g, values));
  REQUIRE(v);
  REQUIRE(v->kind == CocycleViolation::Kind::normalization);
  REQUIRE(v->elements == std::vector<int>{0, 1, 2});
}

TEST_CASE("random corruptions agree with the direct oracle", "[cocycles]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int q = static_cast<int>(rng() % static_cast<unsigned>(n));
    ThreeCocycle l = cyclic_cocycle(n, q);
    auto values = l.values();
    int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    RootOfUnity factor(12, 1 + static_cast<std::int64_t>(rng() % 11));
    values[at(n, a, b, c)] = values[at(n, a, b, c)] * factor;
    ThreeCocycle bad = ThreeCocycle::from_values(l.group(), values);
    bool ok = oracle::is_cocycle(bad.group(), [&](int x, int y, int z) { return bad(x, y, z); });
    auto v = check_three_cocycle(bad);
    CAPTURE(n, q, a, b, c, factor.str());
    REQUIRE(ok == !v.has_value());
    if (v) REQUIRE(quadruple_fails(bad, v->elements));
  }
}

TEST_CASE("verification cap", "[cocycles]") {
  FiniteGroup g = FiniteGroup::cyclic(kCocycleVerifyCap + 1);
  try {
    verify_three_cocycle(cyclic_cocycle_on(g, 1));
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::cap_exceeded);
  }
}
