#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "rgv/rgv.hpp"
#include "support/fixtures.hpp"

using namespace rgv;

namespace {

// Q8 as a regular permutation group on its own 8 elements.
FiniteGroup q8() {
  // elements 1,-1,i,-i,j,-j,k,-k as 0..7; left multiplication by i and j
  return FiniteGroup::from_generators(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g).classes) s.push_back(c.size());
  return s;
}

}  // namespace

TEST_CASE("generation from permutations", "[groups]") {
  REQUIRE(fx::s3().order() == 6);
  REQUIRE(FiniteGroup::from_generators(1, {}).order() == 1);
  FiniteGroup z4 = FiniteGroup::from_generators(4, {{1, 2, 3, 0}});
  REQUIRE(z4.order() == 4);
  REQUIRE(z4.is_cyclic());
  REQUIRE_FALSE(fx::s3().is_abelian());
  REQUIRE(fx::s3().exponent() == 6);
  REQUIRE(q8().order() == 8);
  REQUIRE(q8().exponent() == 4);
}

TEST_CASE("group order cap", "[groups]") {
  try {
    FiniteGroup::from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 100);
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::cap_exceeded);
  }
  REQUIRE(FiniteGroup::from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}).order() == 120);
}

TEST_CASE("invalid inputs are rejected", "[groups]") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  REQUIRE(code_of([] { FiniteGroup::from_generators(3, {{0, 0, 1}}); }) == ErrorCode::invalid_group);
  REQUIRE(code_of([] { FiniteGroup::from_cayley({{0, 1}, {1, 1}}); }) == ErrorCode::invalid_group);
  // latin square with identity 0 where 1*1 = 0: not a group of order 5
  REQUIRE(code_of([] {
            FiniteGroup::from_cayley({{0, 1, 2, 3, 4},
                                      {1, 0, 3, 4, 2},
                                      {2, 4, 0, 1, 3},
                                      {3, 2, 4, 0, 1},
                                      {4, 3, 1, 2, 0}});
          }) == ErrorCode::invalid_group);
}

TEST_CASE("conjugacy classes", "[groups]") {
  auto s3 = class_sizes(fx::s3());
  REQUIRE(std::multiset<std::size_t>(s3.begin(), s3.end()) == std::multiset<std::size_t>{1, 3, 2});
  REQUIRE(class_sizes(FiniteGroup::cyclic(5)) == std::vector<std::size_t>(5, 1));
  REQUIRE(class_sizes(fx::z2xz2()).size() == 4);
  REQUIRE(conjugacy_classes(q8()).classes.size() == 5);
  // representatives are least elements, classes partition G
  for (const FiniteGroup& g : {fx::s3(), q8()}) {
    auto cc = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cc.classes.size(); ++i) {
      REQUIRE(cc.classes[i].front() == cc.representatives[i]);
      total += cc.classes[i].size();
    }
    REQUIRE(total == static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("centralizers", "[groups]") {
  FiniteGroup s3 = fx::s3();
  for (int x = 0; x < s3.order(); ++x) {
    Subgroup c = centralizer(s3, x);
    int expect = s3.element_order(x) == 3 ? 3 : s3.element_order(x) == 2 ? 2 : 6;
    REQUIRE(c.order() == expect);
    std::size_t cls = 0;
    for (const auto& k : conjugacy_classes(s3).classes)
      if (std::find(k.begin(), k.end(), x) != k.end()) cls = k.size();
    REQUIRE(static_cast<std::size_t>(c.order()) * cls == 6u);
  }
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  REQUIRE(centralizer(z6, 4).order() == 6);
  Subgroup cq = centralizer(q8(), 2);
  REQUIRE(cq.order() == 4);
  REQUIRE(cq.group.is_cyclic());
}

TEST_CASE("direct products", "[groups]") {
  FiniteGroup p = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  REQUIRE(p.order() == 6);
  REQUIRE(p.is_cyclic());
  REQUIRE(fx::z2xz2().exponent() == 2);
  REQUIRE_FALSE(fx::z2xz2().is_cyclic());
}

TEST_CASE("character groups", "[groups]") {
  auto z3 = character_group(FiniteGroup::cyclic(3));
  REQUIRE(z3.size() == 3);
  REQUIRE(z3[0].is_trivial());
  std::set<std::int64_t> gen_exps;
  for (std::size_t i = 1; i < 3; ++i) gen_exps.insert(z3[i](1).embed(3).exponent());
  REQUIRE(gen_exps == std::set<std::int64_t>{1, 2});

  REQUIRE(character_group(FiniteGroup::trivial()).size() == 1);

  auto v4 = character_group(fx::z2xz2());
  REQUIRE(v4.size() == 4);
  for (const auto& chi : v4)
    for (int g = 0; g < 4; ++g) REQUIRE(chi(g).pow(2).is_one());
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) REQUIRE_FALSE(v4[a] == v4[b]);

  FiniteGroup z12 = FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(3));
  auto c12 = character_group(z12);
  REQUIRE(c12.size() == 12);
  for (const auto& chi : c12)
    for (int g = 0; g < 12; ++g)
      for (int h = 0; h < 12; ++h) REQUIRE(chi(z12.mul(g, h)) == chi(g) * chi(h));

  REQUIRE_THROWS_AS(character_group(fx::s3()), Error);
}

TEST_CASE("homomorphisms", "[groups]") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GroupHom d = GroupHom::from_generator_values(z4, {RootOfUnity(4, 1)});
  REQUIRE(d(2) == RootOfUnity::minus_one());
  REQUIRE(d.value_order() == 4);
  REQUIRE(d.pow(4).is_trivial());
  REQUIRE((d * d)(1) == RootOfUnity::minus_one());
  try {
    GroupHom::from_generator_values(z4, {RootOfUnity(3, 1)});
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::invalid_homomorphism);
  }
  try {
    GroupHom::from_values(z4, {RootOfUnity(), RootOfUnity(4, 1), RootOfUnity(), RootOfUnity(4, 3)});
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::invalid_homomorphism);
  }
  // sign character of S3
  FiniteGroup s3 = fx::s3();
  GroupHom sign = GroupHom::from_generator_values(s3, {RootOfUnity::minus_one(), RootOfUnity::one()});
  for (int g = 0; g < 6; ++g) REQUIRE(sign(g) == (s3.element_order(g) == 2 ? RootOfUnity::minus_one() : RootOfUnity()));
}

TEST_CASE("character tables", "[groups]") {
  auto t = character_table(fx::s3());
  REQUIRE(t.size() == 3);
  REQUIRE(t.degrees == std::vector<int>{1, 1, 2});
  auto tq = character_table(q8());
  REQUIRE(tq.degrees == std::vector<int>{1, 1, 1, 1, 2});
  auto tz = character_table(FiniteGroup::cyclic(5));
  REQUIRE(tz.size() == 5);
}
