#include <catch_amalgamated.hpp>

#include "rgv/rgv.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rgv;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Z3 with d(1) = zeta_3", "[blocks]") {
  GVStructure gv = gv_structure(fx::cyclic(3, 0, 1));
  REQUIRE(block_table(gv, 6) == ints({0, 9, 0, 0, 6561, 0, 0}));
  REQUIRE(block_dim(gv, 4) == 6561);
  REQUIRE(block_dim(gv, 7) == Integer("4782969"));  // 3^14
}

TEST_CASE("abelian closed form", "[blocks]") {
  REQUIRE(abelian_closed_form(fx::cyclic(3), 3) == 729);
  REQUIRE(abelian_closed_form(fx::cyclic(3, 0, 1), 2) == 0);
  for (int n : {2, 3, 4, 5}) REQUIRE(abelian_closed_form(fx::cyclic(n, 0, 1), 1) == n * n);
  REQUIRE_THROWS_AS(abelian_closed_form(fx::cyclic(2, 1), 1), Error);
  REQUIRE_THROWS_AS(abelian_closed_form(fx::untwisted(fx::s3()), 1), Error);

  std::vector<PointedCategory> all;
  for (int n : {2, 3, 4})
    for (const auto& c : fx::all_d(FiniteGroup::cyclic(n))) all.push_back(c);
  for (const auto& c : fx::all_d(fx::z2xz2())) all.push_back(c);
  for (const auto& c : all) {
    GVStructure gv = gv_structure(c);
    auto table = block_table(gv, 6);
    for (int g = 0; g <= 6; ++g) {
      CAPTURE(fx::describe(c), g);
      REQUIRE(table[static_cast<std::size_t>(g)] == abelian_closed_form(c, g));
    }
  }
}

TEST_CASE("torus block counts simples", "[blocks]") {
  std::vector<PointedCategory> all = {fx::cyclic(2, 1), fx::cyclic(2, 1, 1), fx::cyclic(3, 1), fx::cyclic(3, 2, 1),
                                      fx::cyclic(4, 1, 1), fx::untwisted(fx::s3())};
  for (const auto& c : fx::all_d(fx::z2xz2())) all.push_back(c);
  for (const auto& c : all) {
    GVStructure gv = gv_structure(c);
    REQUIRE(block_dim(gv, 1) == static_cast<long>(gv.simples.size()));
  }
}

TEST_CASE("sphere block is one-dimensional exactly when spherical", "[blocks]") {
  for (int n = 2; n <= 4; ++n)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k) {
        PointedCategory c = fx::cyclic(n, q, k);
        GVStructure gv = gv_structure(c);
        bool spherical = sphericity_report(gv).spherical();
        REQUIRE(block_dim(gv, 0) == (spherical ? 1 : 0));
      }
}

TEST_CASE("coend class", "[blocks]") {
  GVStructure triv = gv_structure(fx::cyclic(3));
  auto f = coend_class(triv);
  for (std::size_t s = 0; s < f.size(); ++s) REQUIRE(f[s] == (s == triv.ring.unit() ? 9 : 0));

  GVStructure z3 = gv_structure(fx::cyclic(3, 0, 1));
  auto fz = coend_class(z3);
  const std::size_t k = dualizing_index(z3);
  REQUIRE(k != z3.ring.unit());
  for (std::size_t s = 0; s < fz.size(); ++s) REQUIRE(fz[s] == (s == k ? 9 : 0));

  GVStructure s3 = gv_structure(fx::untwisted(fx::s3()));
  auto fs = coend_class(s3);
  Integer total = 0;
  for (std::size_t s = 0; s < fs.size(); ++s) total += fs[s] * s3.ring.dims()[s];
  REQUIRE(total == 36);
}

TEST_CASE("S3 blocks agree with the Verlinde sum", "[blocks]") {
  GVStructure gv = gv_structure(fx::untwisted(fx::s3()));
  REQUIRE(gv.ring.engine() == FusionEngine::characters);
  REQUIRE(oracle::double_dims(fx::s3()).size() == 8);
  auto table = block_table(gv, 5);
  REQUIRE(table[2] == 116);
  for (int g = 0; g <= 5; ++g) REQUIRE(Rational(table[static_cast<std::size_t>(g)]) == oracle::verlinde(fx::s3(), g));
}

TEST_CASE("fusion ring blocks agree with brute-force hom spaces", "[blocks]") {
  std::vector<PointedCategory> all;
  for (int n : {2, 3})
    for (const auto& c : fx::all_d(FiniteGroup::cyclic(n))) all.push_back(c);
  all.push_back(fx::cyclic(2, 1));
  all.push_back(fx::cyclic(2, 1, 1));
  for (const auto& c : all) {
    GVStructure gv = gv_structure(c);
    for (int g = 0; g <= 2; ++g) {
      CAPTURE(fx::describe(c), g);
      REQUIRE(block_dim(gv, g) == static_cast<long>(oracle::brute_block_dim(c, g)));
    }
  }
}

TEST_CASE("explicit and character engines agree", "[blocks]") {
  std::vector<PointedCategory> all;
  for (int n : {2, 3, 4})
    for (const auto& c : fx::all_d(FiniteGroup::cyclic(n))) all.push_back(c);
  for (const auto& c : fx::all_d(fx::z2xz2())) all.push_back(c);
  for (const auto& c : all) {
    GVStructure a = gv_structure(c);
    GVStructure b = a;
    b.ring = fusion_ring(b.simples, FusionEngine::characters);
    REQUIRE(a.ring.engine() == FusionEngine::explicit_matrices);
    for (std::size_t s = 0; s < a.ring.rank(); ++s) {
      REQUIRE(a.ring.dual(s) == b.ring.dual(s));
      for (std::size_t t = 0; t < a.ring.rank(); ++t)
        for (std::size_t u = 0; u < a.ring.rank(); ++u) REQUIRE(a.ring.N(s, t, u) == b.ring.N(s, t, u));
    }
    REQUIRE(block_table(a, 4) == block_table(b, 4));
  }
}

TEST_CASE("fusion ring axioms", "[blocks]") {
  for (const auto& c : {fx::untwisted(fx::s3()), fx::cyclic(2, 1, 1), fx::cyclic(3, 1)}) {
    FusionRing r = gv_structure(c).ring;
    REQUIRE(r.check_axioms().empty());
    for (std::size_t s = 0; s < r.rank(); ++s) REQUIRE(r.N(s, r.dual(s), r.unit()) == 1);
  }
  // dim is a ring homomorphism
  FusionRing r = gv_structure(fx::untwisted(fx::s3())).ring;
  for (std::size_t s = 0; s < r.rank(); ++s)
    for (std::size_t t = 0; t < r.rank(); ++t) {
      int total = 0;
      for (std::size_t u = 0; u < r.rank(); ++u) total += r.N(s, t, u) * r.dims()[u];
      REQUIRE(total == r.dims()[s] * r.dims()[t]);
    }
}

TEST_CASE("genus bound", "[blocks]") {
  GVStructure gv = gv_structure(fx::cyclic(2));
  try {
    block_dim(gv, 10, 5);
    FAIL("no error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::cap_exceeded);
  }
  REQUIRE_THROWS_AS(block_table(gv, -1), Error);
  REQUIRE(block_dim(gv, 64) > 0);
}
