#include <catch_amalgamated.hpp>

#include "rgv/rgv.hpp"
#include "support/fixtures.hpp"

using namespace rgv;

namespace {

std::vector<PointedCategory> inputs() {
  std::vector<PointedCategory> v;
  for (int n : {2, 3, 4})
    for (int k = 0; k < n; ++k) v.push_back(fx::cyclic(n, 0, k));
  for (const auto& c : fx::all_d(fx::z2xz2())) v.push_back(c);
  for (int q = 1; q < 3; ++q)
    for (int k = 0; k < 3; ++k) v.push_back(fx::cyclic(3, q, k));
  v.push_back(fx::cyclic(2, 1));
  v.push_back(fx::cyclic(2, 1, 1));
  v.push_back(fx::cyclic(4, 2, 1));
  return v;
}

bool d_squared_trivial(const PointedCategory& c) {
  for (int g = 0; g < c.group().order(); ++g)
    if (!c.d()(g).pow(2).is_one()) return false;
  return true;
}

}  // namespace

TEST_CASE("dualizing object", "[gvduality]") {
  PointedCategory triv = fx::cyclic(3);
  CenterObject k = dualizing_object(triv);
  REQUIRE(hom_dim(k, unit_object(triv)) == 1);
  for (int h = 0; h < 3; ++h) REQUIRE(k.sigma(0, h).is_identity());

  PointedCategory z3 = fx::cyclic(3, 0, 1);
  CenterObject k3 = dualizing_object(z3);
  REQUIRE(*k3.sigma(0, 1).as_scalar() == Cyclotomic::from_root(z3.conductor(), RootOfUnity(3, 2)));
  REQUIRE(hom_dim(k3, unit_object(z3)) == 0);

  PointedCategory z2 = fx::cyclic(2, 1);
  REQUIRE(hom_dim(dualizing_object(z2), unit_object(z2)) == 1);

  for (const auto& c : inputs()) {
    REQUIRE_FALSE(check_half_braiding(dualizing_object(c)));
    REQUIRE(hom_dim(tensor(dualizing_object(c), dualizing_inverse(c)), unit_object(c)) == 1);
  }
}

TEST_CASE("D(I) is K and D(V) is V^v (x) K", "[gvduality]") {
  for (const auto& c : inputs()) {
    CAPTURE(fx::describe(c));
    REQUIRE(hom_dim(gv_dual(unit_object(c)), dualizing_object(c)) == 1);
    for (const auto& s : simples(c).items) {
      CenterObject d = gv_dual(*s.object);
      REQUIRE_FALSE(check_half_braiding(d));
      REQUIRE(hom_dim(d, tensor(rigid_dual(*s.object), dualizing_object(c))) == 1);
      REQUIRE(hom_dim(gv_dual(d), *s.object) == 1);
    }
  }
}

TEST_CASE("abelian rule D(g,chi) = (g^-1, chi^-1 d^2)", "[gvduality]") {
  for (const auto& c : fx::all_d(FiniteGroup::cyclic(4))) {
    const FiniteGroup& G = c.group();
    auto list = simples(c);
    auto chars = character_group(G);
    GroupHom d2 = c.d().pow(2);
    for (std::size_t s = 0; s < list.size(); ++s) {
      std::size_t k = 0;
      while (!(chars[k] == chars[s % 4].pow(-1) * d2)) ++k;
      std::size_t expect = static_cast<std::size_t>(G.inv(static_cast<int>(s / 4))) * 4 + k;
      REQUIRE(identify_simple(list, gv_dual(*list[s].object)) == expect);
    }
  }
}

TEST_CASE("D on graded characters", "[gvduality]") {
  PointedCategory c = fx::untwisted(fx::s3());
  GVStructure gv = gv_structure(c);
  for (std::size_t s = 0; s < gv.simples.size(); ++s) {
    const auto& chi = *gv.simples[s].character;
    REQUIRE(gv_dual(c, gv_dual(c, chi)) == chi);
    REQUIRE(gv.dual_of[gv.dual_of[s]] == s);
    // d trivial: D is the rigid dual
    REQUIRE(gv.dual_of[s] == gv.ring.dual(s));
  }
}

TEST_CASE("ribbon property", "[gvduality]") {
  for (const auto& c : inputs()) {
    CAPTURE(fx::describe(c));
    auto r = verify_ribbon(gv_structure(c));
    REQUIRE(r.ok);
    for (const auto& e : r.entries) REQUIRE(e.theta == e.theta_of_dual);
  }
  REQUIRE(verify_ribbon(gv_structure(fx::untwisted(fx::s3()))).ok);
}

TEST_CASE("rigid ribbon fails without sphericity", "[gvduality]") {
  GVStructure gv = gv_structure(fx::cyclic(3, 0, 1));
  REQUIRE_FALSE(rigid_ribbon(gv.simples, gv.theta));
  GVStructure sp = gv_structure(fx::cyclic(2, 0, 1));
  REQUIRE(rigid_ribbon(sp.simples, sp.theta));
}

TEST_CASE("GV pivotal structure on invertibles", "[gvduality]") {
  for (const auto& c : inputs()) {
    const FiniteGroup& G = c.group();
    REQUIRE(gv_pivot_scalar(c, G.identity()).is_one());
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h)
        REQUIRE(gv_pivot_scalar(c, G.mul(g, h)) ==
                gv_pivot_scalar(c, g) * gv_pivot_scalar(c, h) * gv_pivot_factor(c, g, h));
  }
  GVStructure gv = gv_structure(fx::cyclic(3));
  for (const auto& p : gv.pivot) {
    REQUIRE(p);
    REQUIRE(p->is_one());
  }
  REQUIRE(gv_pivot(dualizing_object(fx::cyclic(3, 0, 1))).is_one());
  PointedCategory z3 = fx::cyclic(3, 0, 1);
  // xi at grade 1: d(1)^2 d(1) = d(1)^3 = 1
  REQUIRE(gv_pivot_scalar(z3, 1).is_one());
  PointedCategory z4 = fx::cyclic(4, 0, 1);
  REQUIRE(gv_pivot_scalar(z4, 1) == RootOfUnity(4, 3));
}

TEST_CASE("sphericity report", "[gvduality]") {
  auto r = sphericity_report(fx::cyclic(3, 0, 1));
  REQUIRE_FALSE(r.dualizing_is_unit);
  REQUIRE_FALSE(r.base_spherical);
  REQUIRE_FALSE(r.gv_dual_is_rigid);
  REQUIRE_FALSE(r.rigid_ribbon_nondegenerate);
  REQUIRE(r.consistent());

  for (const auto& c : {fx::cyclic(3), fx::cyclic(2, 0, 1), fx::untwisted(fx::s3()), fx::untwisted(fx::z2xz2())}) {
    auto s = sphericity_report(c);
    REQUIRE(s.spherical());
    REQUIRE(s.dualizing_is_unit);
    REQUIRE(s.base_spherical);
    REQUIRE(s.gv_dual_is_rigid);
    REQUIRE(s.rigid_ribbon_nondegenerate);
  }
  for (const auto& c : inputs()) {
    CAPTURE(fx::describe(c));
    auto s = sphericity_report(c);
    REQUIRE(s.consistent());
    REQUIRE(s.spherical() == d_squared_trivial(c));
  }
}

TEST_CASE("GV representability Hom(K, s t) = Hom(D s, t)", "[gvduality]") {
  for (const auto& c : inputs()) {
    CAPTURE(fx::describe(c));
    auto list = simples(c);
    CenterObject k = dualizing_object(c);
    for (const auto& s : list.items)
      for (const auto& t : list.items)
        REQUIRE(hom_dim(k, tensor(*s.object, *t.object)) == hom_dim(gv_dual(*s.object), *t.object));
  }
}
