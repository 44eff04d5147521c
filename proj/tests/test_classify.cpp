#include <catch_amalgamated.hpp>

#include "rgv/rgv.hpp"
#include "support/fixtures.hpp"

using namespace rgv;

TEST_CASE("transparent simples of centers", "[classify]") {
  for (const auto& c : {fx::cyclic(3, 0, 1), fx::cyclic(3), fx::cyclic(2, 0, 1), fx::untwisted(fx::s3()),
                        fx::cyclic(2, 1), fx::cyclic(4, 1, 1)}) {
    CAPTURE(fx::describe(c));
    GVStructure gv = gv_structure(c);
    BalancedFusionData b = balanced_data(gv);
    MugerData m = muger_data(b);
    REQUIRE(m.transparent == std::vector<std::size_t>{gv.ring.unit()});
    REQUIRE(m.balanced_transparent == std::vector<std::size_t>{gv.ring.unit()});
    REQUIRE(m.picard.size() == 1);
  }
}

TEST_CASE("symmetric Vect_Z2 control", "[classify]") {
  BalancedFusionData b = symmetric_vect_z2();
  MugerData m = muger_data(b);
  REQUIRE(m.transparent == std::vector<std::size_t>{0, 1});
  REQUIRE(m.balanced_transparent == std::vector<std::size_t>{0, 1});
  REQUIRE(m.picard.size() == 2);
  REQUIRE(m.picard_table == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  ExtensionReport r = ribbon_gv_extensions(b);
  REQUIRE(r.candidates == std::vector<std::size_t>{0, 1});
  REQUIRE_FALSE(r.uniqueness_certified);
  REQUIRE(r.class_bound() == 2);
}

TEST_CASE("ribbon GV extensions are unique on centers", "[classify]") {
  std::vector<PointedCategory> all = {fx::untwisted(FiniteGroup::trivial()), fx::untwisted(fx::s3()), fx::cyclic(2, 1)};
  for (int n : {2, 3, 4})
    for (int k = 0; k < n; ++k) all.push_back(fx::cyclic(n, 0, k));
  for (const auto& c : all) {
    CAPTURE(fx::describe(c));
    ExtensionReport r = ribbon_gv_extensions(balanced_data(gv_structure(c)));
    REQUIRE(r.uniqueness_certified);
    REQUIRE(r.candidates.size() == 1);
  }
}

TEST_CASE("monoidal automorphisms of the identity", "[classify]") {
  REQUIRE(aut_tensor_id(balanced_data(gv_structure(fx::cyclic(2)))).size() == 4);
  REQUIRE(aut_tensor_id(balanced_data(gv_structure(fx::cyclic(3)))).size() == 9);
  REQUIRE(aut_tensor_id(balanced_data(gv_structure(fx::untwisted(FiniteGroup::trivial())))).size() == 1);
  REQUIRE(caut_tensor_id(balanced_data(gv_structure(fx::untwisted(FiniteGroup::trivial())))).size() == 1);
  REQUIRE(aut_tensor_id(balanced_data(gv_structure(fx::cyclic(2, 1)))).size() == 4);
  REQUIRE_THROWS_AS(aut_tensor_id(balanced_data(gv_structure(fx::untwisted(fx::s3())))), Error);
}

TEST_CASE("automorphisms compatible with the duality", "[classify]") {
  // d = zeta_3: D(g,chi) = (g^-1, chi^-1 d^2) leaves only the trivial character fixed
  REQUIRE(caut_tensor_id(balanced_data(gv_structure(fx::cyclic(3, 0, 1)))).size() == 1);
  // d trivial: chi compatible iff chi(g^-1,chi^-1) = chi(g,chi), i.e. chi^2 = 1 on Z3 x Z3
  REQUIRE(caut_tensor_id(balanced_data(gv_structure(fx::cyclic(3)))).size() == 1);
  // on Z2 every character is compatible
  REQUIRE(caut_tensor_id(balanced_data(gv_structure(fx::cyclic(2)))).size() == 4);
}

TEST_CASE("classification summary", "[classify]") {
  GVStructure gv = gv_structure(fx::cyclic(3, 0, 1));
  BalancedFusionData b = balanced_data(gv);
  Classification c = classify(b);
  REQUIRE(c.extensions.uniqueness_certified);
  REQUIRE(c.aut_order == 9u);
  REQUIRE(c.caut_order == 1u);
  nlohmann::json j = c.to_json(b.ring);
  REQUIRE(j["uniqueness_certified"] == true);
  REQUIRE(j["balanced_braided_autoequivalences"] == "not computed");

  BalancedFusionData s3 = balanced_data(gv_structure(fx::untwisted(fx::s3())));
  Classification cs = classify(s3);
  REQUIRE_FALSE(cs.aut_order.has_value());
  REQUIRE(cs.to_json(s3.ring)["aut_tensor_id_order"].is_null());
}
