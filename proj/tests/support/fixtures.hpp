#pragma once
// Small categories used across the tests.

#include <string>
#include <vector>

#include "rgv/rgv.hpp"

namespace fx {

using namespace rgv;

inline FiniteGroup s3() { return FiniteGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}}); }

inline FiniteGroup z2xz2() { return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)); }

/// Z_n with lambda_q and d(1) = zeta_n^k.
inline PointedCategory cyclic(int n, int q = 0, int k = 0) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  return PointedCategory(g, cyclic_cocycle_on(g, q), n == 1 ? GroupHom::trivial(g) : GroupHom::from_generator_values(g, {RootOfUnity(n, k)}));
}

inline PointedCategory untwisted(const FiniteGroup& g) {
  return PointedCategory(g, ThreeCocycle::trivial(g), GroupHom::trivial(g));
}

/// Every homomorphism d on an abelian group, trivial lambda.
inline std::vector<PointedCategory> all_d(const FiniteGroup& g) {
  std::vector<PointedCategory> out;
  for (const auto& chi : character_group(g)) out.emplace_back(g, ThreeCocycle::trivial(g), chi);
  return out;
}

inline std::string describe(const PointedCategory& c) {
  std::string s = "|G|=" + std::to_string(c.group().order()) + " d=";
  for (int g : c.group().generators()) s += c.d()(g).str() + " ";
  s += c.lambda().is_trivial() ? "untwisted" : "twisted";
  return s;
}

}  // namespace fx
