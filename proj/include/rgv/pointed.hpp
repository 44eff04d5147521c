#pragma once
// Skeletal pivotal category Vect_G^{lambda,d}: simple objects k_g, associator
// lambda(g,g',g''), duals k_g^v = k_{g^-1}, pivotal structure from d.

#include <cstdint>
#include <memory>
#include <vector>

#include "rgv/cocycles.hpp"
#include "rgv/error.hpp"
#include "rgv/groups.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

class PointedCategory {
 public:
  PointedCategory() : PointedCategory(FiniteGroup::trivial(), ThreeCocycle::trivial(FiniteGroup::trivial()),
                                      GroupHom::trivial(FiniteGroup::trivial())) {}

  /// lambda is assumed verified; d must be defined on the same group.
  PointedCategory(FiniteGroup g, ThreeCocycle lambda, GroupHom d) {
    if (!(lambda.group() == g) || !(d.source() == g))
      throw Error(ErrorCode::precondition, "lambda and d must live on the same group");
    auto data = std::make_shared<Data>();
    data->group = std::move(g);
    data->lambda = std::move(lambda);
    data->d = std::move(d);
    std::int64_t n = lcm64(lcm64(data->group.exponent(), data->lambda.multiplicative_order()),
                           data->d.value_order());
    // Twisted line solutions need n-th roots of cocycle products.
    if (!data->lambda.is_trivial()) n *= data->group.order();
    data->conductor = static_cast<int>(n);
    d_ = std::move(data);
  }

  const FiniteGroup& group() const { return d_->group; }
  const ThreeCocycle& lambda() const { return d_->lambda; }
  const GroupHom& d() const { return d_->d; }
  /// Every scalar of the session lives in Q(zeta_conductor).
  int conductor() const { return d_->conductor; }

  RootOfUnity lam(int a, int b, int c) const { return d_->lambda(a, b, c); }

  /// lambda(g, g^-1, g)
  RootOfUnity loop(int g) const { return lam(g, group().inv(g), g); }

  /// omega_{k_g} = d(g) lambda(g, g^-1, g).
  RootOfUnity pivotal_scalar(int g) const { return d()(g) * loop(g); }

  /// Coevaluation I -> k_g (x) k_{g^-1}; evaluation k_{g^-1} (x) k_g -> I is 1.
  RootOfUnity coev_scalar(int g) const { return loop(g).inverse(); }

  /// Structure of (k_g (x) k_h)^v = k_h^v (x) k_g^v in the skeleton.
  RootOfUnity dual_tensorator(int g, int h) const {
    const FiniteGroup& G = group();
    return lam(G.inv(h), G.inv(g), G.mul(g, h)) / lam(G.inv(g), g, h);
  }

  /// Monoidal structure of the double dual, (k_g k_h)^vv vs k_g^vv k_h^vv.
  RootOfUnity double_dual_factor(int g, int h) const {
    const FiniteGroup& G = group();
    return dual_tensorator(G.inv(h), G.inv(g)) / dual_tensorator(g, h);
  }

  /// Left and right categorical dimensions of k_g.
  RootOfUnity left_dim(int g) const { return d()(g).inverse(); }
  RootOfUnity right_dim(int g) const { return d()(g); }

  /// d(g)^2; the half braiding of the dualizing object on the unit.
  RootOfUnity kappa(int g) const { return d()(g).pow(2); }

  bool is_abelian() const { return group().is_abelian(); }

  friend bool operator==(const PointedCategory& a, const PointedCategory& b) {
    return a.d_ == b.d_ || (a.group() == b.group() && a.lambda() == b.lambda() && a.d() == b.d());
  }

 private:
  struct Data {
    FiniteGroup group;
    ThreeCocycle lambda;
    GroupHom d;
    int conductor = 1;
  };
  std::shared_ptr<const Data> d_;
};

inline RootOfUnity pivotal_scalar(const PointedCategory& c, int g) { return c.pivotal_scalar(g); }

struct PivotalityReport {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  ///< pairs with omega_{gh} != psi omega_g omega_h
  std::vector<int> zigzag_violations;

  nlohmann::json to_json(const FiniteGroup& g) const {
    nlohmann::json v = nlohmann::json::array();
    for (auto [a, b] : violations) v.push_back({g.name(a), g.name(b)});
    nlohmann::json z = nlohmann::json::array();
    for (int a : zigzag_violations) z.push_back(g.name(a));
    return {{"ok", ok}, {"violations", v}, {"zigzag_violations", z}};
  }
};

/// Checks omega_{gh} = psi(g,h) omega_g omega_h for all pairs, plus both zigzag
/// identities for the chosen evaluation/coevaluation scalars.
inline PivotalityReport verify_pivotality(const PointedCategory& c) {
  PivotalityReport r;
  const FiniteGroup& G = c.group();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (c.pivotal_scalar(G.mul(g, h)) != c.double_dual_factor(g, h) * c.pivotal_scalar(g) * c.pivotal_scalar(h))
        r.violations.emplace_back(g, h);
  for (int g = 0; g < G.order(); ++g) {
    const int gi = G.inv(g);
    // (id (x) ev) a (coev (x) id) on k_g and (ev (x) id) a^-1 (id (x) coev) on k_{g^-1}.
    bool first = (c.coev_scalar(g) * c.lam(g, gi, g)).is_one();
    bool second = (c.coev_scalar(g) / c.lam(gi, g, gi)).is_one();
    if (!first || !second) r.zigzag_violations.push_back(g);
  }
  r.ok = r.violations.empty() && r.zigzag_violations.empty();
  return r;
}

/// d(g)^2 = 1 for all g. Only meaningful for trivial lambda.
inline bool base_sphericity(const PointedCategory& c) {
  if (!c.lambda().is_trivial())
    throw Error(ErrorCode::precondition,
                "base sphericity is only defined here for trivial lambda; use the center-level report");
  for (int g = 0; g < c.group().order(); ++g)
    if (!c.kappa(g).is_one()) return false;
  return true;
}

/// Left dimension equals right dimension for every k_g (any lambda).
inline bool dimensions_agree(const PointedCategory& c) {
  for (int g = 0; g < c.group().order(); ++g)
    if (c.left_dim(g) != c.right_dim(g)) return false;
  return true;
}

}  // namespace rgv
