#pragma once
// Grothendieck-Verdier structure on the center: dualizing object K = (I, d^2),
// duality D(V) = V^v (x) K, the pivotal structure xi, ribbon and sphericity checks.

#include <optional>
#include <string>
#include <vector>

#include "rgv/center.hpp"
#include "rgv/error.hpp"
#include "rgv/fusion.hpp"
#include "rgv/pointed.hpp"

namespace rgv {

inline std::vector<RootOfUnity> kappa_values(const PointedCategory& c, int power = 1) {
  std::vector<RootOfUnity> k;
  for (int h = 0; h < c.group().order(); ++h) k.push_back(c.kappa(h).pow(power));
  return k;
}

/// K: the unit with half braiding h -> d(h)^2.
inline CenterObject dualizing_object(const PointedCategory& c) {
  return line_object(c, c.group().identity(), kappa_values(c), "K");
}

/// K^-1, half braiding d(h)^-2.
inline CenterObject dualizing_inverse(const PointedCategory& c) {
  return line_object(c, c.group().identity(), kappa_values(c, -1), "K^-1");
}

/// D(V): the rigid dual with its half braiding multiplied by d(h)^2.
inline CenterObject gv_dual(const CenterObject& v) {
  const PointedCategory& c = v.category();
  CenterObject r = rigid_dual(v);
  for (int g : r.support())
    for (int h = 0; h < c.group().order(); ++h) r.sigma_mut(g, h) = r.sigma(g, h).scaled(c.kappa(h));
  r.set_label(v.label().empty() ? "" : "D" + v.label());
  return r;
}

inline GradedCharacter gv_dual(const PointedCategory& c, const GradedCharacter& chi) {
  return twisted_dual(chi, kappa_values(c));
}

/// xi on an invertible object supported at grade g: the half braiding of K at g
/// followed by the pivotal scalar, kappa(g) omega_g.
inline RootOfUnity gv_pivot_scalar(const PointedCategory& c, int g) { return c.kappa(g) * c.pivotal_scalar(g); }

inline RootOfUnity gv_pivot(const CenterObject& s) {
  if (s.total_dim() != 1) throw Error(ErrorCode::precondition, "gv_pivot needs an invertible object", {{"object", s.label()}});
  return gv_pivot_scalar(s.category(), s.support().front());
}

/// Structure factor of D^2 on invertibles: xi_{gh} = xi_g xi_h psi(g,h).
inline RootOfUnity gv_pivot_factor(const PointedCategory& c, int g, int h) { return c.double_dual_factor(g, h); }

struct GVStructure {
  PointedCategory category;
  CenterObject dualizing;
  SimplesList simples;
  FusionRing ring;
  std::vector<Cyclotomic> theta;
  std::vector<std::size_t> dual_of;        ///< D(s)
  std::vector<std::optional<RootOfUnity>> pivot;  ///< xi_s on invertible simples
};

inline std::size_t identify_gv_dual(const SimplesList& list, std::size_t s) {
  const auto& item = list[s];
  if (item.object) return identify_simple(list, gv_dual(*item.object));
  return detail::find_character(list, gv_dual(list.category, *item.character));
}

inline GVStructure gv_structure(const PointedCategory& c) {
  GVStructure gv{c, dualizing_object(c), simples(c), {}, {}, {}, {}};
  gv.ring = fusion_ring(gv.simples);
  gv.theta = simple_thetas(gv.simples);
  for (std::size_t s = 0; s < gv.simples.size(); ++s) {
    gv.dual_of.push_back(identify_gv_dual(gv.simples, s));
    const auto& item = gv.simples[s];
    if (item.invertible() && item.object)
      gv.pivot.push_back(gv_pivot(*item.object));
    else
      gv.pivot.push_back(std::nullopt);
  }
  return gv;
}

struct RibbonEntry {
  std::string label;
  Cyclotomic theta, theta_of_dual;
  bool ok = false;
};

struct RibbonReport {
  bool ok = true;
  std::vector<RibbonEntry> entries;

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries)
      rows.push_back({{"label", e.label},
                      {"theta", display(e.theta)},
                      {"theta_of_dual", display(e.theta_of_dual)},
                      {"ribbon_ok", e.ok}});
    return {{"ok", ok}, {"simples", rows}};
  }
};

/// theta_{D s} = theta_s for every simple, with theta_{D s} computed on the dual
/// object itself (matrices or character), not by lookup.
inline RibbonReport verify_ribbon(const GVStructure& gv) {
  RibbonReport r;
  for (std::size_t s = 0; s < gv.simples.size(); ++s) {
    const auto& item = gv.simples[s];
    RibbonEntry e;
    e.label = item.label;
    e.theta = gv.theta[s];
    e.theta_of_dual = item.object ? balancing_scalar(gv_dual(*item.object))
                                  : character_theta(gv.category, gv_dual(gv.category, *item.character));
    e.ok = e.theta == e.theta_of_dual;
    r.ok = r.ok && e.ok;
    r.entries.push_back(std::move(e));
  }
  return r;
}

/// Same check with the rigid dual in place of D.
inline bool rigid_ribbon(const SimplesList& list, const std::vector<Cyclotomic>& theta) {
  const std::vector<RootOfUnity> none(static_cast<std::size_t>(list.category.group().order()));
  for (std::size_t s = 0; s < list.size(); ++s) {
    const auto& item = list[s];
    Cyclotomic t = item.object ? balancing_scalar(rigid_dual(*item.object))
                               : character_theta(list.category, twisted_dual(*item.character, none));
    if (t != theta[s]) return false;
  }
  return true;
}

struct SphericityReport {
  bool dualizing_is_unit = false;     ///< (i) hom(K, I) is one-dimensional
  bool base_spherical = false;        ///< (ii)
  bool gv_dual_is_rigid = false;      ///< (iii)
  bool rigid_ribbon_nondegenerate = false;  ///< (iv)

  bool consistent() const {
    return dualizing_is_unit == base_spherical && base_spherical == gv_dual_is_rigid &&
           gv_dual_is_rigid == rigid_ribbon_nondegenerate;
  }
  bool spherical() const { return consistent() && dualizing_is_unit; }

  nlohmann::json to_json() const {
    return {{"dualizing_is_unit", dualizing_is_unit},
            {"base_spherical", base_spherical},
            {"gv_dual_is_rigid_dual", gv_dual_is_rigid},
            {"rigid_ribbon_and_nondegenerate", rigid_ribbon_nondegenerate},
            {"consistent", consistent()}};
  }
};

/// The four equivalent sphericity conditions, evaluated independently. Throws
/// Error(sphericity_disagreement) if they do not agree.
inline SphericityReport sphericity_report(const GVStructure& gv) {
  const PointedCategory& c = gv.category;
  SphericityReport r;
  r.dualizing_is_unit = hom_dim(gv.dualizing, unit_object(c)) == 1;
  r.base_spherical = c.lambda().is_trivial() ? base_sphericity(c) : dimensions_agree(c);
  r.gv_dual_is_rigid = true;
  for (std::size_t s = 0; s < gv.simples.size(); ++s)
    r.gv_dual_is_rigid = r.gv_dual_is_rigid && gv.dual_of[s] == gv.ring.dual(s);
  bool nondegenerate = true;
  auto tr = transparency(gv.simples, gv.ring, gv.theta);
  for (std::size_t s = 0; s < gv.simples.size(); ++s) {
    if (s == gv.ring.unit()) continue;
    bool all = true;
    for (std::size_t t = 0; t < gv.simples.size() && all; ++t) all = tr[s][t];
    if (all) nondegenerate = false;
  }
  r.rigid_ribbon_nondegenerate = nondegenerate && rigid_ribbon(gv.simples, gv.theta);
  if (!r.consistent())
    throw Error(ErrorCode::sphericity_disagreement, "sphericity conditions disagree", r.to_json());
  return r;
}

inline SphericityReport sphericity_report(const PointedCategory& c) { return sphericity_report(gv_structure(c)); }

}  // namespace rgv
