#pragma once
// Mueger centers, Picard groups of the balanced Mueger center, candidate ribbon
// GV extensions, and the groups of (cyclic) monoidal automorphisms of the identity.

#include <string>
#include <vector>

#include "rgv/error.hpp"
#include "rgv/fusion.hpp"
#include "rgv/groups.hpp"
#include "rgv/gvduality.hpp"

namespace rgv {

/// What the classification needs from a balanced braided fusion category.
struct BalancedFusionData {
  std::string name;
  bool is_center = false;
  FusionRing ring;
  std::vector<Cyclotomic> theta;
  std::vector<std::vector<bool>> transparent;
  std::vector<std::size_t> gv_dual;

  std::size_t rank() const { return ring.rank(); }
  bool invertible(std::size_t s) const { return ring.dims()[s] == 1; }
};

inline BalancedFusionData balanced_data(const GVStructure& gv) {
  BalancedFusionData b;
  b.name = "center";
  b.is_center = true;
  b.ring = gv.ring;
  b.theta = gv.theta;
  b.transparent = transparency(gv.simples, gv.ring, gv.theta);
  b.gv_dual = gv.dual_of;
  return b;
}

/// Vect_Z2 with trivial braiding and balancing and its rigid duality.
inline BalancedFusionData symmetric_vect_z2() {
  BalancedFusionData b;
  b.name = "symmetric Vect_Z2";
  FusionRing ring({"k0", "k1"}, {1, 1}, 0);
  for (std::size_t s = 0; s < 2; ++s) {
    ring.set_dual(s, s);
    for (std::size_t t = 0; t < 2; ++t) ring.set_N(s, t, s ^ t, 1);
  }
  b.ring = ring;
  b.theta = {Cyclotomic::one(1), Cyclotomic::one(1)};
  b.transparent.assign(2, std::vector<bool>(2, true));
  b.gv_dual = {0, 1};
  return b;
}

struct MugerData {
  std::vector<std::size_t> transparent;
  std::vector<std::size_t> balanced_transparent;
  std::vector<std::size_t> picard;              ///< invertible balanced transparent simples
  std::vector<std::vector<std::size_t>> picard_table;  ///< products, as positions in `picard`

  nlohmann::json to_json(const FusionRing& ring) const {
    auto names = [&](const std::vector<std::size_t>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (auto s : v) a.push_back(ring.labels()[s]);
      return a;
    };
    return {{"transparent", names(transparent)},
            {"balanced_transparent", names(balanced_transparent)},
            {"picard", names(picard)},
            {"picard_order", picard.size()}};
  }
};

namespace detail {

inline std::size_t product_simple(const FusionRing& ring, std::size_t s, std::size_t t) {
  auto p = ring.multiply(ring.basis(s), ring.basis(t));
  for (std::size_t u = 0; u < ring.rank(); ++u)
    if (p[u] == 1) return u;
  throw Error(ErrorCode::precondition, "product of invertible simples is not simple");
}

}  // namespace detail

inline MugerData muger_data(const BalancedFusionData& b) {
  MugerData m;
  for (std::size_t s = 0; s < b.rank(); ++s) {
    bool all = true;
    for (std::size_t t = 0; t < b.rank() && all; ++t) all = b.transparent[s][t];
    if (!all) continue;
    m.transparent.push_back(s);
    if (!b.theta[s].is_one()) continue;
    m.balanced_transparent.push_back(s);
    if (b.invertible(s)) m.picard.push_back(s);
  }
  for (auto s : m.picard) {
    std::vector<std::size_t> row;
    for (auto t : m.picard) {
      std::size_t u = detail::product_simple(b.ring, s, t);
      auto it = std::find(m.picard.begin(), m.picard.end(), u);
      if (it == m.picard.end()) throw Error(ErrorCode::internal, "Picard group is not closed");
      row.push_back(static_cast<std::size_t>(it - m.picard.begin()));
    }
    m.picard_table.push_back(std::move(row));
  }
  return m;
}

struct ExtensionReport {
  std::vector<std::size_t> candidates;  ///< twists L with theta_L = 1
  bool uniqueness_certified = false;
  std::size_t picard_order = 0;

  /// Upper bound on ribbon GV extensions through Pic ->> RibGV.
  std::size_t class_bound() const { return candidates.size(); }

  nlohmann::json to_json(const FusionRing& ring, const MugerData& m) const {
    nlohmann::json c = nlohmann::json::array();
    for (auto s : candidates) c.push_back(ring.labels()[s]);
    nlohmann::json j = m.to_json(ring);
    j["extension_candidates"] = c;
    j["extension_classes_upper_bound"] = candidates.size();
    j["uniqueness_certified"] = uniqueness_certified;
    j["balanced_braided_autoequivalences"] = "not computed";
    j["unit_automorphisms"] = "k^x";
    return j;
  }
};

/// Candidates D' = D (x) L for L in the Picard group with theta_L = 1; unique
/// when the Picard group is trivial.
inline ExtensionReport ribbon_gv_extensions(const BalancedFusionData& b, const MugerData& m) {
  ExtensionReport r;
  r.picard_order = m.picard.size();
  for (auto s : m.picard)
    if (b.theta[s].is_one()) r.candidates.push_back(s);
  r.uniqueness_certified = m.picard.size() == 1;
  return r;
}

inline ExtensionReport ribbon_gv_extensions(const BalancedFusionData& b) { return ribbon_gv_extensions(b, muger_data(b)); }

/// The group of simples (all invertible) as a group.
inline FiniteGroup simples_group(const BalancedFusionData& b) {
  for (std::size_t s = 0; s < b.rank(); ++s)
    if (!b.invertible(s))
      throw Error(ErrorCode::precondition, "monoidal automorphisms of the identity need invertible simples",
                  {{"simple", b.ring.labels()[s]}});
  std::vector<std::vector<int>> table(b.rank());
  for (std::size_t s = 0; s < b.rank(); ++s)
    for (std::size_t t = 0; t < b.rank(); ++t)
      table[s].push_back(static_cast<int>(detail::product_simple(b.ring, s, t)));
  return FiniteGroup::from_cayley(std::move(table), b.ring.labels(), std::max<int>(static_cast<int>(b.rank()), kDefaultGroupOrderCap));
}

/// Monoidal automorphisms of the identity functor: characters of the group of simples.
inline std::vector<GroupHom> aut_tensor_id(const BalancedFusionData& b) { return character_group(simples_group(b)); }

/// Those commuting with the duality: chi(D s) = chi(s) for all simples s.
inline std::vector<GroupHom> caut_tensor_id(const BalancedFusionData& b) {
  std::vector<GroupHom> out;
  for (auto& chi : aut_tensor_id(b)) {
    bool ok = true;
    for (std::size_t s = 0; s < b.rank() && ok; ++s) ok = chi(static_cast<int>(b.gv_dual[s])) == chi(static_cast<int>(s));
    if (ok) out.push_back(chi);
  }
  return out;
}

struct Classification {
  MugerData muger;
  ExtensionReport extensions;
  std::optional<std::size_t> aut_order, caut_order;

  nlohmann::json to_json(const FusionRing& ring) const {
    nlohmann::json j = extensions.to_json(ring, muger);
    if (aut_order) {
      j["aut_tensor_id_order"] = *aut_order;
      j["caut_tensor_id_order"] = *caut_order;
    } else {
      j["aut_tensor_id_order"] = nullptr;
      j["caut_tensor_id_order"] = nullptr;
    }
    return j;
  }
};

inline Classification classify(const BalancedFusionData& b) {
  Classification c;
  c.muger = muger_data(b);
  c.extensions = ribbon_gv_extensions(b, c.muger);
  bool all_invertible = true;
  for (std::size_t s = 0; s < b.rank(); ++s) all_invertible = all_invertible && b.invertible(s);
  if (all_invertible) {
    c.aut_order = aut_tensor_id(b).size();
    c.caut_order = caut_tensor_id(b).size();
  }
  return c;
}

}  // namespace rgv
