#pragma once
// Conformal block dimensions from the fusion ring: dim B_g is the multiplicity
// of K in F^g, with F = K (x) sum_s s^v (x) s.

#include <string>
#include <vector>

#include "rgv/error.hpp"
#include "rgv/fusion.hpp"
#include "rgv/gvduality.hpp"

namespace rgv {

inline constexpr int kDefaultGenusBound = 64;

/// Position of K in the simples list.
inline std::size_t dualizing_index(const GVStructure& gv) {
  const auto& list = gv.simples;
  if (list.all_explicit()) return identify_simple(list, gv.dualizing);
  return detail::find_character(list, detail::line_character(gv.category, gv.category.group().identity(),
                                                             kappa_values(gv.category)));
}

/// [K] * sum_s [s^v][s].
inline FusionRing::Element coend_class(const GVStructure& gv) {
  const FusionRing& ring = gv.ring;
  FusionRing::Element sum(ring.rank(), 0);
  for (std::size_t s = 0; s < ring.rank(); ++s) {
    auto p = ring.multiply(ring.basis(ring.dual(s)), ring.basis(s));
    for (std::size_t u = 0; u < ring.rank(); ++u) sum[u] += p[u];
  }
  return ring.multiply(ring.basis(dualizing_index(gv)), sum);
}

inline Integer block_dim(const GVStructure& gv, int genus, int genus_bound = kDefaultGenusBound) {
  if (genus < 0) throw Error(ErrorCode::precondition, "genus must be non-negative", {{"genus", genus}});
  if (genus > genus_bound)
    throw Error(ErrorCode::cap_exceeded, "genus exceeds the configured bound", {{"genus", genus}, {"bound", genus_bound}});
  auto f = coend_class(gv);
  return gv.ring.power(f, genus)[dualizing_index(gv)];
}

/// dim B_0 .. dim B_max_genus, sharing the powers of [F].
inline std::vector<Integer> block_table(const GVStructure& gv, int max_genus, int genus_bound = kDefaultGenusBound) {
  if (max_genus < 0) throw Error(ErrorCode::precondition, "genus must be non-negative", {{"genus", max_genus}});
  if (max_genus > genus_bound)
    throw Error(ErrorCode::cap_exceeded, "genus exceeds the configured bound",
                {{"genus", max_genus}, {"bound", genus_bound}});
  const std::size_t k = dualizing_index(gv);
  auto f = coend_class(gv);
  std::vector<Integer> out;
  FusionRing::Element p = gv.ring.basis(gv.ring.unit());
  for (int g = 0; g <= max_genus; ++g) {
    out.push_back(p[k]);
    p = gv.ring.multiply(p, f);
  }
  return out;
}

/// |G|^{2g} if d^{2-2g} is trivial, else 0 (abelian G, trivial lambda).
inline Integer abelian_closed_form(const PointedCategory& c, int genus) {
  if (!c.is_abelian() || !c.lambda().is_trivial())
    throw Error(ErrorCode::precondition, "closed form needs an abelian group and trivial lambda");
  if (genus < 0) throw Error(ErrorCode::precondition, "genus must be non-negative", {{"genus", genus}});
  const std::int64_t euler = 2 - 2 * static_cast<std::int64_t>(genus);
  for (int h = 0; h < c.group().order(); ++h)
    if (!c.d()(h).pow(euler).is_one()) return 0;
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(c.group().order()), 2UL * static_cast<unsigned long>(genus));
  return r;
}

}  // namespace rgv
