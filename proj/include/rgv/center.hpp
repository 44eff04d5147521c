#pragma once
// Objects of the Drinfeld center of Vect_G^{lambda,d}: G-graded spaces V with
// half braidings sigma^g_{V,h}: V_g -> V_{h^-1 g h}.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgv/character_table.hpp"
#include "rgv/error.hpp"
#include "rgv/graded_character.hpp"
#include "rgv/groups.hpp"
#include "rgv/matrix.hpp"
#include "rgv/pointed.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

class CenterObject {
 public:
  using SigmaFn = std::function<CycMatrix(int g, int h)>;

  CenterObject() = default;

  /// Unchecked; sigma(g,h) is queried for every g with dims[g] > 0.
  CenterObject(PointedCategory cat, std::vector<int> dims, const SigmaFn& sigma, std::string label = {})
      : cat_(std::move(cat)), dims_(std::move(dims)), label_(std::move(label)) {
    const int n = cat_.group().order();
    if (static_cast<int>(dims_.size()) != n)
      throw Error(ErrorCode::precondition, "one graded dimension per group element expected");
    sigma_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
      if (dims_[static_cast<std::size_t>(g)] == 0) continue;
      for (int h = 0; h < n; ++h) sigma_[idx(g, h)] = sigma(g, h);
    }
  }

  const PointedCategory& category() const { return cat_; }
  const FiniteGroup& group() const { return cat_.group(); }
  int conductor() const { return cat_.conductor(); }
  const std::string& label() const { return label_; }
  CenterObject& set_label(std::string l) {
    label_ = std::move(l);
    return *this;
  }

  int dim(int g) const { return dims_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int s = 0;
    for (int x : dims_) s += x;
    return s;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int g = 0; g < static_cast<int>(dims_.size()); ++g)
      if (dims_[static_cast<std::size_t>(g)] > 0) s.push_back(g);
    return s;
  }

  /// sigma^g_{V,h}: V_g -> V_{h^-1 g h}; empty when V_g = 0.
  const CycMatrix& sigma(int g, int h) const { return sigma_[idx(g, h)]; }
  CycMatrix& sigma_mut(int g, int h) { return sigma_[idx(g, h)]; }

  nlohmann::json to_json() const {
    nlohmann::json dims = nlohmann::json::object();
    nlohmann::json sig = nlohmann::json::object();
    const FiniteGroup& G = group();
    for (int g : support()) {
      dims[G.name(g)] = dim(g);
      for (int h = 0; h < G.order(); ++h) {
        const CycMatrix& m = sigma(g, h);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rgv::to_json(m(i, j)));
          rows.push_back(row);
        }
        sig[G.name(g) + "," + G.name(h)] = rows;
      }
    }
    nlohmann::json j = {{"graded_dims", dims}, {"sigma", sig}};
    if (!label_.empty()) j["label"] = label_;
    return j;
  }

 private:
  std::size_t idx(int g, int h) const {
    return static_cast<std::size_t>(g) * dims_.size() + static_cast<std::size_t>(h);
  }

  PointedCategory cat_;
  std::vector<int> dims_;
  std::vector<CycMatrix> sigma_;
  std::string label_;
};

/// Grade-preserving family of blocks f_g: V_g -> W_g.
struct CenterMorphism {
  CenterObject source, target;
  std::vector<CycMatrix> blocks;  ///< per element; empty where either side vanishes

  const CycMatrix& block(int g) const { return blocks[static_cast<std::size_t>(g)]; }

  bool is_identity() const {
    for (int g : source.support())
      if (!block(g).is_identity()) return false;
    return true;
  }
  /// The scalar c if this is c * id on a nonzero object.
  std::optional<Cyclotomic> as_scalar() const {
    std::optional<Cyclotomic> c;
    for (int g : source.support()) {
      auto s = block(g).as_scalar();
      if (!s || (c && *c != *s)) return std::nullopt;
      c = s;
    }
    return c;
  }
};

// ---------------------------------------------------------------------------
// Half-braiding verification
// ---------------------------------------------------------------------------

/// lambda(h,h',g'')^-1 lambda(h,g',h') lambda(g,h,h')^-1 with g' = h^-1 g h, g'' = h'^-1 g' h'.
inline RootOfUnity half_braiding_factor(const PointedCategory& c, int g, int h, int h2) {
  const FiniteGroup& G = c.group();
  const int g1 = G.conj(g, h);
  const int g2 = G.conj(g1, h2);
  return c.lam(h, h2, g2).inverse() * c.lam(h, g1, h2) * c.lam(g, h, h2).inverse();
}

struct HalfBraidingViolation {
  std::string kind;  ///< shape | identity | relation
  std::vector<int> elements;

  nlohmann::json to_json(const FiniteGroup& G) const {
    nlohmann::json names = nlohmann::json::array();
    for (int x : elements) names.push_back(G.name(x));
    return {{"kind", kind}, {"elements", elements}, {"names", names}};
  }
};

inline std::optional<HalfBraidingViolation> check_half_braiding(const CenterObject& v) {
  const FiniteGroup& G = v.group();
  const int n = G.order(), e = G.identity();
  const auto supp = v.support();
  for (int g : supp)
    for (int h = 0; h < n; ++h) {
      const CycMatrix& s = v.sigma(g, h);
      const int g1 = G.conj(g, h);
      if (s.rows() != static_cast<std::size_t>(v.dim(g1)) || s.cols() != static_cast<std::size_t>(v.dim(g)) ||
          s.conductor() != v.conductor())
        return HalfBraidingViolation{"shape", {g, h}};
    }
  for (int g : supp)
    if (!v.sigma(g, e).is_identity()) return HalfBraidingViolation{"identity", {g}};
  for (int g : supp)
    for (int h = 0; h < n; ++h) {
      const int g1 = G.conj(g, h);
      const CycMatrix& first = v.sigma(g, h);
      for (int h2 = 0; h2 < n; ++h2) {
        CycMatrix rhs = (v.sigma(g1, h2) * first).scaled(half_braiding_factor(v.category(), g, h, h2));
        if (rhs != v.sigma(g, G.mul(h, h2))) return HalfBraidingViolation{"relation", {g, h, h2}};
      }
    }
  return std::nullopt;
}

/// Throws Error(half_braiding_violation) with the first violating datum.
inline const CenterObject& verify_half_braiding(const CenterObject& v) {
  if (auto bad = check_half_braiding(v)) {
    nlohmann::json detail = bad->to_json(v.group());
    if (!v.label().empty()) detail["object"] = v.label();
    throw Error(ErrorCode::half_braiding_violation, "half braiding relation fails", detail);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Basic objects
// ---------------------------------------------------------------------------

/// One-dimensional object at grade g (G needs g central) with scalars s[h].
inline CenterObject line_object(const PointedCategory& c, int g, const std::vector<RootOfUnity>& s,
                                std::string label = {}) {
  const int n = c.group().order();
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  dims[static_cast<std::size_t>(g)] = 1;
  const int N = c.conductor();
  return CenterObject(
      c, dims, [&](int, int h) { return CycMatrix::scalar(Cyclotomic::from_root(N, s[static_cast<std::size_t>(h)])); },
      std::move(label));
}

inline CenterObject unit_object(const PointedCategory& c) {
  return line_object(c, c.group().identity(),
                     std::vector<RootOfUnity>(static_cast<std::size_t>(c.group().order())), "I");
}

/// Unit with half braiding omega_h^2, i.e. the squared pivotal scalars.
inline CenterObject omega_squared_object(const PointedCategory& c) {
  std::vector<RootOfUnity> s;
  for (int h = 0; h < c.group().order(); ++h) s.push_back(c.pivotal_scalar(h).pow(2));
  return line_object(c, c.group().identity(), s, "omega^2");
}

// ---------------------------------------------------------------------------
// Monoidal structure
// ---------------------------------------------------------------------------

namespace detail {

// Blocks V_{g1} (x) W_{g1^-1 g} of (V (x) W)_g in g1 index order: g1 -> offset.
inline std::map<int, std::size_t> tensor_blocks(const CenterObject& v, const CenterObject& w, int g) {
  const FiniteGroup& G = v.group();
  std::map<int, std::size_t> off;
  std::size_t o = 0;
  for (int g1 = 0; g1 < G.order(); ++g1) {
    int g2 = G.mul(G.inv(g1), g);
    if (v.dim(g1) == 0 || w.dim(g2) == 0) continue;
    off[g1] = o;
    o += static_cast<std::size_t>(v.dim(g1) * w.dim(g2));
  }
  return off;
}

inline void put_block(CycMatrix& m, std::size_t r0, std::size_t c0, const CycMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) m(r0 + i, c0 + j) = b(i, j);
}

inline void same_category(const CenterObject& v, const CenterObject& w) {
  if (!(v.category() == w.category()))
    throw Error(ErrorCode::precondition, "objects live in different categories");
}

}  // namespace detail

inline CenterObject tensor(const CenterObject& v, const CenterObject& w) {
  detail::same_category(v, w);
  const PointedCategory& c = v.category();
  const FiniteGroup& G = c.group();
  const int n = G.order();
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  for (int g1 : v.support())
    for (int g2 : w.support()) dims[static_cast<std::size_t>(G.mul(g1, g2))] += v.dim(g1) * w.dim(g2);
  std::vector<std::map<int, std::size_t>> offsets;
  for (int g = 0; g < n; ++g) offsets.push_back(detail::tensor_blocks(v, w, g));
  auto sigma = [&](int g, int h) {
    const int gp = G.conj(g, h);
    CycMatrix m(static_cast<std::size_t>(dims[static_cast<std::size_t>(gp)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(g)]), c.conductor());
    for (auto [g1, off] : offsets[static_cast<std::size_t>(g)]) {
      const int g2 = G.mul(G.inv(g1), g);
      const int g1p = G.conj(g1, h), g2p = G.conj(g2, h);
      RootOfUnity f = c.lam(g1, g2, h) * c.lam(g1, h, g2p).inverse() * c.lam(h, g1p, g2p);
      CycMatrix b = kron(v.sigma(g1, h), w.sigma(g2, h)).scaled(f);
      detail::put_block(m, offsets[static_cast<std::size_t>(gp)].at(g1p), off, b);
    }
    return m;
  };
  std::string label;
  if (!v.label().empty() && !w.label().empty()) label = v.label() + "*" + w.label();
  return CenterObject(c, dims, sigma, label);
}

inline CenterObject tensor_power(const CenterObject& v, int k) {
  CenterObject r = unit_object(v.category());
  for (int i = 0; i < k; ++i) r = tensor(r, v);
  return r;
}

inline CenterObject direct_sum(const CenterObject& v, const CenterObject& w) {
  detail::same_category(v, w);
  const FiniteGroup& G = v.group();
  std::vector<int> dims(static_cast<std::size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) dims[static_cast<std::size_t>(g)] = v.dim(g) + w.dim(g);
  auto sigma = [&](int g, int h) {
    const int gp = G.conj(g, h);
    CycMatrix m(static_cast<std::size_t>(dims[static_cast<std::size_t>(gp)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(g)]), v.conductor());
    if (v.dim(g) > 0) detail::put_block(m, 0, 0, v.sigma(g, h));
    if (w.dim(g) > 0)
      detail::put_block(m, static_cast<std::size_t>(v.dim(gp)), static_cast<std::size_t>(v.dim(g)), w.sigma(g, h));
    return m;
  };
  std::string label;
  if (!v.label().empty() && !w.label().empty()) label = v.label() + "+" + w.label();
  return CenterObject(v.category(), dims, sigma, label);
}

/// Rigid dual: (V^v)_{g^-1} = (V_g)^*, with the inverse-transpose half braiding
/// corrected by the coevaluation and associator scalars of the skeleton.
inline CenterObject rigid_dual(const CenterObject& v) {
  const PointedCategory& c = v.category();
  const FiniteGroup& G = c.group();
  std::vector<int> dims(static_cast<std::size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) dims[static_cast<std::size_t>(G.inv(g))] = v.dim(g);
  auto sigma = [&](int gi, int h) {
    const int g = G.inv(gi);
    const int gp = G.conj(g, h);
    RootOfUnity f = c.coev_scalar(gp) * c.lam(G.mul(gi, h), gp, G.inv(gp)).inverse() * c.lam(gi, h, gp) *
                    c.lam(gi, g, h).inverse();
    return v.sigma(g, h).inverse().transpose().scaled(f);
  };
  return CenterObject(c, dims, sigma, v.label().empty() ? "" : v.label() + "^v");
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

inline CenterMorphism identity_morphism(const CenterObject& v) {
  CenterMorphism f{v, v, std::vector<CycMatrix>(static_cast<std::size_t>(v.group().order()))};
  for (int g : v.support())
    f.blocks[static_cast<std::size_t>(g)] = CycMatrix::identity(static_cast<std::size_t>(v.dim(g)), v.conductor());
  return f;
}

inline CenterMorphism compose(const CenterMorphism& after, const CenterMorphism& before) {
  CenterMorphism f{before.source, after.target, std::vector<CycMatrix>(before.blocks.size())};
  for (int g : before.source.support())
    if (after.target.dim(g) > 0) f.blocks[static_cast<std::size_t>(g)] = after.block(g) * before.block(g);
  return f;
}

/// f (x) f' on the tensor products of sources and targets.
inline CenterMorphism tensor(const CenterMorphism& f, const CenterMorphism& f2) {
  CenterObject s = tensor(f.source, f2.source), t = tensor(f.target, f2.target);
  const FiniteGroup& G = s.group();
  CenterMorphism r{s, t, std::vector<CycMatrix>(static_cast<std::size_t>(G.order()))};
  for (int g : s.support()) {
    if (t.dim(g) == 0) continue;
    CycMatrix m(static_cast<std::size_t>(t.dim(g)), static_cast<std::size_t>(s.dim(g)), s.conductor());
    auto so = detail::tensor_blocks(f.source, f2.source, g);
    auto to = detail::tensor_blocks(f.target, f2.target, g);
    for (auto [g1, off] : so) {
      auto it = to.find(g1);
      if (it == to.end()) continue;
      detail::put_block(m, it->second, off, kron(f.block(g1), f2.block(G.mul(G.inv(g1), g))));
    }
    r.blocks[static_cast<std::size_t>(g)] = std::move(m);
  }
  return r;
}

/// True iff sigma_{W,h} f_g = f_{g'} sigma_{V,h} for all g, h.
inline bool is_center_morphism(const CenterMorphism& f) {
  const FiniteGroup& G = f.source.group();
  for (int g : f.source.support())
    for (int h = 0; h < G.order(); ++h) {
      const int gp = G.conj(g, h);
      if (f.target.dim(gp) == 0) continue;
      CycMatrix lhs = f.target.dim(g) ? f.target.sigma(g, h) * f.block(g)
                                      : CycMatrix(static_cast<std::size_t>(f.target.dim(gp)),
                                                  static_cast<std::size_t>(f.source.dim(g)), f.source.conductor());
      CycMatrix rhs = f.block(gp) * f.source.sigma(g, h);
      if (lhs != rhs) return false;
    }
  return true;
}

/// c_{V,W}: v (x) w -> w (x) sigma^{g1}_{V,g2}(v) on V_{g1} (x) W_{g2}.
inline CenterMorphism braiding(const CenterObject& v, const CenterObject& w) {
  CenterObject s = tensor(v, w), t = tensor(w, v);
  const FiniteGroup& G = s.group();
  CenterMorphism r{s, t, std::vector<CycMatrix>(static_cast<std::size_t>(G.order()))};
  for (int g : s.support()) {
    CycMatrix m(static_cast<std::size_t>(t.dim(g)), static_cast<std::size_t>(s.dim(g)), s.conductor());
    auto so = detail::tensor_blocks(v, w, g);
    auto to = detail::tensor_blocks(w, v, g);
    for (auto [g1, off] : so) {
      const int g2 = G.mul(G.inv(g1), g);
      const CycMatrix& sv = v.sigma(g1, g2);
      const std::size_t dv = static_cast<std::size_t>(v.dim(g1)), dw = static_cast<std::size_t>(w.dim(g2));
      const std::size_t toff = to.at(g2);
      for (std::size_t iv = 0; iv < dv; ++iv)
        for (std::size_t iw = 0; iw < dw; ++iw)
          for (std::size_t jv = 0; jv < dv; ++jv) {
            const Cyclotomic& x = sv(jv, iv);
            if (!x.is_zero()) m(toff + iw * dv + jv, off + iv * dw + iw) = x;
          }
    }
    r.blocks[static_cast<std::size_t>(g)] = std::move(m);
  }
  return r;
}

/// c_{W,V} c_{V,W}.
inline CenterMorphism double_braiding(const CenterObject& v, const CenterObject& w) {
  return compose(braiding(w, v), braiding(v, w));
}

/// theta_V on V_g is d(g)^-1 sigma^g_{V,g}: the left-trace composite of the
/// self-braiding with the pivotal structure, after the associator scalars cancel.
inline CenterMorphism balancing(const CenterObject& v) {
  const PointedCategory& c = v.category();
  CenterMorphism f{v, v, std::vector<CycMatrix>(static_cast<std::size_t>(v.group().order()))};
  for (int g : v.support()) f.blocks[static_cast<std::size_t>(g)] = v.sigma(g, g).scaled(c.d()(g).inverse());
  return f;
}

/// Balancing scalar of an object whose balancing is scalar (e.g. a simple).
inline Cyclotomic balancing_scalar(const CenterObject& v) {
  auto s = balancing(v).as_scalar();
  if (!s) throw Error(ErrorCode::precondition, "balancing is not scalar on this object", {{"object", v.label()}});
  return *s;
}

// ---------------------------------------------------------------------------
// Hom spaces
// ---------------------------------------------------------------------------

/// dim Hom(V, W): nullity of the intertwining system over a generating set.
inline std::size_t hom_dim(const CenterObject& v, const CenterObject& w) {
  detail::same_category(v, w);
  const FiniteGroup& G = v.group();
  const int n = G.order();
  std::vector<std::size_t> var_off(static_cast<std::size_t>(n), 0);
  std::size_t vars = 0;
  for (int g = 0; g < n; ++g) {
    var_off[static_cast<std::size_t>(g)] = vars;
    vars += static_cast<std::size_t>(v.dim(g) * w.dim(g));
  }
  if (vars == 0) return 0;
  std::vector<int> gens = G.generators();
  std::size_t eqs = 0;
  for (int g = 0; g < n; ++g)
    if (v.dim(g) && w.dim(g)) eqs += gens.size() * static_cast<std::size_t>(v.dim(g) * w.dim(g));
  CycMatrix sys(eqs, vars, v.conductor());
  std::size_t row = 0;
  for (int g = 0; g < n; ++g) {
    const int dv = v.dim(g), dw = w.dim(g);
    if (!dv || !dw) continue;
    for (int h : gens) {
      const int gp = G.conj(g, h);
      const CycMatrix& sw = w.sigma(g, h);  // dw x dw
      const CycMatrix& sv = v.sigma(g, h);  // dv x dv
      // (sw f_g - f_{g'} sv)(i, j) = 0 for i < dw, j < dv; f_x(k, j) at var_off[x] + k*dv + j.
      for (int i = 0; i < dw; ++i)
        for (int j = 0; j < dv; ++j, ++row) {
          for (int k = 0; k < dw; ++k) {
            const Cyclotomic& x = sw(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
            if (!x.is_zero())
              sys(row, var_off[static_cast<std::size_t>(g)] + static_cast<std::size_t>(k * dv + j)) += x;
          }
          for (int k = 0; k < dv; ++k) {
            const Cyclotomic& x = sv(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
            if (!x.is_zero())
              sys(row, var_off[static_cast<std::size_t>(gp)] + static_cast<std::size_t>(i * dv + k)) -= x;
          }
        }
    }
  }
  return nullity(sys);
}

inline bool is_isomorphic_simple(const CenterObject& s, const CenterObject& t) {
  return s.dims() == t.dims() && hom_dim(s, t) == 1;
}

// ---------------------------------------------------------------------------
// Simple objects
// ---------------------------------------------------------------------------

struct SimpleObject {
  std::string label;
  int dim = 1;
  int grade = 0;                        ///< least element of the support class
  std::optional<CenterObject> object;   ///< explicit matrices when available
  std::optional<GradedCharacter> character;

  bool invertible() const { return dim == 1; }
  bool explicit_matrices() const { return object.has_value(); }
};

enum class SimplesFamily { abelian_untwisted, induced_untwisted, cyclic_twisted };

inline const char* to_string(SimplesFamily f) {
  switch (f) {
    case SimplesFamily::abelian_untwisted: return "abelian_untwisted";
    case SimplesFamily::induced_untwisted: return "induced_untwisted";
    case SimplesFamily::cyclic_twisted: return "cyclic_twisted";
  }
  return "unknown";
}

struct SimplesList {
  PointedCategory category;
  SimplesFamily family = SimplesFamily::abelian_untwisted;
  std::vector<SimpleObject> items;

  std::size_t size() const { return items.size(); }
  const SimpleObject& operator[](std::size_t i) const { return items[i]; }
  bool all_explicit() const {
    for (const auto& s : items)
      if (!s.object) return false;
    return true;
  }
  bool all_invertible() const {
    for (const auto& s : items)
      if (!s.invertible()) return false;
    return true;
  }
  bool has_characters() const { return !items.empty() && items.front().character.has_value(); }
};

inline SimplesFamily simples_family(const PointedCategory& c) {
  if (c.lambda().is_trivial()) return c.is_abelian() ? SimplesFamily::abelian_untwisted : SimplesFamily::induced_untwisted;
  if (c.group().is_cyclic()) return SimplesFamily::cyclic_twisted;
  throw Error(ErrorCode::unsupported_family,
              "simple objects are only enumerated for trivial lambda or cyclic groups",
              {{"order", c.group().order()}});
}

namespace detail {

inline GradedCharacter line_character(const PointedCategory& c, int g, const std::vector<RootOfUnity>& s) {
  const FiniteGroup& G = c.group();
  GradedCharacter chi(G, c.conductor());
  for (int h = 0; h < G.order(); ++h)
    if (G.commute(g, h)) chi.at(g, h) = Cyclotomic::from_root(c.conductor(), s[static_cast<std::size_t>(h)]);
  return chi;
}

inline SimplesList abelian_simples(const PointedCategory& c) {
  const FiniteGroup& G = c.group();
  SimplesList out{c, SimplesFamily::abelian_untwisted, {}};
  auto chars = character_group(G);
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t k = 0; k < chars.size(); ++k) {
      std::string label = "(" + G.name(g) + ",chi" + std::to_string(k) + ")";
      SimpleObject s;
      s.label = label;
      s.grade = g;
      s.object = line_object(c, g, chars[k].values(), label);
      s.character = line_character(c, g, chars[k].values());
      out.items.push_back(std::move(s));
    }
  return out;
}

inline SimplesList induced_simples(const PointedCategory& c) {
  const FiniteGroup& G = c.group();
  const int N = c.conductor();
  SimplesList out{c, SimplesFamily::induced_untwisted, {}};
  auto cc = conjugacy_classes(G);
  for (int g0 : cc.representatives) {
    Subgroup H = centralizer(G, g0);
    // Least-index right coset representatives H t.
    std::vector<int> reps;
    std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
    for (int t = 0; t < G.order(); ++t) {
      if (coset_of[static_cast<std::size_t>(t)] >= 0) continue;
      for (int k : H.inclusion) coset_of[static_cast<std::size_t>(G.mul(k, t))] = static_cast<int>(reps.size());
      reps.push_back(t);
    }
    // grade of b_i is t_i^-1 g0 t_i; each conjugate occurs once.
    std::vector<int> coset_of_grade(static_cast<std::size_t>(G.order()), -1);
    for (std::size_t i = 0; i < reps.size(); ++i)
      coset_of_grade[static_cast<std::size_t>(G.conj(g0, reps[i]))] = static_cast<int>(i);
    CharacterTable table = character_table(H.group);
    for (std::size_t k = 0; k < table.size(); ++k) {
      auto rho = [&](int ambient) {
        return table.value(k, H.index_of[static_cast<std::size_t>(ambient)]).embed(N);
      };
      SimpleObject s;
      s.label = "(" + G.name(g0) + ",rho" + std::to_string(k) + ")";
      s.grade = g0;
      s.dim = static_cast<int>(reps.size()) * table.degrees[k];
      GradedCharacter chi(G, N);
      for (int g : cc.classes[static_cast<std::size_t>(cc.class_of[static_cast<std::size_t>(g0)])]) {
        const int t = reps[static_cast<std::size_t>(coset_of_grade[static_cast<std::size_t>(g)])];
        for (int h = 0; h < G.order(); ++h)
          if (G.commute(g, h)) chi.at(g, h) = rho(G.mul(t, G.mul(h, G.inv(t))));
      }
      s.character = std::move(chi);
      if (table.degrees[k] == 1) {
        std::vector<int> dims(static_cast<std::size_t>(G.order()), 0);
        for (std::size_t i = 0; i < reps.size(); ++i) dims[static_cast<std::size_t>(G.conj(g0, reps[i]))] = 1;
        s.object = CenterObject(
            c, dims,
            [&](int g, int h) {
              const int ti = reps[static_cast<std::size_t>(coset_of_grade[static_cast<std::size_t>(g)])];
              const int tj = reps[static_cast<std::size_t>(coset_of_grade[static_cast<std::size_t>(G.conj(g, h))])];
              return CycMatrix::scalar(rho(G.mul(G.mul(ti, h), G.inv(tj))));
            },
            s.label);
      }
      out.items.push_back(std::move(s));
    }
  }
  return out;
}

// Lines on Z_n with nontrivial lambda: sigma^g at the generator x is an n-th
// root y of P^-1, P = prod_{k=1}^{n-1} fac(g, x^k, x); other values follow.
inline SimplesList cyclic_twisted_simples(const PointedCategory& c) {
  const FiniteGroup& G = c.group();
  const int n = G.order();
  const int x = least_generator(G);
  SimplesList out{c, SimplesFamily::cyclic_twisted, {}};
  std::vector<int> xp(static_cast<std::size_t>(n));
  for (int k = 0, y = G.identity(); k < n; ++k, y = G.mul(y, x)) xp[static_cast<std::size_t>(k)] = y;
  for (int g = 0; g < n; ++g) {
    RootOfUnity P;
    for (int k = 1; k < n; ++k) P *= half_braiding_factor(c, g, xp[static_cast<std::size_t>(k)], x);
    RootOfUnity Pinv = P.inverse();
    RootOfUnity y0(Pinv.order() * n, Pinv.exponent());
    for (int j = 0; j < n; ++j) {
      RootOfUnity y = y0 * RootOfUnity(n, j);
      std::vector<RootOfUnity> s(static_cast<std::size_t>(n));
      RootOfUnity cur;  // sigma at x^k
      for (int k = 0; k < n; ++k) {
        s[static_cast<std::size_t>(xp[static_cast<std::size_t>(k)])] = cur;
        cur = half_braiding_factor(c, g, xp[static_cast<std::size_t>(k)], x) * y * cur;
      }
      SimpleObject so;
      so.label = "(" + G.name(g) + ",y" + std::to_string(j) + ")";
      so.grade = g;
      so.object = line_object(c, g, s, so.label);
      out.items.push_back(std::move(so));
    }
  }
  return out;
}

}  // namespace detail

/// Complete irredundant list of simple objects, in a fixed order.
inline SimplesList simples(const PointedCategory& c) {
  switch (simples_family(c)) {
    case SimplesFamily::abelian_untwisted: return detail::abelian_simples(c);
    case SimplesFamily::induced_untwisted: return detail::induced_simples(c);
    case SimplesFamily::cyclic_twisted: return detail::cyclic_twisted_simples(c);
  }
  throw Error(ErrorCode::internal, "unreachable");
}

/// Index of the simple isomorphic to a simple object v.
inline std::size_t identify_simple(const SimplesList& list, const CenterObject& v) {
  const bool line = v.total_dim() == 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& s = list[i];
    if (!s.object || s.object->dims() != v.dims()) continue;
    if (line) {
      // Lines are determined by the scalars at a generating set.
      const int g = v.support().front();
      bool same = true;
      for (int h : v.group().generators()) same = same && s.object->sigma(g, h) == v.sigma(g, h);
      if (same) return i;
    } else if (hom_dim(*s.object, v) == 1) {
      return i;
    }
  }
  throw Error(ErrorCode::internal, "object is not isomorphic to a listed simple", {{"object", v.label()}});
}

/// Multiplicities of each simple in v (semisimple, explicit simples only).
inline std::vector<int> decompose(const SimplesList& list, const CenterObject& v) {
  std::vector<int> m;
  for (const auto& s : list.items) {
    if (!s.object) throw Error(ErrorCode::precondition, "decomposition needs explicit simples");
    m.push_back(static_cast<int>(hom_dim(*s.object, v)));
  }
  return m;
}

}  // namespace rgv
