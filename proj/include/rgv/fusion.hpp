#pragma once
// Fusion rings of the center: structure constants, duals, balancing scalars and
// transparency, from explicit matrices or from graded characters.

#include <string>
#include <vector>

#include "rgv/center.hpp"
#include "rgv/error.hpp"
#include "rgv/graded_character.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

enum class FusionEngine { automatic, explicit_matrices, characters };

inline const char* to_string(FusionEngine e) {
  switch (e) {
    case FusionEngine::automatic: return "automatic";
    case FusionEngine::explicit_matrices: return "explicit";
    case FusionEngine::characters: return "characters";
  }
  return "unknown";
}

class FusionRing {
 public:
  using Element = std::vector<Integer>;

  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::vector<int> dims, std::size_t unit)
      : labels_(std::move(labels)), dims_(std::move(dims)), unit_(unit),
        n_(labels_.size() * labels_.size() * labels_.size(), 0), dual_(labels_.size(), 0) {}

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t unit() const { return unit_; }
  FusionEngine engine() const { return engine_; }
  void set_engine(FusionEngine e) { engine_ = e; }

  /// N_{st}^u = dim Hom(u, s (x) t).
  int N(std::size_t s, std::size_t t, std::size_t u) const { return n_[(s * rank() + t) * rank() + u]; }
  void set_N(std::size_t s, std::size_t t, std::size_t u, int v) { n_[(s * rank() + t) * rank() + u] = v; }
  std::size_t dual(std::size_t s) const { return dual_[s]; }
  void set_dual(std::size_t s, std::size_t d) { dual_[s] = d; }

  Element basis(std::size_t s) const {
    Element e(rank(), 0);
    e[s] = 1;
    return e;
  }
  Element multiply(const Element& a, const Element& b) const {
    Element r(rank(), 0);
    for (std::size_t s = 0; s < rank(); ++s) {
      if (a[s] == 0) continue;
      for (std::size_t t = 0; t < rank(); ++t) {
        if (b[t] == 0) continue;
        Integer c = a[s] * b[t];
        for (std::size_t u = 0; u < rank(); ++u) {
          int k = N(s, t, u);
          if (k) r[u] += c * k;
        }
      }
    }
    return r;
  }
  Element power(const Element& a, int k) const {
    Element r = basis(unit_);
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
  }

  /// Commutativity, unit, N_{s s*}^I = 1 and associativity; empty string if fine.
  std::string check_axioms() const {
    const std::size_t r = rank();
    for (std::size_t s = 0; s < r; ++s) {
      if (N(s, dual(s), unit_) != 1) return "N_{s,s*}^I != 1 at " + labels_[s];
      for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t u = 0; u < r; ++u) {
          if (N(s, t, u) != N(t, s, u)) return "not commutative at " + labels_[s] + "," + labels_[t];
          if (N(s, t, u) < 0) return "negative structure constant";
        }
        if (N(unit_, s, t) != (s == t ? 1 : 0)) return "unit law fails at " + labels_[s];
      }
    }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          Element x = multiply(multiply(basis(a), basis(b)), basis(c));
          Element y = multiply(basis(a), multiply(basis(b), basis(c)));
          if (x != y) return "not associative at " + labels_[a] + "," + labels_[b] + "," + labels_[c];
        }
    return {};
  }

  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.labels_ == b.labels_ && a.n_ == b.n_ && a.dual_ == b.dual_ && a.unit_ == b.unit_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<int> dims_;
  std::size_t unit_ = 0;
  std::vector<int> n_;
  std::vector<std::size_t> dual_;
  FusionEngine engine_ = FusionEngine::automatic;
};

namespace detail {

inline std::size_t find_character(const SimplesList& list, const GradedCharacter& chi) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].character && *list[i].character == chi) return i;
  throw Error(ErrorCode::internal, "character does not belong to a listed simple");
}

inline std::size_t unit_index(const SimplesList& list) {
  CenterObject one = unit_object(list.category);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& s = list[i];
    if (s.object && s.object->dims() == one.dims()) {
      bool same = true;
      for (int h = 0; h < one.group().order(); ++h)
        same = same && s.object->sigma(one.group().identity(), h).is_identity();
      if (same) return i;
    }
  }
  throw Error(ErrorCode::internal, "unit object missing from the simples list");
}

}  // namespace detail

inline FusionEngine resolve_engine(const SimplesList& list, FusionEngine e) {
  if (e == FusionEngine::automatic) return list.all_explicit() ? FusionEngine::explicit_matrices : FusionEngine::characters;
  if (e == FusionEngine::explicit_matrices && !list.all_explicit())
    throw Error(ErrorCode::unsupported_family, "explicit fusion engine needs matrices for every simple");
  if (e == FusionEngine::characters && !list.has_characters())
    throw Error(ErrorCode::unsupported_family, "character engine needs trivial lambda");
  return e;
}

inline FusionRing fusion_ring(const SimplesList& list, FusionEngine engine = FusionEngine::automatic) {
  engine = resolve_engine(list, engine);
  std::vector<std::string> labels;
  std::vector<int> dims;
  for (const auto& s : list.items) {
    labels.push_back(s.label);
    dims.push_back(s.dim);
  }
  const std::size_t r = list.size();
  FusionRing ring(labels, dims, detail::unit_index(list));
  ring.set_engine(engine);
  if (engine == FusionEngine::explicit_matrices) {
    for (std::size_t s = 0; s < r; ++s) {
      ring.set_dual(s, identify_simple(list, rigid_dual(*list[s].object)));
      for (std::size_t t = s; t < r; ++t) {
        CenterObject p = tensor(*list[s].object, *list[t].object);
        std::vector<int> m(r, 0);
        if (p.total_dim() == 1)
          m[identify_simple(list, p)] = 1;
        else
          m = decompose(list, p);
        for (std::size_t u = 0; u < r; ++u) {
          ring.set_N(s, t, u, m[u]);
          ring.set_N(t, s, u, m[u]);
        }
      }
    }
  } else {
    const std::vector<RootOfUnity> none(static_cast<std::size_t>(list.category.group().order()));
    for (std::size_t s = 0; s < r; ++s) {
      ring.set_dual(s, detail::find_character(list, twisted_dual(*list[s].character, none)));
      for (std::size_t t = s; t < r; ++t) {
        GradedCharacter p = tensor(*list[s].character, *list[t].character);
        for (std::size_t u = 0; u < r; ++u) {
          int m = multiplicity(p, *list[u].character);
          ring.set_N(s, t, u, m);
          ring.set_N(t, s, u, m);
        }
      }
    }
  }
  return ring;
}

/// theta on a simple given by its graded character: d(g)^-1 chi(g,g) / chi(g,e).
inline Cyclotomic character_theta(const PointedCategory& c, const GradedCharacter& chi) {
  const FiniteGroup& G = c.group();
  for (int g = 0; g < G.order(); ++g) {
    const Cyclotomic& dimg = chi(g, G.identity());
    if (dimg.is_zero()) continue;
    return (chi(g, g) / dimg).times(c.d()(g).inverse());
  }
  throw Error(ErrorCode::precondition, "zero character");
}

/// Balancing scalars of all simples, in list order.
inline std::vector<Cyclotomic> simple_thetas(const SimplesList& list) {
  std::vector<Cyclotomic> th;
  for (const auto& s : list.items)
    th.push_back(s.object ? balancing_scalar(*s.object) : character_theta(list.category, *s.character));
  return th;
}

/// transparent[s][t]: the double braiding of s and t is the identity. Explicit
/// matrices when both are available, else the balancing criterion
/// theta_u = theta_s theta_t for every u in s (x) t.
inline std::vector<std::vector<bool>> transparency(const SimplesList& list, const FusionRing& ring,
                                                   const std::vector<Cyclotomic>& theta) {
  const std::size_t r = list.size();
  std::vector<std::vector<bool>> m(r, std::vector<bool>(r, false));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = s; t < r; ++t) {
      bool ok;
      if (list[s].object && list[t].object) {
        ok = double_braiding(*list[s].object, *list[t].object).is_identity();
      } else {
        ok = true;
        Cyclotomic st = theta[s] * theta[t];
        for (std::size_t u = 0; u < r && ok; ++u)
          if (ring.N(s, t, u) > 0) ok = theta[u] == st;
      }
      m[s][t] = m[t][s] = ok;
    }
  return m;
}

}  // namespace rgv
