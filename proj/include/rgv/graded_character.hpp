#pragma once
// Graded characters chi_V(g,h) = tr(sigma^g_{V,h}) on commuting pairs, for
// trivial lambda. Enough to decide fusion multiplicities without matrices.

#include <vector>

#include "rgv/error.hpp"
#include "rgv/groups.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

class GradedCharacter {
 public:
  GradedCharacter() = default;
  GradedCharacter(const FiniteGroup& g, int conductor)
      : group_(g), conductor_(conductor),
        values_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order()), Cyclotomic(conductor)) {}

  const FiniteGroup& group() const { return group_; }
  int conductor() const { return conductor_; }
  bool empty() const { return values_.empty(); }

  /// Zero on non-commuting pairs.
  const Cyclotomic& operator()(int g, int h) const { return values_[index(g, h)]; }
  Cyclotomic& at(int g, int h) { return values_[index(g, h)]; }

  /// chi_I(g,h) = delta_{g,e}.
  static GradedCharacter unit(const FiniteGroup& g, int conductor) {
    GradedCharacter c(g, conductor);
    for (int h = 0; h < g.order(); ++h) c.at(g.identity(), h) = Cyclotomic::one(conductor);
    return c;
  }

  /// Dimension of V_g.
  Rational graded_dim(int g) const {
    auto q = (*this)(g, group_.identity()).as_rational();
    if (!q) throw Error(ErrorCode::internal, "graded dimension is not rational");
    return *q;
  }
  Rational total_dim() const {
    Rational s = 0;
    for (int g = 0; g < group_.order(); ++g) s += graded_dim(g);
    return s;
  }

  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) {
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
    return a;
  }
  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) { return a.values_ == b.values_; }

 private:
  std::size_t index(int g, int h) const {
    return static_cast<std::size_t>(g) * static_cast<std::size_t>(group_.order()) + static_cast<std::size_t>(h);
  }

  FiniteGroup group_;
  int conductor_ = 1;
  std::vector<Cyclotomic> values_;
};

/// chi_{V(x)W}(g,h) = sum over g1 in C(h) of chi_V(g1,h) chi_W(g1^-1 g,h).
inline GradedCharacter tensor(const GradedCharacter& v, const GradedCharacter& w) {
  const FiniteGroup& G = v.group();
  GradedCharacter r(G, v.conductor());
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      if (!G.commute(g, h)) continue;
      Cyclotomic s(v.conductor());
      for (int g1 = 0; g1 < G.order(); ++g1) {
        if (!G.commute(g1, h)) continue;
        const Cyclotomic& a = v(g1, h);
        if (a.is_zero()) continue;
        const Cyclotomic& b = w(G.mul(G.inv(g1), g), h);
        if (b.is_zero()) continue;
        s += a * b;
      }
      r.at(g, h) = s;
    }
  return r;
}

/// Rigid dual twisted by a scalar half braiding on the unit:
/// chi(g,h) = twist(h) conj(chi_V(g^-1,h)).
inline GradedCharacter twisted_dual(const GradedCharacter& v, const std::vector<RootOfUnity>& twist) {
  const FiniteGroup& G = v.group();
  GradedCharacter r(G, v.conductor());
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      if (!G.commute(g, h)) continue;
      const Cyclotomic& x = v(G.inv(g), h);
      if (x.is_zero()) continue;
      r.at(g, h) = x.conj().times(twist[static_cast<std::size_t>(h)]);
    }
  return r;
}

/// (1/|G|) sum over commuting pairs of a conj(b); the multiplicity pairing.
inline Cyclotomic inner_product(const GradedCharacter& a, const GradedCharacter& b) {
  const FiniteGroup& G = a.group();
  Cyclotomic s(a.conductor());
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      const Cyclotomic& x = a(g, h);
      if (x.is_zero()) continue;
      const Cyclotomic& y = b(g, h);
      if (y.is_zero()) continue;
      s += x * y.conj();
    }
  s *= Rational(1, static_cast<unsigned long>(G.order()));
  return s;
}

/// Non-negative integer multiplicity; throws if the pairing is not one.
inline int multiplicity(const GradedCharacter& a, const GradedCharacter& b) {
  auto q = inner_product(a, b).as_rational();
  if (!q || q->get_den() != 1 || sgn(*q) < 0)
    throw Error(ErrorCode::internal, "character pairing is not a non-negative integer");
  return static_cast<int>(q->get_num().get_si());
}

}  // namespace rgv
