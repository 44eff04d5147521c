#pragma once
// Normalized 3-cocycles G^3 -> mu_N and their exhaustive verification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgv/error.hpp"
#include "rgv/groups.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

/// Largest group on which an arbitrary table is verified (|G|^4 quadruples).
inline constexpr int kCocycleVerifyCap = 64;

/// Dense table of exponents in a common order N: lambda(a,b,c) = zeta_N^{e[a,b,c]}.
class ThreeCocycle {
 public:
  ThreeCocycle() = default;

  static ThreeCocycle trivial(const FiniteGroup& g) {
    ThreeCocycle c;
    c.group_ = g;
    c.trivial_ = true;
    return c;
  }

  /// Unvalidated construction; use verify_three_cocycle for untrusted input.
  static ThreeCocycle from_exponents(const FiniteGroup& g, std::int64_t order, std::vector<std::int64_t> exps) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    if (order < 1) throw Error(ErrorCode::config_parse, "cocycle order must be positive");
    if (exps.size() != n * n * n)
      throw Error(ErrorCode::config_parse, "cocycle table must have |G|^3 entries",
                  {{"expected", n * n * n}, {"got", exps.size()}});
    ThreeCocycle c;
    c.group_ = g;
    c.order_ = order;
    bool triv = true;
    for (auto& e : exps) {
      e = mod(e, order);
      triv = triv && e == 0;
    }
    c.trivial_ = triv;
    if (!triv) c.exps_ = std::move(exps);
    if (triv) c.order_ = 1;
    return c;
  }

  static ThreeCocycle from_values(const FiniteGroup& g, const std::vector<RootOfUnity>& values) {
    std::int64_t m = 1;
    for (const auto& v : values) m = lcm64(m, v.order());
    std::vector<std::int64_t> exps;
    exps.reserve(values.size());
    for (const auto& v : values) exps.push_back(v.exponent_in(m));
    return from_exponents(g, m, std::move(exps));
  }

  const FiniteGroup& group() const { return group_; }
  bool is_trivial() const { return trivial_; }
  /// Common order of the stored values (not necessarily minimal).
  std::int64_t value_order() const { return order_; }

  RootOfUnity operator()(int a, int b, int c) const {
    if (trivial_) return RootOfUnity::one();
    const std::size_t n = static_cast<std::size_t>(group_.order());
    return {order_, exps_[(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
                          static_cast<std::size_t>(c)]};
  }

  std::vector<RootOfUnity> values() const {
    std::vector<RootOfUnity> v;
    const int n = group_.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) v.push_back((*this)(a, b, c));
    return v;
  }

  /// Minimal order of the values.
  std::int64_t multiplicative_order() const {
    if (trivial_) return 1;
    std::int64_t m = 1;
    for (auto e : exps_) m = lcm64(m, RootOfUnity(order_, e).multiplicative_order());
    return m;
  }

  friend ThreeCocycle operator*(const ThreeCocycle& x, const ThreeCocycle& y) {
    if (!(x.group_ == y.group_)) throw Error(ErrorCode::precondition, "cocycles on different groups");
    if (x.trivial_) return y;
    if (y.trivial_) return x;
    std::int64_t m = lcm64(x.order_, y.order_);
    std::vector<std::int64_t> e(x.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = x.exps_[i] * (m / x.order_) + y.exps_[i] * (m / y.order_);
    return from_exponents(x.group_, m, std::move(e));
  }

  friend bool operator==(const ThreeCocycle& x, const ThreeCocycle& y) {
    if (!(x.group_ == y.group_)) return false;
    const int n = x.group_.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (x(a, b, c) != y(a, b, c)) return false;
    return true;
  }

 private:
  FiniteGroup group_;
  std::int64_t order_ = 1;
  bool trivial_ = true;
  std::vector<std::int64_t> exps_;
};

struct CocycleViolation {
  enum class Kind { normalization, cocycle_identity } kind;
  std::vector<int> elements;  ///< the triple or quadruple

  nlohmann::json to_json(const FiniteGroup& g) const {
    nlohmann::json names = nlohmann::json::array();
    for (int x : elements) names.push_back(g.name(x));
    return {{"kind", kind == Kind::normalization ? "normalization" : "cocycle_identity"},
            {"elements", elements},
            {"names", names}};
  }
};

/// First violation in a fixed scan order (normalization first), or nullopt.
inline std::optional<CocycleViolation> check_three_cocycle(const ThreeCocycle& lam) {
  if (lam.is_trivial()) return std::nullopt;
  const FiniteGroup& g = lam.group();
  const int n = g.order(), e = g.identity();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a != e && b != e && c != e) continue;
        if (!lam(a, b, c).is_one())
          return CocycleViolation{CocycleViolation::Kind::normalization, {a, b, c}};
      }
  if (n > kCocycleVerifyCap)
    throw Error(ErrorCode::cap_exceeded, "cocycle verification is limited to small groups",
                {{"order", n}, {"cap", kCocycleVerifyCap}});
  const std::int64_t m = lam.value_order();
  auto ex = [&](int a, int b, int c) { return lam(a, b, c).exponent_in(m); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        const int bc = g.mul(b, c);
        const std::int64_t abc = ex(a, b, c);
        for (int d = 0; d < n; ++d) {
          std::int64_t lhs = abc + ex(a, bc, d) + ex(b, c, d);
          std::int64_t rhs = ex(ab, c, d) + ex(a, b, g.mul(c, d));
          if (mod(lhs - rhs, m) != 0)
            return CocycleViolation{CocycleViolation::Kind::cocycle_identity, {a, b, c, d}};
        }
      }
    }
  return std::nullopt;
}

/// Throws Error(cocycle_violation) naming the first violating triple/quadruple.
inline ThreeCocycle verify_three_cocycle(const ThreeCocycle& lam) {
  if (auto v = check_three_cocycle(lam)) {
    const char* what = v->kind == CocycleViolation::Kind::normalization
                           ? "3-cocycle is not normalized"
                           : "3-cocycle identity fails";
    throw Error(ErrorCode::cocycle_violation, what, v->to_json(lam.group()));
  }
  return lam;
}

inline ThreeCocycle verify_three_cocycle(const FiniteGroup& g, const std::vector<RootOfUnity>& values) {
  return verify_three_cocycle(ThreeCocycle::from_values(g, values));
}

namespace detail {

inline int least_generator(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return x;
  throw Error(ErrorCode::unsupported_family, "group is not cyclic", {{"order", g.order()}});
}

}  // namespace detail

/// The lambda_q formula on a cyclic group given in any presentation: exponents
/// are taken along `generator` (default: least-index element of maximal order).
inline ThreeCocycle cyclic_cocycle_on(const FiniteGroup& g, std::int64_t q, int generator = -1) {
  const int n = g.order();
  int x = generator < 0 ? detail::least_generator(g) : generator;
  if (g.element_order(x) != n) throw Error(ErrorCode::unsupported_family, "element does not generate the group");
  q = mod(q, n);
  if (q == 0) return ThreeCocycle::trivial(g);
  std::vector<int> log(static_cast<std::size_t>(n));
  for (int k = 0, y = g.identity(); k < n; ++k, y = g.mul(y, x)) log[static_cast<std::size_t>(y)] = k;
  std::vector<std::int64_t> exps(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::int64_t la = log[static_cast<std::size_t>(a)], lb = log[static_cast<std::size_t>(b)],
                     lc = log[static_cast<std::size_t>(c)];
        exps[(static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)) *
                 static_cast<std::size_t>(n) +
             static_cast<std::size_t>(c)] = q * la * ((lb + lc) / n);
      }
  return ThreeCocycle::from_exponents(g, n, std::move(exps));
}

/// lambda_q(a,b,c) = zeta_n^{q a floor((b+c)/n)} on Z_n = {0,...,n-1}.
inline ThreeCocycle cyclic_cocycle(int n, std::int64_t q) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  return cyclic_cocycle_on(g, q);
}

}  // namespace rgv
