#pragma once
// Exact scalars: roots of unity and elements of cyclotomic fields Q(zeta_N).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgv/error.hpp"

namespace rgv {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// RootOfUnity
// ---------------------------------------------------------------------------

/// zeta_N^e with zeta_N = exp(2 pi i / N). The exponent is kept in [0, N).
/// The stored order need not be minimal; equality compares in the common order.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t order, std::int64_t exponent) : order_(order), exponent_(0) {
    if (order < 1) throw Error(ErrorCode::precondition, "root of unity order must be positive");
    exponent_ = mod(exponent, order);
  }

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {2, 1}; }

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

  /// Exponent after embedding into a multiple of the stored order.
  std::int64_t exponent_in(std::int64_t m) const {
    if (m % order_ != 0) throw Error(ErrorCode::precondition, "embedding order is not a multiple");
    return exponent_ * (m / order_);
  }
  RootOfUnity embed(std::int64_t m) const { return {m, exponent_in(m)}; }

  /// Same value expressed with its multiplicative order.
  RootOfUnity reduced() const {
    std::int64_t g = std::gcd(order_, exponent_);
    if (exponent_ == 0) return {};
    return {order_ / g, exponent_ / g};
  }
  std::int64_t multiplicative_order() const { return reduced().order(); }

  bool is_one() const { return exponent_ == 0; }

  RootOfUnity inverse() const { return {order_, -exponent_}; }
  RootOfUnity pow(std::int64_t k) const {
    // exponent * k may overflow for huge k; reduce k first.
    return {order_, mod(exponent_ * mod(k, order_), order_)};
  }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    std::int64_t m = lcm64(a.order_, b.order_);
    return {m, a.exponent_in(m) + b.exponent_in(m)};
  }
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }
  RootOfUnity& operator*=(const RootOfUnity& b) { return *this = *this * b; }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    std::int64_t m = lcm64(a.order_, b.order_);
    return a.exponent_in(m) == b.exponent_in(m);
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

  std::string str() const {
    RootOfUnity r = reduced();
    if (r.exponent_ == 0) return "1";
    if (r.order_ == 2) return "-1";
    return "z" + std::to_string(r.order_) + "^" + std::to_string(r.exponent_);
  }

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

/// a * b^power in the common order lcm(order(a), order(b)).
inline RootOfUnity rou_combine(const RootOfUnity& a, const RootOfUnity& b, std::int64_t power) {
  std::int64_t m = lcm64(a.order(), b.order());
  std::int64_t e = a.exponent_in(m) + mod(power, m) * (b.exponent_in(m) % m);
  return {m, e};
}

inline std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) { return os << r.str(); }

inline nlohmann::json to_json(const RootOfUnity& r) {
  return nlohmann::json{{"order", r.order()}, {"exponent", r.exponent()}};
}

inline RootOfUnity root_of_unity_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 2) return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v == 1) return {};
    if (v == -1) return RootOfUnity::minus_one();
  }
  if (j.is_object() && j.contains("order") && j.contains("exponent"))
    return {j.at("order").get<std::int64_t>(), j.at("exponent").get<std::int64_t>()};
  throw Error(ErrorCode::config_parse, "expected a root of unity {\"order\":N,\"exponent\":e}",
              {{"value", j}});
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline IntPoly compute_cyclotomic(int n, const std::map<int, IntPoly>& known) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly& den = known.at(d);
    std::size_t dn = den.size() - 1;
    IntPoly quo(num.size() - dn, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
      std::int64_t c = num[k];
      quo[k - dn] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
      if (k == dn) break;
    }
    num = std::move(quo);
  }
  return num;
}

}  // namespace detail

/// Coefficients of Phi_n, lowest degree first. Results are cached; the cache is
/// guarded so concurrent callers are safe.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mtx;
  static std::map<int, detail::IntPoly> cache;
  if (n < 1) throw Error(ErrorCode::precondition, "conductor must be positive");
  std::lock_guard<std::mutex> lock(mtx);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    cache.emplace(d, detail::compute_cyclotomic(d, cache));
  }
  return cache.at(n);
}

inline int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

// ---------------------------------------------------------------------------
// Cyclotomic
// ---------------------------------------------------------------------------

/// Element of Q(zeta_N), stored as its canonical residue modulo Phi_N:
/// coefficients c_0..c_{phi(N)-1} of 1, zeta, zeta^2, ...
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor)
      : conductor_(conductor), c_(static_cast<std::size_t>(euler_phi(conductor))) {}

  static Cyclotomic rational(int conductor, const Rational& q) {
    Cyclotomic x(conductor);
    x.c_[0] = q;
    return x;
  }
  static Cyclotomic one(int conductor) { return rational(conductor, 1); }
  static Cyclotomic zero(int conductor) { return Cyclotomic(conductor); }

  /// zeta_N^k.
  static Cyclotomic zeta_power(int conductor, std::int64_t k) {
    std::vector<Rational> raw(static_cast<std::size_t>(conductor));
    raw[static_cast<std::size_t>(mod(k, conductor))] = 1;
    return reduce(conductor, std::move(raw));
  }

  static Cyclotomic from_root(int conductor, const RootOfUnity& root) {
    const RootOfUnity r = root.reduced();
    if (conductor % r.order() != 0)
      throw Error(ErrorCode::internal, "root of unity does not live in the session conductor",
                  {{"conductor", conductor}, {"order", r.order()}});
    return zeta_power(conductor, r.exponent_in(conductor));
  }

  /// Canonical residue of an arbitrary polynomial in zeta_N.
  static Cyclotomic reduce(int conductor, std::vector<Rational> raw) {
    const auto& phi = cyclotomic_polynomial(conductor);
    const std::size_t deg = phi.size() - 1;
    // zeta^N = 1 first, which keeps the long division short.
    if (raw.size() > static_cast<std::size_t>(conductor)) {
      for (std::size_t k = static_cast<std::size_t>(conductor); k < raw.size(); ++k)
        if (sgn(raw[k]) != 0) raw[k % static_cast<std::size_t>(conductor)] += raw[k];
      raw.resize(static_cast<std::size_t>(conductor));
    }
    for (std::size_t k = raw.size(); k-- > deg;) {
      if (sgn(raw[k]) == 0) continue;
      Rational c = raw[k];
      for (std::size_t j = 0; j <= deg; ++j)
        if (phi[j] != 0) raw[k - deg + j] -= c * phi[j];
    }
    raw.resize(deg);
    Cyclotomic x(conductor);
    x.c_ = std::move(raw);
    return x;
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_one() const {
    if (sgn(c_[0] - 1) != 0) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return std::nullopt;
    return c_[0];
  }
  /// Returns zeta_N^k if this element equals one, otherwise nullopt.
  std::optional<RootOfUnity> as_root_of_unity() const {
    for (int k = 0; k < conductor_; ++k)
      if (*this == zeta_power(conductor_, k)) return RootOfUnity(conductor_, k).reduced();
    return std::nullopt;
  }

  Cyclotomic embed(int m) const {
    if (m % conductor_ != 0)
      throw Error(ErrorCode::precondition, "embedding conductor must be a multiple");
    if (m == conductor_) return *this;
    std::vector<Rational> raw(static_cast<std::size_t>(m));
    const std::size_t step = static_cast<std::size_t>(m / conductor_);
    for (std::size_t k = 0; k < c_.size(); ++k) raw[k * step] = c_[k];
    return reduce(m, std::move(raw));
  }

  /// Preimage under embed(conductor()) from Q(zeta_n), if this element lies there.
  std::optional<Cyclotomic> restrict_to(int n) const;

  Cyclotomic conj() const {
    std::vector<Rational> raw(static_cast<std::size_t>(conductor_));
    for (std::size_t k = 0; k < c_.size(); ++k)
      raw[static_cast<std::size_t>(mod(-static_cast<std::int64_t>(k), conductor_))] += c_[k];
    return reduce(conductor_, std::move(raw));
  }

  /// Multiplication by zeta^k, cheaper than a general product.
  Cyclotomic times_zeta(std::int64_t k) const {
    k = mod(k, conductor_);
    if (k == 0) return *this;
    std::vector<Rational> raw(c_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i + static_cast<std::size_t>(k)] = c_[i];
    return reduce(conductor_, std::move(raw));
  }
  Cyclotomic times(const RootOfUnity& r) const { return times_zeta(r.exponent_in(conductor_)); }

  Cyclotomic inverse() const;

  Cyclotomic operator-() const {
    Cyclotomic x = *this;
    for (auto& q : x.c_) q = -q;
    return x;
  }
  Cyclotomic& operator+=(const Cyclotomic& b) {
    same_field(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& b) {
    same_field(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.same_field(b);
    const std::size_t n = a.c_.size();
    // Sparse operands (roots of unity, mostly) are the common case.
    std::vector<std::size_t> nz_a, nz_b;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.c_[i]) != 0) nz_a.push_back(i);
      if (sgn(b.c_[i]) != 0) nz_b.push_back(i);
    }
    if (nz_a.empty() || nz_b.empty()) return Cyclotomic(a.conductor_);
    std::vector<Rational> raw(2 * n - 1);
    for (auto i : nz_a)
      for (auto j : nz_b) raw[i + j] += a.c_[i] * b.c_[j];
    return reduce(a.conductor_, std::move(raw));
  }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
      int m = std::lcm(a.conductor_, b.conductor_);
      return a.embed(m) == b.embed(m);
    }
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Lexicographic order on coefficient vectors; only meaningful within one field.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      Rational q = c_[k];
      bool neg = sgn(q) < 0;
      if (neg) q = -q;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << q.get_str();
      } else {
        if (q != 1) os << q.get_str() << "*";
        os << "z" << conductor_;
        if (k > 1) os << "^" << k;
      }
    }
    return first ? "0" : os.str();
  }

 private:
  static int sgn(const Rational& q) { return ::sgn(q); }
  void same_field(const Cyclotomic& b) const {
    if (conductor_ != b.conductor_)
      throw Error(ErrorCode::internal, "cyclotomic conductor mismatch",
                  {{"left", conductor_}, {"right", b.conductor_}});
  }

  int conductor_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

/// Roots of unity as "zN^e", everything else in the power basis.
inline std::string display(const Cyclotomic& x) {
  if (auto q = x.as_rational()) return q->get_str();
  if (auto r = x.as_root_of_unity()) return r->str();
  return x.str();
}

/// Canonical residue of sum_k raw[k] zeta_N^k.
inline Cyclotomic cyclotomic_reduce(int conductor, std::vector<Rational> raw) {
  return Cyclotomic::reduce(conductor, std::move(raw));
}

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
inline void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Solves A x = y over Q (A given column-wise); returns nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> cols,
                                                           std::vector<Rational> y) {
  const std::size_t m = y.size(), n = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = y[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

}  // namespace detail

inline Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::internal, "division by zero in Q(zeta)");
  if (auto q = as_rational()) return rational(conductor_, 1 / *q);
  // Extended Euclid: s*a + t*Phi = 1 gives a^{-1} = s.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  detail::QPoly phi(phi_int.begin(), phi_int.end());
  detail::QPoly r0 = phi, r1 = c_;
  detail::trim(r1);
  detail::QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    detail::QPoly q, r;
    detail::divmod(r0, r1, q, r);
    detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error(ErrorCode::internal, "non-invertible cyclotomic element");
  }
  Rational inv = 1 / r1[0];
  for (auto& x : s1) x *= inv;
  return reduce(conductor_, std::move(s1));
}

inline std::optional<Cyclotomic> Cyclotomic::restrict_to(int n) const {
  if (conductor_ % n != 0)
    throw Error(ErrorCode::precondition, "restriction target must divide the conductor");
  const int deg = euler_phi(n);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k) cols.push_back(Cyclotomic::zeta_power(n, k).embed(conductor_).c_);
  auto sol = detail::solve_rational(std::move(cols), c_);
  if (!sol) return std::nullopt;
  Cyclotomic x(n);
  x.c_ = std::move(*sol);
  return x;
}

inline nlohmann::json rational_to_json(const Rational& q) {
  auto part = [](const Integer& z) -> nlohmann::json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return nlohmann::json::array({part(q.get_num()), part(q.get_den())});
}

inline Rational rational_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) -> Integer {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) return Integer(v.get<std::string>());
    throw Error(ErrorCode::config_parse, "expected an integer", {{"value", v}});
  };
  if (j.is_number_integer()) return Rational(part(j));
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::config_parse, "expected [num, den]", {{"value", j}});
  Rational q(part(j[0]), part(j[1]));
  q.canonicalize();
  return q;
}

inline nlohmann::json to_json(const Cyclotomic& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rational_to_json(q));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  int n = j.at("conductor").get<int>();
  std::vector<Rational> raw;
  for (const auto& c : j.at("coeffs")) raw.push_back(rational_from_json(c));
  return Cyclotomic::reduce(n, std::move(raw));
}

}  // namespace rgv
