#pragma once
// Finite groups as Cayley tables: closure from permutations, conjugacy classes,
// centralizers, homomorphisms to roots of unity and abelian character groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rgv/error.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

inline constexpr int kDefaultGroupOrderCap = 512;

using Permutation = std::vector<int>;

/// Immutable finite group; copies share the underlying table.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// Validates associativity, identity and inverses. Element 0 need not be the identity.
  static FiniteGroup from_cayley(std::vector<std::vector<int>> table,
                                 std::vector<std::string> names = {},
                                 int cap = kDefaultGroupOrderCap);

  /// Closure of the generated permutation group, elements in BFS insertion order.
  static FiniteGroup from_generators(int degree, const std::vector<Permutation>& generators,
                                     int cap = kDefaultGroupOrderCap);

  static FiniteGroup cyclic(int n, int cap = kDefaultGroupOrderCap);
  static FiniteGroup trivial() { return cyclic(1); }
  /// Elements (a,b) ordered with a major.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    int cap = kDefaultGroupOrderCap);

  int order() const { return d_->n; }
  int identity() const { return d_->identity; }
  int mul(int a, int b) const { return d_->table[static_cast<std::size_t>(a * d_->n + b)]; }
  int inv(int a) const { return d_->inverse[static_cast<std::size_t>(a)]; }
  /// h^{-1} g h
  int conj(int g, int h) const { return mul(inv(h), mul(g, h)); }
  int pow(int g, std::int64_t k) const {
    int o = element_order(g);
    k = mod(k, o);
    int r = identity();
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, g);
    return r;
  }
  int element_order(int g) const { return d_->orders[static_cast<std::size_t>(g)]; }
  int exponent() const { return d_->exponent; }
  bool is_abelian() const { return d_->abelian; }
  bool is_cyclic() const { return d_->exponent == d_->n; }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  const std::string& name(int g) const { return d_->names[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& names() const { return d_->names; }

  /// Generators fixed at construction (permutation generators, product factors, or a
  /// greedy generating set in index order). Homomorphisms are specified on these.
  const std::vector<int>& generators() const { return d_->generators; }

  /// Elements of the subgroup generated by `gens`, ascending.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  std::vector<std::vector<int>> cayley_table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order()));
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
    return t;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    int n = 1;
    int identity = 0;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<int> orders;
    int exponent = 1;
    bool abelian = true;
    std::vector<std::string> names;
    std::vector<int> generators;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::vector<int> greedy_generators(const Data& d);
  static std::shared_ptr<const Data> finish(Data d, bool validate);

  std::shared_ptr<const Data> d_;
};

inline std::shared_ptr<const FiniteGroup::Data> FiniteGroup::finish(Data d, bool validate) {
  const int n = d.n;
  auto at = [&](int a, int b) { return d.table[static_cast<std::size_t>(a * n + b)]; };
  if (validate) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int c = at(a, b);
        if (c < 0 || c >= n)
          throw Error(ErrorCode::invalid_group, "Cayley table entry out of range",
                      {{"row", a}, {"col", b}, {"value", c}});
      }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = at(a, b) == b && at(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error(ErrorCode::invalid_group, "Cayley table has no identity element");
  d.identity = e;
  d.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == e && at(b, a) == e) d.inverse[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (d.inverse[static_cast<std::size_t>(a)] < 0)
      throw Error(ErrorCode::invalid_group, "element without inverse", {{"element", a}});
  if (validate) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw Error(ErrorCode::invalid_group, "Cayley table is not associative",
                        {{"triple", {a, b, c}}});
  }
  d.orders.assign(static_cast<std::size_t>(n), 1);
  d.exponent = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != e) {
      x = at(x, a);
      ++k;
    }
    d.orders[static_cast<std::size_t>(a)] = k;
    d.exponent = std::lcm(d.exponent, k);
  }
  d.abelian = true;
  for (int a = 0; a < n && d.abelian; ++a)
    for (int b = a + 1; b < n && d.abelian; ++b) d.abelian = at(a, b) == at(b, a);
  if (d.names.size() != static_cast<std::size_t>(n)) {
    d.names.clear();
    for (int a = 0; a < n; ++a) d.names.push_back(std::to_string(a));
  }
  if (d.generators.empty()) d.generators = greedy_generators(d);
  return std::make_shared<const Data>(std::move(d));
}

inline std::vector<int> FiniteGroup::greedy_generators(const Data& d) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(d.n), 0);
  in[static_cast<std::size_t>(d.identity)] = 1;
  for (int g = 0; g < d.n; ++g) {
    if (in[static_cast<std::size_t>(g)]) continue;
    gens.push_back(g);
    std::vector<int> elems{d.identity};
    std::fill(in.begin(), in.end(), 0);
    in[static_cast<std::size_t>(d.identity)] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int s : gens) {
        int x = d.table[static_cast<std::size_t>(elems[i] * d.n + s)];
        if (!in[static_cast<std::size_t>(x)]) {
          in[static_cast<std::size_t>(x)] = 1;
          elems.push_back(x);
        }
      }
  }
  return gens;
}

inline std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<int> elems{identity()};
  in[static_cast<std::size_t>(identity())] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = mul(elems[i], s);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table,
                                            std::vector<std::string> names, int cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::invalid_group, "empty Cayley table");
  if (n > cap)
    throw Error(ErrorCode::cap_exceeded, "group order exceeds cap", {{"order", n}, {"cap", cap}});
  Data d;
  d.n = n;
  d.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::invalid_group, "Cayley table is not square");
    d.table.insert(d.table.end(), row.begin(), row.end());
  }
  d.names = std::move(names);
  return FiniteGroup(finish(std::move(d), true));
}

namespace detail {

inline std::string cycle_notation(const Permutation& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace detail

inline FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<Permutation>& generators,
                                                int cap) {
  if (degree < 1) throw Error(ErrorCode::invalid_group, "permutation degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& p = generators[i];
    std::vector<char> hit(static_cast<std::size_t>(degree), 0);
    bool ok = static_cast<int>(p.size()) == degree;
    for (int x : p) {
      if (!ok) break;
      if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)]) ok = false;
      else hit[static_cast<std::size_t>(x)] = 1;
    }
    if (!ok)
      throw Error(ErrorCode::invalid_group, "generator is not a bijection",
                  {{"generator", i}, {"degree", degree}});
  }
  // (p * q)(i) = p(q(i)).
  auto compose = [](const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  Permutation id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, int> index{{id, 0}};
  std::vector<Permutation> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : generators) {
      Permutation x = compose(elems[i], s);
      if (index.emplace(x, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(x));
        if (static_cast<int>(elems.size()) > cap)
          throw Error(ErrorCode::cap_exceeded, "group closure exceeds the order cap", {{"cap", cap}});
      }
    }
  Data d;
  d.n = static_cast<int>(elems.size());
  d.table.resize(static_cast<std::size_t>(d.n) * static_cast<std::size_t>(d.n));
  for (int a = 0; a < d.n; ++a)
    for (int b = 0; b < d.n; ++b)
      d.table[static_cast<std::size_t>(a * d.n + b)] =
          index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  for (const auto& p : elems) d.names.push_back(detail::cycle_notation(p));
  for (const auto& s : generators) d.generators.push_back(index.at(s));
  auto data = finish(std::move(d), false);
  return FiniteGroup(data);
}

inline FiniteGroup FiniteGroup::cyclic(int n, int cap) {
  if (n < 1) throw Error(ErrorCode::invalid_group, "cyclic group order must be positive");
  if (n > cap)
    throw Error(ErrorCode::cap_exceeded, "group order exceeds cap", {{"order", n}, {"cap", cap}});
  Data d;
  d.n = n;
  d.table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  if (n > 1) d.generators = {1};
  return FiniteGroup(finish(std::move(d), false));
}

inline FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, int cap) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > cap)
    throw Error(ErrorCode::cap_exceeded, "group order exceeds cap", {{"order", n}, {"cap", cap}});
  Data d;
  d.n = n;
  d.table.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      d.table[static_cast<std::size_t>(x * n + y)] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  for (int x = 0; x < n; ++x) d.names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
  for (int g : a.generators()) d.generators.push_back(g * nb + b.identity());
  for (int g : b.generators()) d.generators.push_back(a.identity() * nb + g);
  return FiniteGroup(finish(std::move(d), false));
}

// ---------------------------------------------------------------------------
// Conjugacy classes and centralizers
// ---------------------------------------------------------------------------

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  ///< ascending element indices
  std::vector<int> representatives;       ///< least element of each class
  std::vector<int> class_of;              ///< element -> class index
};

/// Classes ordered by their least element.
inline ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  const int n = g.order();
  cc.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cc.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(cc.classes.size());
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int y = g.conj(x, h);
      if (cc.class_of[static_cast<std::size_t>(y)] < 0) {
        cc.class_of[static_cast<std::size_t>(y)] = idx;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc.classes.push_back(std::move(cls));
    cc.representatives.push_back(x);
  }
  return cc;
}

/// A subgroup materialized as a group in its own right plus the inclusion map.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> inclusion;  ///< subgroup index -> ambient index (ascending)
  std::vector<int> index_of;   ///< ambient index -> subgroup index or -1

  int order() const { return group.order(); }
  bool contains(int ambient) const { return index_of[static_cast<std::size_t>(ambient)] >= 0; }
};

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.inclusion = elements;
  s.index_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i)
    s.index_of[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elements.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(g.name(elements[i]));
    for (std::size_t j = 0; j < elements.size(); ++j) {
      int k = s.index_of[static_cast<std::size_t>(g.mul(elements[i], elements[j]))];
      if (k < 0) throw Error(ErrorCode::internal, "subset is not closed under multiplication");
      table[i].push_back(k);
    }
  }
  s.group = FiniteGroup::from_cayley(std::move(table), std::move(names),
                                     std::max(g.order(), kDefaultGroupOrderCap));
  return s;
}

/// {h : hg = gh} with its induced Cayley table.
inline Subgroup centralizer(const FiniteGroup& g, int x) {
  std::vector<int> elems;
  for (int h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) elems.push_back(h);
  return make_subgroup(g, std::move(elems));
}

// ---------------------------------------------------------------------------
// Homomorphisms into roots of unity
// ---------------------------------------------------------------------------

/// A homomorphism G -> mu_infinity, stored by its values on every element.
class GroupHom {
 public:
  GroupHom() = default;

  /// Validates values(gh) = values(g) values(h).
  static GroupHom from_values(const FiniteGroup& g, std::vector<RootOfUnity> values) {
    if (static_cast<int>(values.size()) != g.order())
      throw Error(ErrorCode::invalid_homomorphism, "one value per group element expected");
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (values[static_cast<std::size_t>(g.mul(a, b))] !=
            values[static_cast<std::size_t>(a)] * values[static_cast<std::size_t>(b)])
          throw Error(ErrorCode::invalid_homomorphism, "values are not multiplicative",
                      {{"pair", {g.name(a), g.name(b)}}});
    GroupHom h;
    h.group_ = g;
    h.values_ = std::move(values);
    return h;
  }

  /// Extends values on g.generators() multiplicatively; throws if inconsistent.
  static GroupHom from_generator_values(const FiniteGroup& g, const std::vector<RootOfUnity>& gen_values) {
    const auto& gens = g.generators();
    if (gen_values.size() != gens.size())
      throw Error(ErrorCode::invalid_homomorphism, "one value per generator expected",
                  {{"generators", gens.size()}, {"values", gen_values.size()}});
    std::vector<std::optional<RootOfUnity>> val(static_cast<std::size_t>(g.order()));
    val[static_cast<std::size_t>(g.identity())] = RootOfUnity::one();
    std::vector<int> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int x = g.mul(queue[i], gens[k]);
        RootOfUnity v = *val[static_cast<std::size_t>(queue[i])] * gen_values[k];
        auto& slot = val[static_cast<std::size_t>(x)];
        if (!slot) {
          slot = v;
          queue.push_back(x);
        }
      }
    std::vector<RootOfUnity> values;
    for (int a = 0; a < g.order(); ++a) {
      if (!val[static_cast<std::size_t>(a)])
        throw Error(ErrorCode::invalid_homomorphism, "generators do not generate the group");
      values.push_back(*val[static_cast<std::size_t>(a)]);
    }
    return from_values(g, std::move(values));
  }

  static GroupHom trivial(const FiniteGroup& g) {
    GroupHom h;
    h.group_ = g;
    h.values_.assign(static_cast<std::size_t>(g.order()), RootOfUnity::one());
    return h;
  }

  const FiniteGroup& source() const { return group_; }
  const RootOfUnity& operator()(int g) const { return values_[static_cast<std::size_t>(g)]; }
  const std::vector<RootOfUnity>& values() const { return values_; }

  bool is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](const RootOfUnity& r) { return r.is_one(); });
  }
  /// lcm of the value orders.
  std::int64_t value_order() const {
    std::int64_t m = 1;
    for (const auto& r : values_) m = lcm64(m, r.multiplicative_order());
    return m;
  }

  GroupHom pow(std::int64_t k) const {
    GroupHom h = *this;
    for (auto& r : h.values_) r = r.pow(k);
    return h;
  }
  friend GroupHom operator*(const GroupHom& a, const GroupHom& b) {
    GroupHom h = a;
    for (std::size_t i = 0; i < h.values_.size(); ++i) h.values_[i] = a.values_[i] * b.values_[i];
    return h;
  }
  friend bool operator==(const GroupHom& a, const GroupHom& b) { return a.values_ == b.values_; }

 private:
  FiniteGroup group_;
  std::vector<RootOfUnity> values_;
};

// ---------------------------------------------------------------------------
// Abelian structure
// ---------------------------------------------------------------------------

/// G = <b_1> x ... x <b_r> with invariant factors n_1 | n_2 | ... | n_r.
struct AbelianDecomposition {
  std::vector<int> basis;
  std::vector<int> orders;
  std::vector<std::vector<int>> coordinates;  ///< element -> exponents along the basis
};

namespace detail {

// Basis of the Sylow p-subgroup, by repeatedly lifting an element of maximal
// order modulo the span found so far to an element of the same actual order.
inline std::vector<int> sylow_basis(const FiniteGroup& g, int p) {
  std::vector<int> sylow;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) sylow.push_back(x);
  }
  std::vector<int> basis;
  std::vector<int> span{g.identity()};
  std::vector<char> in_span(static_cast<std::size_t>(g.order()), 0);
  in_span[static_cast<std::size_t>(g.identity())] = 1;
  while (span.size() < sylow.size()) {
    int best = -1, best_rel = 0;
    for (int x : sylow) {
      int y = x, k = 1;
      while (!in_span[static_cast<std::size_t>(y)]) {
        y = g.mul(y, x);
        ++k;
      }
      if (k > best_rel) {
        best_rel = k;
        best = x;
      }
    }
    int lifted = -1;
    for (int h : span) {
      int y = g.mul(best, h);
      if (g.element_order(y) == best_rel) {
        lifted = y;
        break;
      }
    }
    if (lifted < 0) throw Error(ErrorCode::internal, "abelian basis lifting failed");
    basis.push_back(lifted);
    std::vector<int> next;
    std::fill(in_span.begin(), in_span.end(), 0);
    for (int h : span)
      for (int k = 0, y = h; k < best_rel; ++k, y = g.mul(y, lifted)) {
        if (!in_span[static_cast<std::size_t>(y)]) {
          in_span[static_cast<std::size_t>(y)] = 1;
          next.push_back(y);
        }
      }
    span = std::move(next);
  }
  return basis;
}

}  // namespace detail

inline AbelianDecomposition abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw Error(ErrorCode::precondition, "abelian decomposition of a non-abelian group");
  // Prime-power cyclic factors per prime, largest first.
  std::vector<int> primes;
  for (int n = g.order(), p = 2; n > 1; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  std::vector<std::vector<int>> per_prime;
  std::size_t rank = 0;
  for (int p : primes) {
    auto b = detail::sylow_basis(g, p);
    std::sort(b.begin(), b.end(), [&](int x, int y) {
      if (g.element_order(x) != g.element_order(y)) return g.element_order(x) > g.element_order(y);
      return x < y;
    });
    rank = std::max(rank, b.size());
    per_prime.push_back(std::move(b));
  }
  // i-th largest invariant factor combines the i-th largest prime-power factors.
  AbelianDecomposition dec;
  for (std::size_t i = 0; i < rank; ++i) {
    int elem = g.identity();
    for (const auto& b : per_prime)
      if (i < b.size()) elem = g.mul(elem, b[i]);
    dec.basis.push_back(elem);
    dec.orders.push_back(g.element_order(elem));
  }
  std::reverse(dec.basis.begin(), dec.basis.end());
  std::reverse(dec.orders.begin(), dec.orders.end());
  dec.coordinates.assign(static_cast<std::size_t>(g.order()), {});
  std::vector<int> coord(dec.basis.size(), 0);
  for (;;) {
    int x = g.identity();
    for (std::size_t i = 0; i < coord.size(); ++i) x = g.mul(x, g.pow(dec.basis[i], coord[i]));
    dec.coordinates[static_cast<std::size_t>(x)] = coord;
    std::size_t i = 0;
    while (i < coord.size() && ++coord[i] == dec.orders[i]) coord[i++] = 0;
    if (i == coord.size()) break;
  }
  return dec;
}

/// All |G| characters G -> mu_{exp(G)}, enumerated lexicographically in the
/// exponents (k_1, ..., k_r) along the invariant-factor basis.
inline std::vector<GroupHom> character_group(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw Error(ErrorCode::precondition, "character_group requires an abelian group");
  auto dec = abelian_decomposition(g);
  const std::int64_t e = g.exponent();
  std::vector<GroupHom> chars;
  std::vector<int> k(dec.basis.size(), 0);
  for (;;) {
    std::vector<RootOfUnity> values;
    for (int x = 0; x < g.order(); ++x) {
      std::int64_t ex = 0;
      const auto& a = dec.coordinates[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < k.size(); ++i) ex += static_cast<std::int64_t>(a[i]) * k[i] * (e / dec.orders[i]);
      values.push_back(RootOfUnity(e, ex));
    }
    chars.push_back(GroupHom::from_values(g, std::move(values)));
    // Last coordinate varies fastest.
    std::size_t i = k.size();
    while (i > 0) {
      --i;
      if (++k[i] < dec.orders[i]) break;
      k[i] = 0;
      if (i == 0) return chars;
    }
    if (k.empty()) return chars;
  }
}

}  // namespace rgv
