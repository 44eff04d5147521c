#pragma once
// Ordinary character tables by Dixon's method: common eigenvectors of the class
// multiplication matrices over F_p, lifted to Q(zeta_e) through eigenvalue
// multiplicities.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rgv/error.hpp"
#include "rgv/groups.hpp"
#include "rgv/scalars.hpp"

namespace rgv {

struct CharacterTable {
  ConjugacyClasses classes;
  int conductor = 1;                       ///< exponent of the group
  std::vector<std::vector<Cyclotomic>> chi;  ///< chi[irrep][class]
  std::vector<int> degrees;

  std::size_t size() const { return chi.size(); }
  /// Value on an element.
  const Cyclotomic& value(std::size_t irrep, int g) const {
    return chi[irrep][static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(g)])];
  }
};

namespace detail {

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

using ModMatrix = std::vector<std::vector<std::int64_t>>;

// Basis (as rows) of the right nullspace of m over F_p.
inline ModMatrix nullspace_mod(ModMatrix m, std::size_t cols, std::int64_t p) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && m[k][c] == 0) ++k;
    if (k == rows) continue;
    std::swap(m[k], m[r]);
    std::int64_t inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::int64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  ModMatrix basis;
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-m[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Irreducible characters; trivial character first, then by degree, then by the
/// canonical order of the value vectors. Orthogonality is checked exactly.
inline CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  t.conductor = g.exponent();
  const auto& cls = t.classes;
  const std::size_t r = cls.classes.size();
  const std::int64_t order = g.order();
  const std::int64_t e = g.exponent();

  std::int64_t p = std::max<std::int64_t>(order, 4) + 1;
  while (p % e != 1 % e || !detail::is_prime(p)) ++p;
  const std::int64_t z = detail::powmod(detail::primitive_root(p), (p - 1) / e, p);

  // a[j][k][l] = #{x in C_j : x^-1 g_l in C_k}
  std::vector<detail::ModMatrix> a(r, detail::ModMatrix(r, std::vector<std::int64_t>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      int gl = cls.representatives[l];
      for (int x : cls.classes[j]) {
        int k = cls.class_of[static_cast<std::size_t>(g.mul(g.inv(x), gl))];
        ++a[j][static_cast<std::size_t>(k)][l];
      }
    }

  // Split F_p^r into common eigenspaces, one class matrix at a time.
  std::vector<detail::ModMatrix> spaces;
  {
    detail::ModMatrix id(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(id);
  }
  for (std::size_t j = 0; j < r && spaces.size() < r; ++j) {
    std::vector<detail::ModMatrix> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const std::size_t dim = basis.size();
      // M_j B^T, an r x dim matrix.
      detail::ModMatrix mb(r, std::vector<std::int64_t>(dim, 0));
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t c = 0; c < dim; ++c) {
          std::int64_t s = 0;
          for (std::size_t l = 0; l < r; ++l) s = (s + a[j][k][l] * basis[c][l]) % p;
          mb[k][c] = s;
        }
      std::size_t found = 0;
      for (std::int64_t lam = 0; lam < p && found < dim; ++lam) {
        detail::ModMatrix sys = mb;
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t c = 0; c < dim; ++c) sys[k][c] = mod(sys[k][c] - lam * basis[c][k], p);
        auto coeffs = detail::nullspace_mod(sys, dim, p);
        if (coeffs.empty()) continue;
        detail::ModMatrix sub;
        for (const auto& cv : coeffs) {
          std::vector<std::int64_t> v(r, 0);
          for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t l = 0; l < r; ++l) v[l] = (v[l] + cv[c] * basis[c][l]) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != dim) throw Error(ErrorCode::internal, "class matrix not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(ErrorCode::internal, "character table splitting failed");

  const std::size_t id_class = static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(g.identity())]);
  std::vector<std::size_t> inv_class(r);
  for (std::size_t l = 0; l < r; ++l)
    inv_class[l] = static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(g.inv(cls.representatives[l]))]);

  for (const auto& sp : spaces) {
    std::vector<std::int64_t> w = sp[0];
    std::int64_t s = detail::invmod(w[id_class], p);
    for (auto& x : w) x = x * s % p;
    std::int64_t sum = 0;
    for (std::size_t l = 0; l < r; ++l) {
      std::int64_t h = static_cast<std::int64_t>(cls.classes[l].size());
      sum = (sum + w[l] * w[inv_class[l]] % p * detail::invmod(h, p)) % p;
    }
    std::int64_t n2 = order % p * detail::invmod(sum, p) % p;
    std::int64_t deg = 0;
    for (std::int64_t n = 1; n * n <= order; ++n)
      if (n * n % p == n2) {
        deg = n;
        break;
      }
    if (deg == 0) throw Error(ErrorCode::internal, "character degree recovery failed");
    // Values mod p on every element.
    std::vector<std::int64_t> val(r);
    for (std::size_t l = 0; l < r; ++l)
      val[l] = deg * w[l] % p * detail::invmod(static_cast<std::int64_t>(cls.classes[l].size()), p) % p;
    std::vector<Cyclotomic> row;
    for (std::size_t l = 0; l < r; ++l) {
      int x = cls.representatives[l];
      std::int64_t o = g.element_order(x);
      std::int64_t zo = detail::powmod(z, e / o, p);
      std::vector<Rational> raw(static_cast<std::size_t>(e));
      std::int64_t total = 0;
      for (std::int64_t k = 0; k < o; ++k) {
        std::int64_t m = 0;
        for (std::int64_t jj = 0; jj < o; ++jj) {
          int xj = g.pow(x, jj);
          std::int64_t cv = val[static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(xj)])];
          m = (m + cv * detail::powmod(zo, mod(-k * jj, o), p)) % p;
        }
        m = m * detail::invmod(o, p) % p;
        if (m > deg) throw Error(ErrorCode::internal, "eigenvalue multiplicity out of range");
        total += m;
        raw[static_cast<std::size_t>(k * (e / o))] += m;
      }
      if (total != deg) throw Error(ErrorCode::internal, "eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::reduce(static_cast<int>(e), std::move(raw)));
    }
    t.chi.push_back(std::move(row));
    t.degrees.push_back(static_cast<int>(deg));
  }

  // Trivial first, then degree, then values.
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  auto is_trivial = [&](std::size_t i) {
    for (const auto& v : t.chi[i])
      if (!v.is_one()) return false;
    return true;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (t.degrees[x] != t.degrees[y]) return t.degrees[x] < t.degrees[y];
    for (std::size_t l = 0; l < r; ++l) {
      if (canonical_less(t.chi[x][l], t.chi[y][l])) return true;
      if (canonical_less(t.chi[y][l], t.chi[x][l])) return false;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.classes = t.classes;
  sorted.conductor = t.conductor;
  for (auto i : idx) {
    sorted.chi.push_back(t.chi[i]);
    sorted.degrees.push_back(t.degrees[i]);
  }

  // Exact orthonormality.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic s(static_cast<int>(e));
      for (std::size_t l = 0; l < r; ++l)
        s += sorted.chi[i][l] * sorted.chi[j][l].conj() * Rational(static_cast<long>(cls.classes[l].size()));
      s *= Rational(1, static_cast<unsigned long>(order));
      if (i == j ? !s.is_one() : !s.is_zero())
        throw Error(ErrorCode::internal, "character table fails orthogonality", {{"pair", {i, j}}});
    }
  return sorted;
}

}  // namespace rgv
