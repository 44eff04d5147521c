#pragma once
// Dense matrices over Q(zeta_N) and exact elimination.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgv/scalars.hpp"

namespace rgv {

class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols, int conductor)
      : rows_(rows), cols_(cols), conductor_(conductor), a_(rows * cols, Cyclotomic(conductor)) {}

  static CycMatrix identity(std::size_t n, int conductor) {
    CycMatrix m(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(conductor);
    return m;
  }
  static CycMatrix scalar(const Cyclotomic& x) {
    CycMatrix m(1, 1, x.conductor());
    m(0, 0) = x;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }
  /// Scalar multiple of the identity; returns the scalar.
  std::optional<Cyclotomic> as_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return std::nullopt;
        if (i == j && (*this)(i, j) != (*this)(0, 0)) return std::nullopt;
      }
    return (*this)(0, 0);
  }

  CycMatrix transpose() const {
    CycMatrix t(cols_, rows_, conductor_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  CycMatrix scaled(const Cyclotomic& s) const {
    CycMatrix m = *this;
    for (auto& x : m.a_)
      if (!x.is_zero()) x = x * s;
    return m;
  }
  CycMatrix scaled(const RootOfUnity& r) const {
    if (r.is_one()) return *this;
    CycMatrix m = *this;
    for (auto& x : m.a_)
      if (!x.is_zero()) x = x.times(r);
    return m;
  }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::internal, "matrix shape mismatch in product");
    CycMatrix c(a.rows_, b.cols_, a.conductor_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Cyclotomic& x = a(i, k);
        if (x.is_zero()) continue;
        bool unit = x.is_one();
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Cyclotomic& y = b(k, j);
          if (y.is_zero()) continue;
          if (unit)
            c(i, j) += y;
          else
            c(i, j) += x * y;
        }
      }
    return c;
  }
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorCode::internal, "matrix shape mismatch in sum");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorCode::internal, "matrix shape mismatch in difference");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  /// Gauss-Jordan inverse; throws if singular.
  CycMatrix inverse() const;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).str();
      }
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  int conductor_ = 1;
  std::vector<Cyclotomic> a_;
};

/// Kronecker product a (x) b, with (i1,i2) -> i1 * b.rows() + i2.
inline CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.conductor());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Cyclotomic& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Cyclotomic& y = b(i2, j2);
          if (y.is_zero()) continue;
          k(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return k;
}

inline CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::internal, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  CycMatrix a = *this;
  CycMatrix inv = identity(n, conductor_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::internal, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Cyclotomic s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) = a(c, j) * s;
      if (!inv(c, j).is_zero()) inv(c, j) = inv(c, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Cyclotomic f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Rank by fraction-free (Bareiss) elimination. Every intermediate entry is a
/// minor of the input, so entries stay integral when the input is integral in
/// Z[zeta]; the division by the previous pivot is exact.
inline std::size_t bareiss_rank(CycMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const int n = m.conductor();
  std::size_t r = 0;
  Cyclotomic prev = Cyclotomic::one(n);
  Cyclotomic prev_inv = Cyclotomic::one(n);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Cyclotomic pivot = m(r, c);
    const Cyclotomic ratio = pivot * prev_inv;
    const bool ratio_one = ratio.is_one();
    std::vector<std::size_t> pivot_support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!m(r, j).is_zero()) pivot_support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Cyclotomic lead = m(i, c);
      if (lead.is_zero()) {
        // Row update degenerates to a rescaling by pivot / prev.
        if (!ratio_one)
          for (std::size_t j = c + 1; j < cols; ++j)
            if (!m(i, j).is_zero()) m(i, j) = m(i, j) * ratio;
        continue;
      }
      m(i, c) = Cyclotomic(n);
      Cyclotomic lead_scaled = lead * prev_inv;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!ratio_one && !m(i, j).is_zero()) m(i, j) = m(i, j) * ratio;
      for (std::size_t j : pivot_support) m(i, j) -= lead_scaled * m(r, j);
    }
    prev = pivot;
    prev_inv = pivot.inverse();
    ++r;
  }
  return r;
}

inline std::size_t nullity(const CycMatrix& m) { return m.cols() - bareiss_rank(m); }

}  // namespace rgv
