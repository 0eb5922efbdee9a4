#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact/polynomial.hpp"

namespace galoisdr {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols, const T& zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Matrix<typename F::Element>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    auto inv = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<typename F::Element> m) {
  return rref(f, m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, in increasing order of
/// the free column. Together they form the canonical (reduced) kernel basis.
template <class F>
std::vector<std::vector<typename F::Element>> kernel(const F& f, Matrix<typename F::Element> m) {
  using E = typename F::Element;
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<E>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<E> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const F& f, const Matrix<typename F::Element>& a,
                                                      const std::vector<typename F::Element>& b) {
  using E = typename F::Element;
  Matrix<E> aug(a.rows(), a.cols() + 1, f.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<E> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

template <class F>
std::optional<Matrix<typename F::Element>> inverse(const F& f, const Matrix<typename F::Element>& a) {
  using E = typename F::Element;
  std::size_t n = a.rows();
  if (a.cols() != n) fail(ErrorCode::Internal, "inverse of a non-square matrix");
  Matrix<E> aug(n, 2 * n, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = f.one();
  }
  auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<E> out(n, n, f.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

template <class F>
typename F::Element determinant(const F& f, Matrix<typename F::Element> m) {
  using E = typename F::Element;
  std::size_t n = m.rows();
  E det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      m.swap_rows(piv, c);
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto inv = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m(r, c))) continue;
      auto factor = f.mul(m(r, c), inv);
      for (std::size_t k = c; k < n; ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(c, k)));
    }
  }
  return det;
}

template <class F>
Matrix<typename F::Element> mat_mul(const F& f, const Matrix<typename F::Element>& a,
                                    const Matrix<typename F::Element>& b) {
  Matrix<typename F::Element> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  }
  return out;
}

template <class F>
std::vector<typename F::Element> mat_vec(const F& f, const Matrix<typename F::Element>& a,
                                         const std::vector<typename F::Element>& v) {
  std::vector<typename F::Element> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k)) || f.is_zero(v[k])) continue;
      out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
    }
  }
  return out;
}

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

/// A subspace kept as a reduced echelon basis. Vectors are added one at a
/// time; membership and coordinates are read off the pivot positions.
template <class F>
class EchelonBasis {
 public:
  using E = typename F::Element;

  EchelonBasis(const F& f, std::size_t dim) : f_(&f), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<std::vector<E>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after reduction against the current basis.
  std::vector<E> reduce(std::vector<E> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E& c = v[pivots_[i]];
      if (f_->is_zero(c)) continue;
      E factor = c;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!f_->is_zero(rows_[i][k])) v[k] = f_->sub(v[k], f_->mul(factor, rows_[i][k]));
      }
    }
    return v;
  }

  bool contains(const std::vector<E>& v) const {
    auto r = reduce(v);
    for (const auto& x : r) {
      if (!f_->is_zero(x)) return false;
    }
    return true;
  }

  /// Adds v if independent; returns whether the rank grew. Keeps the basis
  /// fully reduced.
  bool add(const std::vector<E>& v) {
    auto r = reduce(v);
    std::size_t piv = dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!f_->is_zero(r[k])) {
        piv = k;
        break;
      }
    }
    if (piv == dim_) return false;
    E inv = f_->inv(r[piv]);
    for (auto& x : r) x = f_->mul(x, inv);
    for (auto& row : rows_) {
      if (f_->is_zero(row[piv])) continue;
      E factor = row[piv];
      for (std::size_t k = 0; k < dim_; ++k) row[k] = f_->sub(row[k], f_->mul(factor, r[k]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

  /// Coordinates of v in the echelon basis, or nullopt if v is outside.
  std::optional<std::vector<E>> coordinates(const std::vector<E>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<E> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  std::vector<E> combine(const std::vector<E>& coords) const {
    std::vector<E> v(dim_, f_->zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (f_->is_zero(coords[i])) continue;
      for (std::size_t k = 0; k < dim_; ++k) v[k] = f_->add(v[k], f_->mul(coords[i], rows_[i][k]));
    }
    return v;
  }

 private:
  const F* f_;
  std::size_t dim_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace galoisdr
