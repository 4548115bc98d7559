#pragma once

// Dense exact linear algebra over a field (Rat or Cyc). Sizes here are the
// dimension of one simple Lie algebra or one truncation window, so a dense
// representation with full row reduction is adequate everywhere.

#include "thetaconn/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace thetaconn {

template <class T>
using Vec = std::vector<T>;

template <class T>
bool vec_is_zero(const Vec<T>& v) {
  for (const T& x : v)
    if (!(x == T(0))) return false;
  return true;
}

template <class T>
Vec<T> vec_add(Vec<T> a, const Vec<T>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> vec_sub(Vec<T> a, const Vec<T>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> vec_scale(Vec<T> a, const T& c) {
  for (T& x : a) x *= c;
  return a;
}

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec<T>>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> row(size_t i) const { return Vec<T>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  Mat operator-() const {
    Mat m = *this;
    for (T& x : m.a_) x = -x;
    return m;
  }
  friend Mat operator*(const T& c, Mat m) {
    for (T& x : m.a_) x *= c;
    return m;
  }

  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) throw InternalError("matrix apply shape mismatch");
    Vec<T> out(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) == T(0) || v[j] == T(0)) continue;
        out[i] += (*this)(i, j) * v[j];
      }
    return out;
  }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  /// In-place reduced row echelon form. Returns the pivot column of each
  /// pivot row, in order; rows below the returned count are zero.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == T(0)) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      T inv = T(1) / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        T f = (*this)(i, c);
        if (f == T(0)) continue;
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  /// Basis of {v : M v = 0}, one kernel vector per row, in RREF.
  Mat kernel() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec<T>> basis;
    for (size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Vec<T> v(cols_, T(0));
      v[c] = T(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, c);
      basis.push_back(std::move(v));
    }
    Mat k = Mat::from_rows(basis);
    if (k.rows() > 0) {
      k.cols_ = cols_;  // preserve width even if basis rows empty
      k.rref();
    } else {
      k = Mat(0, cols_);
    }
    return k;
  }

  T det() const {
    if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
    Mat m = *this;
    T d(1);
    for (size_t c = 0; c < cols_; ++c) {
      size_t sel = c;
      while (sel < rows_ && m(sel, c) == T(0)) ++sel;
      if (sel == rows_) return T(0);
      if (sel != c) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      T inv = T(1) / m(c, c);
      for (size_t i = c + 1; i < rows_; ++i) {
        T f = m(i, c) * inv;
        if (f == T(0)) continue;
        for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  Mat inverse() const {
    if (rows_ != cols_) throw InternalError("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = T(1);
    }
    auto piv = aug.rref();
    if (piv.size() != rows_) throw InternalError("matrix not invertible");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
    return out;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

/// A linear subspace of an ambient coordinate space, held as a canonical
/// (reduced echelon, pivot-normalized) basis so that equality of subspaces
/// is equality of matrices.
template <class T>
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_rows(size_t ambient, std::vector<Vec<T>> rows) {
    Subspace s(ambient);
    if (rows.empty()) return s;
    if (rows[0].size() != ambient) throw InternalError("subspace row width mismatch");
    Mat<T> m = Mat<T>::from_rows(rows);
    auto piv = m.rref();
    Mat<T> b(piv.size(), ambient);
    for (size_t i = 0; i < piv.size(); ++i)
      for (size_t j = 0; j < ambient; ++j) b(i, j) = m(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(piv);
    return s;
  }

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Mat<T>& basis() const { return basis_; }
  Vec<T> basis_vector(size_t i) const { return basis_.row(i); }

  bool contains(const Vec<T>& v) const { return static_cast<bool>(coords_of(v)); }

  /// Coefficients of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec<T>> coords_of(const Vec<T>& v) const {
    if (v.size() != ambient_) throw InternalError("subspace ambient mismatch");
    Vec<T> rem = v;
    Vec<T> coords(dim(), T(0));
    for (size_t r = 0; r < dim(); ++r) {
      T c = rem[pivots_[r]];  // by value: the loop below clears this slot
      if (c == T(0)) continue;
      coords[r] = c;
      for (size_t j = 0; j < ambient_; ++j) rem[j] -= c * basis_(r, j);
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coords;
  }

  Vec<T> from_coords(const Vec<T>& coords) const {
    Vec<T> v(ambient_, T(0));
    for (size_t r = 0; r < dim(); ++r)
      for (size_t j = 0; j < ambient_; ++j) v[j] += coords[r] * basis_(r, j);
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vec<T>> rows;
    for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    for (size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
    return from_rows(ambient_, std::move(rows));
  }

  Subspace intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw InternalError("subspace ambient mismatch");
    // v = x*A = y*B: kernel of (A^T | -B^T) over (x, y).
    size_t p = dim(), q = o.dim();
    if (p == 0 || q == 0) return Subspace(ambient_);
    Mat<T> d(ambient_, p + q);
    for (size_t i = 0; i < ambient_; ++i) {
      for (size_t j = 0; j < p; ++j) d(i, j) = basis_(j, i);
      for (size_t j = 0; j < q; ++j) d(i, p + j) = -o.basis_(j, i);
    }
    Mat<T> k = d.kernel();
    std::vector<Vec<T>> rows;
    for (size_t r = 0; r < k.rows(); ++r) {
      Vec<T> v(ambient_, T(0));
      for (size_t j = 0; j < p; ++j)
        for (size_t c = 0; c < ambient_; ++c) v[c] += k(r, j) * basis_(j, c);
      rows.push_back(std::move(v));
    }
    return from_rows(ambient_, std::move(rows));
  }

 private:
  size_t ambient_;
  Mat<T> basis_;
  std::vector<size_t> pivots_;
};

}  // namespace thetaconn
