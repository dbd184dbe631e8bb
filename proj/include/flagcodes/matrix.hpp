#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/field.hpp"

namespace flagcodes {

/// Dense row-major matrix over one field level.
///
/// Holds a non-owning pointer to its level; the level (usually owned by a
/// FieldTower) must outlive every matrix built over it. Zero-row matrices are
/// allowed so that the zero subspace has a basis.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const GaloisField& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(const GaloisField& f, std::size_t rows, std::size_t cols, std::vector<Code> data)
      : field_(&f), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InvalidArgument("matrix data size mismatch");
    for (Code c : data_)
      if (!f.contains(c)) throw InvalidArgument("matrix entry outside field level");
  }
  Matrix(const GaloisField& f, std::initializer_list<std::initializer_list<Code>> rows) : field_(&f) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      for (Code c : r) {
        if (!f.contains(c)) throw InvalidArgument("matrix entry outside field level");
        data_.push_back(c);
      }
    }
  }

  static Matrix identity(const GaloisField& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix scalar(const GaloisField& f, std::size_t n, Code a) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
    return m;
  }

  const GaloisField& field() const { return *field_; }
  const GaloisField* field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Code>& data() const noexcept { return data_; }

  Code& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Code operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Code> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Code> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const noexcept {
    for (Code c : data_)
      if (c) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    if (a.field_ != b.field_) throw InvalidArgument("matrix product across field levels");
    const GaloisField& f = *a.field_;
    Matrix r(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Code x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(l, j)));
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
    return a;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& c : r.data_) c = field_->neg(c);
    return r;
  }
  friend Matrix operator*(Code s, Matrix m) {
    for (auto& c : m.data_) c = m.field_->mul(s, c);
    return m;
  }

  Matrix pow(std::uint64_t e) const {
    if (!is_square()) throw InvalidArgument("power of a non-square matrix");
    Matrix r = identity(*field_, rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Matrix transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block outside matrix");
    Matrix b(*field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InvalidArgument("block outside matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Rows of `top` followed by rows of `bottom`.
  static Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) throw InvalidArgument("stack: column mismatch");
    Matrix r(*top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), r.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), r.data_.begin() + std::ptrdiff_t(top.data_.size()));
    return r;
  }
  /// [left | right]
  static Matrix concat(const Matrix& left, const Matrix& right) {
    if (left.rows_ != right.rows_) throw InvalidArgument("concat: row mismatch");
    Matrix r(*left.field_, left.rows_, left.cols_ + right.cols_);
    r.set_block(0, 0, left);
    r.set_block(0, left.cols_, right);
    return r;
  }
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix r(*field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      std::copy_n(data_.begin() + std::ptrdiff_t(idx[i] * cols_), cols_, r.data_.begin() + std::ptrdiff_t(i * cols_));
    return r;
  }

  std::size_t hash() const noexcept {
    std::size_t h = rows_ * 1315423911u + cols_;
    for (Code c : data_) h = h * 1000003u ^ c;
    return h;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_) throw InvalidArgument("matrix shape mismatch");
  }

  const GaloisField* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Code> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

struct RrefResult {
  Matrix matrix;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  const GaloisField& f = m.field();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Code s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Code t = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline Code determinant(Matrix m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const GaloisField& f = m.field();
  const std::size_t n = m.rows();
  Code det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Code s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Code t = f.mul(m(i, c), s);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(c, j)));
    }
  }
  return det;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(Matrix::concat(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw InvalidArgument("matrix is singular");
  return r.matrix.block(0, n, n, n);
}

}  // namespace flagcodes

template <>
struct std::hash<flagcodes::Matrix> {
  std::size_t operator()(const flagcodes::Matrix& m) const noexcept { return m.hash(); }
};
