#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "tiltlab/rational.hpp"

namespace tiltlab {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == c);
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  Matrix scaled(const T& c) const {
    Matrix s = *this;
    for (T& x : s.data_) x *= c;
    return s;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    assert(v.size() == cols_);
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  // Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
  }
  void add_block(std::size_t r, std::size_t c, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) += block(i, j);
  }
  Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

}  // namespace tiltlab
