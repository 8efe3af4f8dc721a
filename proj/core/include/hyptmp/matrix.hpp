#pragma once

#include "hyptmp/quadext.hpp"
#include "hyptmp/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyptmp {

using Index = std::size_t;
using IndexList = std::vector<Index>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (Index i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(Index i, Index j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(Index i, Index j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix sub(const IndexList& r, const IndexList& c) const {
    Matrix s(r.size(), c.size());
    for (Index i = 0; i < r.size(); ++i)
      for (Index j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
    return s;
  }
  Matrix principal(const IndexList& idx) const { return sub(idx, idx); }

  std::vector<T> col(Index j) const {
    std::vector<T> v(rows_);
    for (Index i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }
  bool is_symmetric() const {
    if (!square()) return false;
    for (Index i = 0; i < rows_; ++i)
      for (Index j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (Index i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (Index i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
  friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
  friend Matrix operator*(Matrix l, const T& s) { return l *= s; }
  friend Matrix operator*(const T& s, Matrix l) { return l *= s; }
  friend Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.cols_ != r.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix p(l.rows_, r.cols_);
    for (Index i = 0; i < l.rows_; ++i)
      for (Index t = 0; t < l.cols_; ++t) {
        const T& lv = l(i, t);
        if (lv == 0) continue;
        for (Index j = 0; j < r.cols_; ++j) p(i, j) += lv * r(t, j);
      }
    return p;
  }
  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
  }
  friend bool operator!=(const Matrix& l, const Matrix& r) { return !(l == r); }

  std::string str() const {
    std::string s;
    for (Index i = 0; i < rows_; ++i) {
      s += "[";
      for (Index j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        if constexpr (requires(const T& v) { v.str(); })
          s += (*this)(i, j).str();
        else
          s += (*this)(i, j).get_str();
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<T> data_;
};

using RatMat = Matrix<Rat>;
using QMat = Matrix<QuadExt>;

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x^T m y for column vectors given as std::vector.
template <class T>
T bilinear(const std::vector<T>& x, const Matrix<T>& m, const std::vector<T>& y) {
  T s(0);
  for (Index i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    T row(0);
    for (Index j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

IndexList range(Index n);
IndexList range(Index from, Index to);
IndexList without(const IndexList& idx, Index drop);

}  // namespace hyptmp
