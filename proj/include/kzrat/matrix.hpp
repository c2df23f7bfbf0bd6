#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kzrat/errors.hpp"

namespace kzrat {

/// Dense row-major matrix over an exact ring. T{} must be the ring's zero and
/// T(1) its unit.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size != rows*cols");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const T> data() const { return data_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix row(std::size_t i) const {
    Matrix r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  /// Entrywise conversion into another ring.
  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    using U = decltype(fn(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(fn(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
  return a.map([](const T& x) { return -x; });
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  return a + (-b);
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
  }
  return c;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
  return m.map([&s](const T& x) { return s * x; });
}

/// Exact matrix product; named form of operator*.
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b;
}

}  // namespace kzrat
