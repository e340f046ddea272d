#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "fg/rational.hpp"

namespace fg {

// Dense matrix over an exact GMP scalar (Rational or BigInt).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += v * o(k, j);
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }

  Matrix operator*(const T& c) const {
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
    return s;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  T trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    T t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using QMat = Matrix<Rational>;
using ZMat = Matrix<BigInt>;

QMat to_rational(const ZMat& m);

// Exact Gaussian elimination.
Rational det(const QMat& m);
std::size_t rank(const QMat& m);
QMat inverse(const QMat& m);  // throws on singular input

// Solve m x = rhs for a single column; throws if m is singular.
QMat solve(const QMat& m, const QMat& rhs);

// Columns span ker m; empty (cols()==0) for injective m.
QMat kernel_basis(const QMat& m);
ZMat kernel_basis(const ZMat& m);  // rational kernel of an integer matrix, cleared to integers

// Scale so the first nonzero entry in row-major order becomes 1.
QMat projective_normalize(const QMat& m);
bool projectively_equal(const QMat& a, const QMat& b);

std::string to_string(const QMat& m);
std::string to_string(const ZMat& m);

}  // namespace fg
