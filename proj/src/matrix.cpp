#include "fg/matrix.hpp"

#include <sstream>

namespace fg {

QMat to_rational(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

namespace {

// Row-reduce in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational det(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  QMat a = m;
  std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Rational inv = 1 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

std::size_t rank(const QMat& m) {
  QMat a = m;
  return rref(a).size();
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("singular matrix");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QMat solve(const QMat& m, const QMat& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve shape mismatch");
  return inverse(m) * rhs;
}

QMat kernel_basis(const QMat& m) {
  QMat a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k(fc, j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], j) = -a(r, fc);
  }
  return k;
}

ZMat kernel_basis(const ZMat& m) {
  QMat k = kernel_basis(to_rational(m));
  ZMat z(k.rows(), k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    BigInt l = 1;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      BigInt den = k(i, j).get_den();
      l = l / gcd(l, den) * den;
    }
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Rational v = k(i, j) * Rational(l);
      z(i, j) = v.get_num();
    }
  }
  return z;
}

QMat projective_normalize(const QMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return m * (1 / m(i, j));
  return m;
}

bool projectively_equal(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return projective_normalize(a) == projective_normalize(b);
}

template <typename T>
static std::string matrix_to_string(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(const QMat& m) { return matrix_to_string(m); }
std::string to_string(const ZMat& m) { return matrix_to_string(m); }

}  // namespace fg
