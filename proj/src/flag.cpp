#include "fg/flag.hpp"

namespace fg {

Flag::Flag(QMat basis_rows) : basis_(std::move(basis_rows)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() < 2)
    throw std::invalid_argument("flag basis must be square, n >= 2");
  if (det(basis_) == 0) throw DegenerateConfig("flag basis is singular");
}

QMat Flag::vec(int i) const {
  QMat v(1, basis_.cols());
  for (std::size_t j = 0; j < basis_.cols(); ++j) v(0, j) = basis_(i, j);
  return v;
}

QMat Flag::subspace(int a) const {
  QMat s(a, basis_.cols());
  for (int i = 0; i < a; ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) s(i, j) = basis_(i, j);
  return s;
}

Flag Flag::ascending_standard(int n) { return Flag(QMat::identity(n)); }

Flag Flag::descending_standard(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return Flag(m);
}

namespace {

QMat stack(const QMat& a, const QMat& b) {
  QMat s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

}  // namespace

bool flags_equal(const Flag& a, const Flag& b) {
  if (a.dim() != b.dim()) return false;
  for (int k = 1; k < a.dim(); ++k)
    if (rank(stack(a.subspace(k), b.subspace(k))) != static_cast<std::size_t>(k))
      return false;
  return true;
}

Flag apply(const QMat& m, const Flag& f) {
  return Flag(f.basis() * m.transpose());
}

Rational wedge_det(const std::vector<std::vector<Rational>>& vectors) {
  std::size_t n = vectors.size();
  QMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (vectors[j].size() != n) throw std::invalid_argument("wedge_det: tuple length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vectors[j][i];
  }
  return det(m);
}

Rational wedge(const Flag& e, int a, const Flag& f, int b, const Flag& g, int c) {
  int n = e.dim();
  if (a + b + c != n) throw std::invalid_argument("wedge: indices must sum to n");
  QMat m(n, n);
  int col = 0;
  for (int i = 0; i < a; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = e.basis()(i, r);
  for (int i = 0; i < b; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = f.basis()(i, r);
  for (int i = 0; i < c; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = g.basis()(i, r);
  return det(m);
}

bool is_max_span(const Flag& e, const Flag& f, const Flag& g) {
  int n = e.dim();
  if (f.dim() != n || g.dim() != n) throw std::invalid_argument("dimension mismatch");
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      if (wedge(e, a, f, b, g, c) == 0) return false;
    }
  return true;
}

Rational triple_ratio(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c) {
  int n = e.dim();
  if (a < 1 || b < 1 || c < 1 || a + b + c != n)
    throw std::invalid_argument("triple_ratio: invalid indices");
  Rational d1 = wedge(e, a - 1, f, b, g, c + 1);
  Rational d2 = wedge(e, a, f, b + 1, g, c - 1);
  Rational d3 = wedge(e, a + 1, f, b - 1, g, c);
  if (d1 == 0 || d2 == 0 || d3 == 0)
    throw DegenerateConfig("triple_ratio: degenerate flag triple");
  return wedge(e, a + 1, f, b, g, c - 1) / d1 *
         (wedge(e, a, f, b - 1, g, c + 1) / d2) *
         (wedge(e, a - 1, f, b + 1, g, c) / d3);
}

Rational double_ratio(const Flag& e, const Flag& f, const Flag& g, const Flag& h,
                      int a, int b) {
  int n = e.dim();
  if (a < 1 || b < 1 || a + b != n) throw std::invalid_argument("double_ratio: invalid indices");
  Rational num1 = wedge(e, a, f, n - a - 1, g, 1);
  Rational den1 = wedge(e, a, f, n - a - 1, h, 1);
  Rational num2 = wedge(e, a - 1, f, n - a, h, 1);
  Rational den2 = wedge(e, a - 1, f, n - a, g, 1);
  if (den1 == 0 || den2 == 0)
    throw DegenerateConfig("double_ratio: transversality failure");
  return -(num1 / den1) * (num2 / den2);
}

namespace {

// The line E^(i) /\ F^(n-i+1); throws if the pair is not transverse there.
// A vector x^T E^(i) lies in F^(n-i+1) iff (x, y) solves the homogeneous
// system x^T E^(i) = y^T F^(n-i+1), whose kernel is 1-dimensional exactly
// in the transverse case.
QMat line_intersection(const Flag& e, const Flag& f, int i) {
  int n = e.dim();
  QMat es = e.subspace(i);
  QMat fs1 = f.subspace(n - i + 1);
  QMat sys(n, i + (n - i + 1));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < i; ++k) sys(r, k) = es(k, r);
    for (int k = 0; k < n - i + 1; ++k) sys(r, i + k) = -fs1(k, r);
  }
  QMat ker = kernel_basis(sys);
  if (ker.cols() != 1) throw DegenerateConfig("flag pair not transverse");
  QMat v(1, n);
  for (int r = 0; r < n; ++r) {
    Rational acc = 0;
    for (int k = 0; k < i; ++k) acc += ker(k, 0) * es(k, r);
    v(0, r) = acc;
  }
  bool zero = true;
  for (int r = 0; r < n; ++r)
    if (v(0, r) != 0) zero = false;
  if (zero) throw DegenerateConfig("flag pair not transverse");
  return v;
}

}  // namespace

QMat adapted_basis(const Flag& e, const Flag& f, const QMat& g_line) {
  int n = e.dim();
  if (g_line.rows() != 1 || g_line.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("adapted_basis: g_line must be 1 x n");
  QMat basis(n, n);
  for (int i = 1; i <= n; ++i) {
    QMat v = line_intersection(e, f, i);
    for (int j = 0; j < n; ++j) basis(i - 1, j) = v(0, j);
  }
  // The per-level lines only assemble to a basis for a fully transverse pair.
  if (det(basis) == 0) throw DegenerateConfig("flag pair not transverse");
  // Scale rows so they sum to a representative of g_line.
  QMat coeffs = solve(basis.transpose(), g_line.transpose());
  for (int i = 0; i < n; ++i) {
    if (coeffs(i, 0) == 0)
      throw DegenerateConfig("adapted_basis: line meets a coordinate hyperplane of the pair");
    for (int j = 0; j < n; ++j) basis(i, j) *= coeffs(i, 0);
  }
  // One global scalar: first nonzero coordinate of e_1 becomes 1.
  Rational lead = 0;
  for (int j = 0; j < n && lead == 0; ++j) lead = basis(0, j);
  Rational inv = 1 / lead;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) *= inv;
  return basis;
}

QMat projective_map_between_triples(const Flag& e, const Flag& f, const QMat& g_line,
                                    const Flag& ep, const Flag& fp, const QMat& gp_line) {
  QMat target = adapted_basis(e, f, g_line);      // rows t_i
  QMat source = adapted_basis(ep, fp, gp_line);   // rows s_i
  // M s_i = t_i  =>  M = T^T (S^T)^{-1} on column vectors.
  QMat m = target.transpose() * inverse(source.transpose());
  return projective_normalize(m);
}

QMat unipotent_transport(const Flag& fixed, const Flag& from, const Flag& to) {
  int n = fixed.dim();
  QMat u(n, n), v(n, n);
  for (int i = 1; i <= n; ++i) {
    QMat ui = line_intersection(to, fixed, i);    // to^(i) /\ fixed^(n-i+1)
    QMat vi = line_intersection(from, fixed, i);  // from^(i) /\ fixed^(n-i+1)
    for (int j = 0; j < n; ++j) {
      u(i - 1, j) = ui(0, j);
      v(i - 1, j) = vi(0, j);
    }
  }
  // The per-level lines only assemble to bases for fully transverse pairs.
  if (det(u) == 0 || det(v) == 0)
    throw DegenerateConfig("unipotent_transport: flag pair not transverse");
  // v_i = sum_{j >= i} c_ij u_j; the transport sends v_i to c_ii u_i.
  QMat c = solve(u.transpose(), v.transpose());  // column i = coords of v_i
  QMat scaled(n, n);
  for (int i = 0; i < n; ++i) {
    const Rational& cii = c(i, i);
    if (cii == 0) throw DegenerateConfig("unipotent_transport: no unipotent solution");
    for (int j = 0; j < n; ++j) scaled(i, j) = cii * u(i, j);
  }
  return scaled.transpose() * inverse(v.transpose());
}

QMat slithering_elementary(SharedEnd shared, const Flag& e, const Flag& f,
                           const Flag& f_prime) {
  if (shared == SharedEnd::first) return unipotent_transport(e, f_prime, f);
  return unipotent_transport(f, f_prime, e);
}

Flag osculating_flag(int n, const Rational& t) {
  // Row k = k-th derivative of (1, t, ..., t^{n-1}), scaled by 1/k!.
  QMat m(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = k; j < n; ++j) {
      // binomial(j, k) t^{j-k}
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), j, k);
      Rational p = 1;
      for (int q = 0; q < j - k; ++q) p *= t;
      m(k, j) = Rational(binom) * p;
    }
  }
  return Flag(m);
}

FlagTriple standard_positive_triple(int n) {
  return FlagTriple{osculating_flag(n, 0), Flag::descending_standard(n),
                    osculating_flag(n, 1)};
}

}  // namespace fg
