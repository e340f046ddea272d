#include "fg/flows.hpp"

namespace fg {

namespace {

// Columns of the concatenated leading bases; throws when the pieces fail to
// span, which is exactly a max-span / transversality violation.
QMat summand_basis(const Flag& e, int a, const Flag& f, int b, const Flag& g, int c) {
  int n = e.dim();
  if (a + b + c != n) throw std::invalid_argument("direct sum indices must sum to n");
  QMat m(n, n);
  int col = 0;
  for (int i = 0; i < a; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = e.basis()(i, r);
  for (int i = 0; i < b; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = f.basis()(i, r);
  for (int i = 0; i < c; ++i, ++col)
    for (int r = 0; r < n; ++r) m(r, col) = g.basis()(i, r);
  return m;
}

// diag(w0 x a, w1 x b, w2 x c) in the decomposition basis, conjugated back.
QMat block_scalar(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c,
                  const Rational& w0, const Rational& w1, const Rational& w2) {
  int n = e.dim();
  QMat basis = summand_basis(e, a, f, b, g, c);
  QMat d(n, n);
  for (int i = 0; i < a; ++i) d(i, i) = w0;
  for (int i = a; i < a + b; ++i) d(i, i) = w1;
  for (int i = a + b; i < n; ++i) d(i, i) = w2;
  QMat inv;
  try {
    inv = inverse(basis);
  } catch (const std::domain_error&) {
    throw DegenerateConfig("decomposition is not a direct sum");
  }
  return basis * d * inv;
}

void check_positive(const Rational& u) {
  if (u <= 0) throw std::invalid_argument("flow multiplier must be positive");
}

void require_max_span(const Flag& e, const Flag& f, const Flag& g) {
  if (!is_max_span(e, f, g)) throw DegenerateConfig("flag triple is not maximum-span");
}

void require_transverse(const Flag& e, const Flag& f) {
  int n = e.dim();
  for (int k = 1; k < n; ++k)
    if (wedge(e, k, f, n - k, f, 0) == 0)
      throw DegenerateConfig("flag pair is not transverse");
}

}  // namespace

QMat eruption_left(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c,
                   const Rational& u) {
  check_positive(u);
  require_max_span(e, f, g);
  return block_scalar(e, f, g, a, b, c, 1 / u, 1, 1);
}

QMat eruption_right(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c,
                    const Rational& u) {
  check_positive(u);
  require_max_span(e, f, g);
  return block_scalar(e, f, g, a, b, c, 1, u, 1);
}

QMat shear(const Flag& e, const Flag& f, int a, int b, const Rational& u) {
  check_positive(u);
  require_transverse(e, f);
  return block_scalar(e, f, f, a, b, 0, u, 1, 1);
}

QMat gen_eruption_left(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c) {
  int n = e.dim();
  return block_scalar(e, f, g, a, b, c, make_rational(-b - c, n), make_rational(a, n),
                      make_rational(a, n));
}

QMat gen_eruption_right(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c) {
  int n = e.dim();
  return block_scalar(e, f, g, a, b, c, make_rational(-b, n), make_rational(a + c, n),
                      make_rational(-b, n));
}

QMat gen_shear(const Flag& e, const Flag& f, int a, int b) {
  int n = e.dim();
  return block_scalar(e, f, f, a, b, 0, make_rational(b, n), make_rational(-a, n), 0);
}

QMat projection(TripleOrder order, const Flag& e, const Flag& f, const Flag& g,
                int i, int j, int k) {
  const Flag* p[3] = {&e, &f, &g};
  switch (order) {
    case TripleOrder::EFG: break;
    case TripleOrder::FGE: p[0] = &f; p[1] = &g; p[2] = &e; break;
    case TripleOrder::GEF: p[0] = &g; p[1] = &e; p[2] = &f; break;
  }
  return block_scalar(*p[0], *p[1], *p[2], i, j, k, 1, 0, 0);
}

}  // namespace fg
