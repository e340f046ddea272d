#include "fg/killing.hpp"

namespace fg {

SlnElem::SlnElem(QMat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("SlnElem must be square");
  if (m_.trace() != 0) throw std::invalid_argument("SlnElem must be traceless");
}

Rational killing_form(const SlnElem& x, const SlnElem& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("killing_form: dimension mismatch");
  return Rational(2 * x.dim()) * (x.mat() * y.mat()).trace();
}

namespace {

void check_triple(int a, int b, int c, int n) {
  if (a < 1 || b < 1 || c < 1 || a + b + c != n)
    throw std::invalid_argument("index triple must be positive and sum to n");
}

void check_pair(int a, int b, int n) {
  if (a < 1 || b < 1 || a + b != n)
    throw std::invalid_argument("index pair must be positive and sum to n");
}

}  // namespace

Rational kf_rl(int a, int b, int c, int ap, int bp, int cp, int n) {
  check_triple(a, b, c, n);
  check_triple(ap, bp, cp, n);
  if (a >= ap || b <= bp) return 2 * ap * b;
  if (c >= cp) return 2 * a * bp - 2 * b * cp + 2 * bp * c;
  return 2 * a * bp + 2 * a * cp - 2 * ap * c;
}

Rational kf_sg_sf(int a, int b, int ap, int bp, int n) {
  check_pair(a, b, n);
  check_pair(ap, bp, n);
  if (a >= ap) return 2 * ap * b;
  return 2 * a * bp;
}

Rational kf_sg_l(int a, int b, int ap, int bp, int cp, int n) {
  check_pair(a, b, n);
  check_triple(ap, bp, cp, n);
  if (a >= ap) return -2 * ap * b;
  return -2 * a * (bp + cp);
}

Rational kf_sf_l(int a, int b, int ap, int bp, int cp, int n) {
  return kf_sg_l(a, b, ap, bp, cp, n);
}

}  // namespace fg
