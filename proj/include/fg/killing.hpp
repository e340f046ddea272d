#pragma once

#include "fg/matrix.hpp"

namespace fg {

// Traceless square rational matrix; the pairing domain.
class SlnElem {
 public:
  explicit SlnElem(QMat m);  // throws unless trace is exactly zero
  const QMat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  QMat m_;
};

// K(X, Y) = 2n Tr(XY); symmetric bilinear.
Rational killing_form(const SlnElem& x, const SlnElem& y);

// Closed-form pairing tables.  Index triples sum to n, pairs sum to n; the
// case splits overlap and agree on the overlaps.

// Pairing of the right-eruption generator at (a,b,c) against the left one at
// (a',b',c').
Rational kf_rl(int a, int b, int c, int ap, int bp, int cp, int n);

// Shear along (E,G) against shear along (E,F).
Rational kf_sg_sf(int a, int b, int ap, int bp, int n);

// Shear along (E,G) against the left eruption at (a',b',c').
Rational kf_sg_l(int a, int b, int ap, int bp, int cp, int n);

// Shear along (E,F) against the left eruption; same table as kf_sg_l.
Rational kf_sf_l(int a, int b, int ap, int bp, int cp, int n);

}  // namespace fg
