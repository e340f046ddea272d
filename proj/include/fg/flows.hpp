#pragma once

#include "fg/flag.hpp"

namespace fg {

// One-parameter eruption and shearing flows at a rational multiplier u (the
// exponentiated amplitude), plus their traceless generators.  All maps act on
// the direct-sum decomposition R^n = E^(a) (+) F^(b) (+) G^(c).

// u^{-1} on E^(a), identity on F^(b) and G^(c).
QMat eruption_left(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c,
                   const Rational& u);

// identity on E^(a) and G^(c), u on F^(b).
QMat eruption_right(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c,
                    const Rational& u);

// u on E^(a), identity on F^(b); a + b == n.
QMat shear(const Flag& e, const Flag& f, int a, int b, const Rational& u);

// Traceless generators of the flows above (derivative at u == 1).
QMat gen_eruption_left(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c);
QMat gen_eruption_right(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c);
QMat gen_shear(const Flag& e, const Flag& f, int a, int b);

enum class TripleOrder { EFG, FGE, GEF };

// Projection onto the first summand of the permuted decomposition, zero on
// the other two.  The middle or last index may be zero (that flag is then
// ignored), e.g. the shear generator decomposes against a two-term sum.
QMat projection(TripleOrder order, const Flag& e, const Flag& f, const Flag& g,
                int i, int j, int k);

}  // namespace fg
