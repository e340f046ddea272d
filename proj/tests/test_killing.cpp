#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/flows.hpp"
#include "fg/killing.hpp"

using namespace fg;

namespace {

Flag random_flag(Rng& rng, int n) {
  for (;;) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.integer(-4, 4);
    if (det(m) != 0) return Flag(std::move(m));
  }
}

FlagTriple random_max_span_triple(Rng& rng, int n) {
  for (;;) {
    Flag e = random_flag(rng, n), f = random_flag(rng, n), g = random_flag(rng, n);
    if (is_max_span(e, f, g)) return {e, f, g};
  }
}

SlnElem random_sln(Rng& rng, int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.nonzero_rational();
  Rational t = m.trace();
  m(n - 1, n - 1) -= t;
  return SlnElem(m);
}

}  // namespace

TEST_CASE("killing form basics") {
  SlnElem x(QMat{{make_rational(1, 2), Rational(0)}, {Rational(0), make_rational(-1, 2)}});
  CHECK(killing_form(x, x) == 2);
  SlnElem zero(QMat(2, 2));
  CHECK(killing_form(x, zero) == 0);
  CHECK_THROWS_AS(SlnElem(QMat::identity(2)), std::invalid_argument);

  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.integer(0, 3));
    SlnElem a = random_sln(rng, n), b = random_sln(rng, n), c = random_sln(rng, n);
    CHECK(killing_form(a, b) == killing_form(b, a));
    Rational s = rng.nonzero_rational();
    SlnElem combo(a.mat() * s + c.mat());
    CHECK(killing_form(combo, b) == s * killing_form(a, b) + killing_form(c, b));
  }
}

TEST_CASE("pinned table values") {
  CHECK(kf_rl(1, 1, 1, 1, 1, 1, 3) == 2);
  CHECK(kf_rl(1, 2, 1, 2, 1, 1, 4) == 0);
  CHECK(kf_sg_sf(1, 2, 1, 2, 3) == 4);
  CHECK(kf_sg_l(2, 1, 1, 1, 1, 3) == -2);
  CHECK_THROWS_AS(kf_rl(0, 2, 1, 1, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("case overlaps agree") {
  for (int n = 3; n <= 8; ++n) {
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b)
        for (int ap = 1; ap <= n - 2; ++ap)
          for (int bp = 1; ap + bp <= n - 1; ++bp) {
            int c = n - a - b, cp = n - ap - bp;
            // whenever both the first and a later case of the table apply,
            // their closed forms must coincide
            bool case1 = a >= ap || b <= bp;
            bool case2 = a <= ap && b >= bp && c >= cp;
            bool case3 = a <= ap && b >= bp && c <= cp;
            long v1 = 2 * ap * b;
            long v2 = 2 * a * bp - 2 * b * cp + 2 * bp * c;
            long v3 = 2 * a * bp + 2 * a * cp - 2 * ap * c;
            if (case1 && case2) CHECK(v1 == v2);
            if (case1 && case3) CHECK(v1 == v3);
            if (case2 && case3) CHECK(v2 == v3);
          }
    for (int a = 1; a <= n - 1; ++a) {
      // the two branches of the shear tables agree at a == a'
      CHECK(kf_sg_sf(a, n - a, a, n - a, n) == 2 * a * (n - a));
    }
  }
}

TEST_CASE("tables equal the trace pairing of generators") {
  Rng rng(73);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      auto [e, f, g] = random_max_span_triple(rng, n);
      for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; a + b <= n - 1; ++b)
          for (int ap = 1; ap <= n - 2; ++ap)
            for (int bp = 1; ap + bp <= n - 1; ++bp) {
              int c = n - a - b, cp = n - ap - bp;
              SlnElem r(gen_eruption_right(e, f, g, a, b, c));
              SlnElem l(gen_eruption_left(e, f, g, ap, bp, cp));
              CHECK(killing_form(r, l) == kf_rl(a, b, c, ap, bp, cp, n));
            }
      for (int a = 1; a <= n - 1; ++a) {
        SlnElem sg(gen_shear(e, g, a, n - a));
        SlnElem sf(gen_shear(e, f, a, n - a));
        for (int ap = 1; ap <= n - 1; ++ap) {
          SlnElem sf2(gen_shear(e, f, ap, n - ap));
          CHECK(killing_form(sg, sf2) == kf_sg_sf(a, n - a, ap, n - ap, n));
        }
        for (int ap = 1; ap <= n - 2; ++ap)
          for (int bp = 1; ap + bp <= n - 1; ++bp) {
            int cp = n - ap - bp;
            SlnElem l(gen_eruption_left(e, f, g, ap, bp, cp));
            CHECK(killing_form(sg, l) == kf_sg_l(a, n - a, ap, bp, cp, n));
            CHECK(killing_form(sf, l) == kf_sf_l(a, n - a, ap, bp, cp, n));
          }
      }
    }
  }
}
