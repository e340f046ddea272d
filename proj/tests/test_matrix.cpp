#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/matrix.hpp"

using namespace fg;

TEST_CASE("rational printing") {
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(8, 2)) == "4");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("det and inverse") {
  QMat m{{Rational(1), Rational(1), Rational(0)},
         {Rational(0), Rational(1), Rational(1)},
         {Rational(0), Rational(1), Rational(2)}};
  CHECK(det(m) == 1);
  QMat inv = inverse(m);
  CHECK(inv * m == QMat::identity(3));

  QMat sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(det(sing) == 0);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("rank and kernel") {
  QMat id = QMat::identity(4);
  CHECK(rank(id) == 4);
  CHECK(kernel_basis(id).cols() == 0);

  QMat zero(3, 5);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).cols() == 5);

  QMat m{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  CHECK(rank(m) == 1);
  QMat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("integer kernel is cleared of denominators") {
  ZMat m(1, 3);
  m(0, 0) = 2;
  m(0, 1) = 3;
  m(0, 2) = 5;
  ZMat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((to_rational(m) * to_rational(k)).is_zero());
}

TEST_CASE("projective normalization") {
  QMat a{{Rational(0), Rational(2)}, {Rational(4), Rational(6)}};
  QMat b{{Rational(0), Rational(1)}, {Rational(2), Rational(3)}};
  CHECK(projectively_equal(a, b));
  CHECK(projective_normalize(a) == b);
  QMat c{{Rational(0), Rational(1)}, {Rational(2), Rational(4)}};
  CHECK(!projectively_equal(a, c));
}
