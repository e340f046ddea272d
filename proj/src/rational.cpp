#include "fg/rational.hpp"

namespace fg {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const BigInt& x) { return x.get_str(); }

long Rng::integer(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(gen_);
}

Rational Rng::nonzero_rational(long span) {
  long num = 0;
  while (num == 0) num = integer(-span, span);
  return make_rational(num, integer(1, span));
}

Rational Rng::positive_rational(long span) {
  return make_rational(integer(1, span), integer(1, span));
}

}  // namespace fg
