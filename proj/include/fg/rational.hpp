#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace fg {

// All scalar arithmetic in this project is exact. Rational values are kept
// canonical (lowest terms, positive denominator) by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class(p, q) does not reduce; this does.
Rational make_rational(long num, long den);

bool is_integer(const Rational& x);

// "p/q" with q > 0 in lowest terms; plain "p" for integers.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

// Deterministic helpers for property-style tests and the selfcheck command.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi);

  // Nonzero numerator in [-span, span], denominator in [1, span].
  Rational nonzero_rational(long span = 4);

  // Strictly positive rational in (0, span] with denominator up to span.
  Rational positive_rational(long span = 4);

 private:
  std::mt19937_64 gen_;
};

}  // namespace fg
