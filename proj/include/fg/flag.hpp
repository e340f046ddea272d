#pragma once

#include <vector>

#include "fg/matrix.hpp"
#include "fg/rational.hpp"

namespace fg {

// A complete flag in Q^n, stored as an ordered basis: the a-dimensional
// subspace is the span of the first a basis vectors (rows).
class Flag {
 public:
  Flag() = default;
  explicit Flag(QMat basis_rows);  // throws if rows are dependent

  int dim() const { return static_cast<int>(basis_.rows()); }
  const QMat& basis() const { return basis_; }

  // Row vector i (0-indexed) as a 1 x n matrix.
  QMat vec(int i) const;

  // First a rows as an a x n matrix.
  QMat subspace(int a) const;

  static Flag ascending_standard(int n);
  static Flag descending_standard(int n);

 private:
  QMat basis_;
};

// Equality of nested subspaces, decided by rank computations per level.
bool flags_equal(const Flag& a, const Flag& b);

// Matrix acting on a flag: transforms every basis vector.
Flag apply(const QMat& m, const Flag& f);

struct FlagTriple {
  Flag E, F, G;
};

class DegenerateConfig : public std::domain_error {
 public:
  explicit DegenerateConfig(const std::string& what) : std::domain_error(what) {}
};

// Determinant of the n x n matrix whose columns are the given n tuples.
Rational wedge_det(const std::vector<std::vector<Rational>>& vectors);

// det[ e_1..e_a | f_1..f_b | g_1..g_c ] for the leading basis vectors of the
// three flags.  This is the common evaluation behind the ratio invariants.
Rational wedge(const Flag& e, int a, const Flag& f, int b, const Flag& g, int c);

// dim(E^(a) + F^(b) + G^(c)) == min(a+b+c, n) for all index triples.
bool is_max_span(const Flag& e, const Flag& f, const Flag& g);

// Ratio of six wedge determinants; a+b+c == n, all indices >= 1.
Rational triple_ratio(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c);

// Four-wedge ratio with leading minus sign; depends on G, H only through
// their lines G^(1), H^(1).  a+b == n.
Rational double_ratio(const Flag& e, const Flag& f, const Flag& g, const Flag& h,
                      int a, int b);

// Basis e_1..e_n with ascending flag E, descending flag F and e_1+...+e_n
// spanning g_line; normalized so the first nonzero coordinate of e_1 is 1.
// g_line is a single nonzero coordinate tuple (1 x n).
QMat adapted_basis(const Flag& e, const Flag& f, const QMat& g_line);

// Invertible matrix sending (E', F', G'_line) to (E, F, G_line); unique
// projectively, normalized so its first nonzero entry is 1.
QMat projective_map_between_triples(const Flag& e, const Flag& f, const QMat& g_line,
                                    const Flag& ep, const Flag& fp, const QMat& gp_line);

// Unique unipotent matrix fixing the flag `fixed` and sending `from` to `to`.
QMat unipotent_transport(const Flag& fixed, const Flag& from, const Flag& to);

enum class SharedEnd { first, second };

// shared == first: fixes E, sends F_prime to F.
// shared == second: fixes F, sends F_prime (in the E role) to E.
QMat slithering_elementary(SharedEnd shared, const Flag& e, const Flag& f,
                           const Flag& f_prime);

// Osculating flags of the moment curve t -> (1, t, t^2, ..., t^{n-1}) at a
// rational parameter; t == infinity gives the descending standard flag.
Flag osculating_flag(int n, const Rational& t);

// Osculating triple at 0, infinity, 1; maximum-span with positive ratios.
FlagTriple standard_positive_triple(int n);

}  // namespace fg
