#pragma once

#include "fg/traintrack.hpp"

namespace fg {

// Antisymmetric coefficient pairing two triangle dots (a,b,c), (a',b',c');
// both triples sum to n.  Piecewise in the six orderings; the branches agree
// wherever two of them apply.
long coeff_face(int a, int b, int c, int ap, int bp, int cp, int n);

// Coefficient pairing a level-a branch dot with a level-a' dot across a
// switch; symmetric, positive.
long coeff_mixed(int a, int ap, int n);

// The symplectic matrix in the dot basis, with the convention
//   omega = sum_{i<j} Omega[i][j] dtheta_i /\ dtheta_j.
// Contributions: per triangle, coeff_face between its dots read at the base
// corner; per switch s, +coeff_mixed on (left dot, right dot), -coeff_mixed
// on (left dot, tau at s), +coeff_mixed on (right dot, tau at s), with all
// dots resolved through sigma_dot / tau_dot.
ZMat build_omega(const Track& track, int n);

// K^T Omega K for a kernel basis K of the switch relations.
QMat restricted_form(const ZMat& omega, const QMat& kernel);

struct RankReport {
  int dots = 0;
  int relation_rank = 0;
  int kernel_dim = 0;
  int omega_restricted_rank = 0;
};

RankReport rank_check(const Track& track, int n);

// build_omega at n == 3 against the matrix assembled directly from the
// switch-local three-term expression.
bool n3_corollary_check(const Track& track);
ZMat n3_corollary_matrix(const Track& track);

}  // namespace fg
