#pragma once

#include "fg/symplectic.hpp"
#include "fg/traintrack.hpp"

namespace fg {

// The two elementary rewrites produced by opening a zipper through a switch
// tie, plus their mirror images.  The site names the middle branch m:
//   I   : m is the out-branch at both of its switches
//   II  : m is the left input at one switch and the out-branch at the other
//   IIm : as II with left and right exchanged
//   Im  : as I with left and right exchanged (same sites as I)
enum class MoveKind { I, II, I_mirror, II_mirror };

struct MoveSpec {
  MoveKind kind;
  int branch;  // the middle branch m
};

MoveKind move_kind_from_string(const std::string& s);
std::string to_string(MoveKind k);

// Branches whose attachments match the move pattern.  Move I sites exclude
// the degenerate overlaps in which a right-input branch would need both an
// identity row and a rewritten row in the substitution.
std::vector<int> eligible_sites(const Track& track, MoveKind kind);

struct MoveResult {
  Track track;  // validated
  ZMat subst;   // D_old x D_new: old dot coordinates in terms of new ones
  int new_branch = -1;
};

// Rewires the site and expresses every old dot coordinate as an integer
// combination of new ones.  Unchanged dots get standard basis rows.
MoveResult apply_move(const Track& track, const MoveSpec& spec, int n);

// On the constraint subspace the pulled-back old form equals the new form:
// with K' a kernel basis of the new switch relations,
//   (M K')^T Omega_old (M K') == K'^T Omega_new K'.
bool invariance_check(const Track& track, const MoveSpec& spec, int n);

// The substitution carries new on-shell vectors to old on-shell vectors.
bool kernel_transport_check(const Track& track, const MoveSpec& spec, int n);

// Off-shell comparison M^T Omega_old M vs Omega_new (full matrix equality).
bool unrestricted_identity(const Track& track, const MoveSpec& spec, int n);

}  // namespace fg
