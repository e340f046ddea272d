#pragma once

#include <array>
#include <cstdint>

#include "fg/flag.hpp"

namespace fg {

// A cyclically ordered tuple of flags at the vertices of a convex polygon
// (counterclockwise), triangulated by diagonals.  Vertex order stands in for
// the circular order at infinity, so left/right of an oriented diagonal is
// decided by which arc a vertex lies in.
struct PolygonConfig {
  int flag_dim = 0;
  std::vector<Flag> flags;                    // counterclockwise
  std::vector<std::array<int, 3>> triangles;  // ascending index triples
  std::vector<std::pair<int, int>> diagonals;
};

enum class Shape { quad, pentagon };

// Osculating flags at increasing rational parameters, perturbed by a few
// random eruption/shear flows with positive multipliers; resampled until the
// positivity checks pass.  Deterministic per seed.
PolygonConfig generate_positive_config(int n, std::uint64_t seed, Shape shape);

// Every triangle max-span with all triple ratios positive; every diagonal
// with all double ratios positive.
bool is_positive(const PolygonConfig& config);

// Multiplicative triangle invariant: the triple ratio with vertices read
// counterclockwise starting at `vertex`.
Rational triangle_invariant(const PolygonConfig& config, int tri, int vertex,
                            int a, int b, int c);

// Slithering from the side of t_from facing t_to to the side of t_to facing
// t_from: the ordered product of elementary unipotent transports across the
// separating triangles; identity for adjacent triangles.
QMat slithering(const PolygonConfig& config, int t_from, int t_to);

// Multiplicative shearing invariant of the ordered triangle pair.
Rational shear_pair(const PolygonConfig& config, int t_first, int t_second, int a);

// The same value evaluated from the second triangle's side; used to confirm
// the two evaluations agree.
Rational shear_pair_far(const PolygonConfig& config, int t_first, int t_second, int a);

// Shear across an oriented diagonal: the pair (left triangle, right triangle)
// of the orientation.  Reversing the edge sends level a to n - a.
Rational shear_adjacent(const PolygonConfig& config, int tail, int head, int a);

// Shear between triangles separated by others.
Rational shear_separated(const PolygonConfig& config, int t_from, int t_to, int a);

// Whether the pivot vertex of t_mid sits to the left as seen from t_from.
bool pivot_on_left(const PolygonConfig& config, int t_from, int t_mid, int t_to);

// Exact multiplicative form of the three-term shear relation across a
// separating triangle, with the correction product read at the pivot vertex.
bool quasi_additivity_check(const PolygonConfig& config, int t_from, int t_mid,
                            int t_to, int a);

}  // namespace fg
