#include "fg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fg/flows.hpp"

namespace fg {

namespace {

int vertex_count(const PolygonConfig& c) { return static_cast<int>(c.flags.size()); }

// x strictly inside the counterclockwise arc from lo to hi.
bool ccw_between(int m, int lo, int x, int hi) {
  for (int v = (lo + 1) % m; v != hi; v = (v + 1) % m)
    if (v == x) return true;
  return false;
}

std::array<int, 3> tri(const PolygonConfig& c, int t) { return c.triangles[t]; }

bool on_triangle(const std::array<int, 3>& t, int v) {
  return t[0] == v || t[1] == v || t[2] == v;
}

// The side {u, v} of t such that every vertex of other off that side lies in
// the arc not containing t's third vertex.
struct Side {
  int u, v, w;  // side endpoints and the third vertex
};

Side facing_side(const PolygonConfig& c, int t, int other) {
  int m = vertex_count(c);
  auto tv = tri(c, t);
  auto ov = tri(c, other);
  for (int k = 0; k < 3; ++k) {
    int u = tv[k], v = tv[(k + 1) % 3], w = tv[(k + 2) % 3];
    bool w_side = ccw_between(m, u, w, v);
    bool ok = true, nontrivial = false;
    for (int x : ov) {
      if (x == u || x == v) continue;
      nontrivial = true;
      if (ccw_between(m, u, x, v) == w_side) ok = false;
    }
    if (ok && nontrivial) return {u, v, w};
  }
  throw DegenerateConfig("no side of the triangle faces the other");
}

// Oriented leaf of the side {u, v} with the triangle `t_right` on its right:
// returns (tail, head).
std::pair<int, int> orient_with_right(const PolygonConfig& c, int u, int v, int w_right) {
  int m = vertex_count(c);
  // vertices in the ccw arc from tail to head are on the right of tail->head
  if (ccw_between(m, u, w_right, v)) return {u, v};
  return {v, u};
}

// Dual-tree path between triangles; adjacency is sharing a side.
std::vector<int> dual_path(const PolygonConfig& c, int from, int to) {
  int T = static_cast<int>(c.triangles.size());
  auto shares_side = [&](int x, int y) {
    int common = 0;
    for (int a : tri(c, x))
      if (on_triangle(tri(c, y), a)) ++common;
    return common == 2;
  };
  std::vector<int> prev(T, -1);
  std::deque<int> q{from};
  std::vector<char> seen(T, 0);
  seen[from] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == to) break;
    for (int y = 0; y < T; ++y)
      if (!seen[y] && shares_side(x, y)) {
        seen[y] = 1;
        prev[y] = x;
        q.push_back(y);
      }
  }
  if (!seen[to]) throw DegenerateConfig("triangles not connected in the triangulation");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Rational triangle_invariant(const PolygonConfig& config, int t, int vertex,
                            int a, int b, int c) {
  auto tv = tri(config, t);
  int k = -1;
  for (int i = 0; i < 3; ++i)
    if (tv[i] == vertex) k = i;
  if (k < 0) throw std::invalid_argument("vertex not on the triangle");
  // ascending index triples are counterclockwise
  int x = tv[k], y = tv[(k + 1) % 3], z = tv[(k + 2) % 3];
  return triple_ratio(config.flags[x], config.flags[y], config.flags[z], a, b, c);
}

QMat slithering(const PolygonConfig& config, int t_from, int t_to) {
  auto path = dual_path(config, t_from, t_to);
  int n = config.flag_dim;
  QMat sigma = QMat::identity(n);
  // Leaves along the path, each oriented with t_from on the right.
  std::vector<std::pair<int, int>> leaves;
  {
    Side s0 = facing_side(config, t_from, t_to);
    leaves.push_back(orient_with_right(config, s0.u, s0.v, s0.w));
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    Side far = facing_side(config, path[i], t_to);
    // orient with t_from on the right: t_from lies on the same side as the
    // previous leaf's right side; reuse the first leaf's right-vertex test
    // through any vertex of t_from off this side.
    auto tv = tri(config, t_from);
    int probe = tv[0];
    for (int x : tv)
      if (x != far.u && x != far.v) probe = x;
    leaves.push_back(orient_with_right(config, far.u, far.v, probe));
  }
  {
    Side sk = facing_side(config, t_to, t_from);
    auto tv = tri(config, t_from);
    int probe = tv[0];
    for (int x : tv)
      if (x != sk.u && x != sk.v) probe = x;
    leaves.push_back(orient_with_right(config, sk.u, sk.v, probe));
  }
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    auto [p, q] = leaves[i];
    auto [pp, qq] = leaves[i + 1];
    QMat factor;
    if (p == pp)
      factor = unipotent_transport(config.flags[p], config.flags[qq], config.flags[q]);
    else if (q == qq)
      factor = unipotent_transport(config.flags[q], config.flags[pp], config.flags[p]);
    else
      throw DegenerateConfig("consecutive leaves share no endpoint");
    sigma = sigma * factor;
  }
  return sigma;
}

Rational shear_pair(const PolygonConfig& config, int t_first, int t_second, int a) {
  int n = config.flag_dim;
  Side near = facing_side(config, t_first, t_second);
  auto [x, y] = orient_with_right(config, near.u, near.v, near.w);
  Side far = facing_side(config, t_second, t_first);
  QMat s = slithering(config, t_first, t_second);
  Flag moved = apply(s, config.flags[far.w]);
  return double_ratio(config.flags[x], config.flags[y], config.flags[near.w], moved,
                      a, n - a);
}

Rational shear_pair_far(const PolygonConfig& config, int t_first, int t_second, int a) {
  int n = config.flag_dim;
  Side near = facing_side(config, t_first, t_second);
  Side far = facing_side(config, t_second, t_first);
  // The far leaf oriented in parallel: t_first still on the right.
  int probe = near.w;
  auto [xp, yp] = orient_with_right(config, far.u, far.v, probe);
  QMat s_back = inverse(slithering(config, t_first, t_second));
  Flag moved = apply(s_back, config.flags[near.w]);
  return double_ratio(config.flags[xp], config.flags[yp], moved, config.flags[far.w],
                      a, n - a);
}

Rational shear_adjacent(const PolygonConfig& config, int tail, int head, int a) {
  int m = vertex_count(config);
  int t_left = -1, t_right = -1;
  for (int t = 0; t < static_cast<int>(config.triangles.size()); ++t) {
    auto tv = tri(config, t);
    if (!on_triangle(tv, tail) || !on_triangle(tv, head)) continue;
    int w = tv[0] + tv[1] + tv[2] - tail - head;
    if (ccw_between(m, tail, w, head))
      t_right = t;
    else
      t_left = t;
  }
  if (t_left < 0 || t_right < 0)
    throw std::invalid_argument("edge is not an interior diagonal");
  return shear_pair(config, t_left, t_right, a);
}

Rational shear_separated(const PolygonConfig& config, int t_from, int t_to, int a) {
  return shear_pair(config, t_from, t_to, a);
}

bool pivot_on_left(const PolygonConfig& config, int t_from, int t_mid, int t_to) {
  Side near = facing_side(config, t_mid, t_from);
  Side far = facing_side(config, t_mid, t_to);
  int pivot = -1;
  for (int u : {near.u, near.v})
    if (u == far.u || u == far.v) pivot = u;
  if (pivot < 0) throw DegenerateConfig("middle triangle does not separate the pair");
  // Orient the near leaf with t_from on the right; the pivot is on the left
  // as seen from t_from exactly when it is the tail.
  auto tv = tri(config, t_from);
  int probe = tv[0];
  for (int x : tv)
    if (x != near.u && x != near.v) probe = x;
  auto [tail, head] = orient_with_right(config, near.u, near.v, probe);
  (void)head;
  return pivot == tail;
}

bool quasi_additivity_check(const PolygonConfig& config, int t_from, int t_mid,
                            int t_to, int a) {
  int n = config.flag_dim;
  Side near = facing_side(config, t_mid, t_from);
  Side far = facing_side(config, t_mid, t_to);
  int pivot = -1;
  for (int u : {near.u, near.v})
    if (u == far.u || u == far.v) pivot = u;
  if (pivot < 0) throw DegenerateConfig("middle triangle does not separate the pair");

  Rational lhs = shear_pair(config, t_from, t_to, a);
  Rational rhs = shear_pair(config, t_from, t_mid, a) * shear_pair(config, t_mid, t_to, a);
  if (pivot_on_left(config, t_from, t_mid, t_to)) {
    for (int bp = 1; a + bp <= n - 1; ++bp)
      rhs /= triangle_invariant(config, t_mid, pivot, a, bp, n - a - bp);
  } else {
    int b = n - a;
    for (int cp = 1; b + cp <= n - 1; ++cp)
      rhs /= triangle_invariant(config, t_mid, pivot, b, cp, n - b - cp);
  }
  return lhs == rhs;
}

bool is_positive(const PolygonConfig& config) {
  int n = config.flag_dim;
  try {
    for (int t = 0; t < static_cast<int>(config.triangles.size()); ++t) {
      auto tv = tri(config, t);
      const Flag &e = config.flags[tv[0]], &f = config.flags[tv[1]], &g = config.flags[tv[2]];
      if (!is_max_span(e, f, g)) return false;
      for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; a + b <= n - 1; ++b)
          if (triple_ratio(e, f, g, a, b, n - a - b) <= 0) return false;
    }
    for (auto [u, v] : config.diagonals)
      for (int a = 1; a <= n - 1; ++a)
        if (shear_adjacent(config, u, v, a) <= 0) return false;
  } catch (const DegenerateConfig&) {
    return false;
  }
  return true;
}

PolygonConfig generate_positive_config(int n, std::uint64_t seed, Shape shape) {
  int m = shape == Shape::quad ? 4 : 5;
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    PolygonConfig config;
    config.flag_dim = n;
    // Distinct increasing rational parameters on the moment curve.
    std::set<Rational> params;
    while (static_cast<int>(params.size()) < m)
      params.insert(make_rational(rng.integer(-24, 24), rng.integer(1, 3)));
    for (const Rational& t : params) config.flags.push_back(osculating_flag(n, t));
    for (int i = 1; i + 1 < m; ++i)
      config.triangles.push_back({0, i, i + 1});
    for (int i = 2; i + 1 < m; ++i) config.diagonals.push_back({0, i});

    // A few flows with positive multipliers, applied to single vertices.
    int flows = 2 + static_cast<int>(rng.integer(0, 2));
    for (int k = 0; k < flows; ++k) {
      int t = static_cast<int>(rng.integer(0, static_cast<long>(config.triangles.size()) - 1));
      auto tv = config.triangles[t];
      int which = static_cast<int>(rng.integer(0, 2));
      Rational u = make_rational(rng.integer(2, 5), rng.integer(2, 5));
      const Flag &e = config.flags[tv[0]], &f = config.flags[tv[1]], &g = config.flags[tv[2]];
      try {
        if (n >= 3 && rng.integer(0, 1) == 0) {
          int a = static_cast<int>(rng.integer(1, n - 2));
          int b = static_cast<int>(rng.integer(1, n - 1 - a));
          QMat flow = which % 2 == 0 ? eruption_left(e, f, g, a, b, n - a - b, u)
                                     : eruption_right(e, f, g, a, b, n - a - b, u);
          config.flags[tv[2]] = apply(flow, config.flags[tv[2]]);
        } else {
          int a = static_cast<int>(rng.integer(1, n - 1));
          QMat flow = shear(e, f, a, n - a, u);
          config.flags[tv[which]] = apply(flow, config.flags[tv[which]]);
        }
      } catch (const DegenerateConfig&) {
        break;
      }
    }
    if (is_positive(config)) return config;
  }
  throw std::runtime_error("positivity resampling budget exhausted for seed " +
                           std::to_string(seed));
}

}  // namespace fg
