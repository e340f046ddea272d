#include "fg/symplectic.hpp"

namespace fg {

long coeff_face(int a, int b, int c, int ap, int bp, int cp, int n) {
  if (a < 1 || b < 1 || c < 1 || a + b + c != n || ap < 1 || bp < 1 || cp < 1 ||
      ap + bp + cp != n)
    throw std::invalid_argument("coeff_face: triples must be positive and sum to n");
  long A = a, B = b, C = c, Ap = ap, Bp = bp, Cp = cp;
  if (a <= ap && b <= bp && c >= cp) return Ap * B - A * Bp;
  if (a <= ap && b >= bp && c <= cp) return A * Cp - Ap * C;
  if (a <= ap && b >= bp && c >= cp) return Bp * C - B * Cp;
  if (a >= ap && b <= bp && c <= cp) return Bp * C - B * Cp;
  if (a >= ap && b <= bp && c >= cp) return A * Cp - Ap * C;
  if (a >= ap && b >= bp && c <= cp) return Ap * B - A * Bp;
  throw std::logic_error("coeff_face: unreachable ordering");
}

long coeff_mixed(int a, int ap, int n) {
  if (a < 1 || a > n - 1 || ap < 1 || ap > n - 1)
    throw std::invalid_argument("coeff_mixed: levels must lie in 1..n-1");
  if (a >= ap) return static_cast<long>(ap) * (n - a);
  return static_cast<long>(a) * (n - ap);
}

ZMat build_omega(const Track& track, int n) {
  int D = dot_count(track, n);
  ZMat omega(D, D);
  auto add = [&](const Dot& x, const Dot& y, long coeff) {
    int i = dot_index(track, n, x), j = dot_index(track, n, y);
    omega(i, j) += coeff;
    omega(j, i) -= coeff;
  };

  // Triangle part: every ordered pair of distinct dots of one face, read at
  // the base corner, contributes half the table value; both orders together
  // give the integer entry.
  int F = static_cast<int>(track.faces().size());
  for (int f = 0; f < F; ++f) {
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b)
        for (int ap = 1; ap <= n - 2; ++ap)
          for (int bp = 1; ap + bp <= n - 1; ++bp) {
            if (a == ap && b == bp) continue;
            Dot x, y;
            x.kind = y.kind = Dot::Kind::tau;
            x.face = y.face = f;
            x.ta = a;
            x.tb = b;
            x.tc = n - a - b;
            y.ta = ap;
            y.tb = bp;
            y.tc = n - ap - bp;
            int i = dot_index(track, n, x), j = dot_index(track, n, y);
            omega(i, j) += coeff_face(a, b, n - a - b, ap, bp, n - ap - bp, n);
          }
  }

  // Switch part.
  for (int s = 0; s < track.switch_count(); ++s) {
    const Switch& sw = track.switch_at(s);
    EndRef le = sw.slot[1], re = sw.slot[2];
    Orient ltow = le.end == 1 ? Orient::forward : Orient::reversed;
    Orient rtow = re.end == 1 ? Orient::forward : Orient::reversed;
    auto [face, pos] = track.cusp_of_switch(s);
    (void)pos;
    for (int a = 1; a <= n - 1; ++a) {
      Dot dl = sigma_dot(track, n, le.branch, ltow, a);
      Dot dr = sigma_dot(track, n, re.branch, rtow, a);
      for (int ap = 1; ap <= n - 1; ++ap)
        add(dl, sigma_dot(track, n, re.branch, rtow, ap), coeff_mixed(a, ap, n));
      for (int ap = 1; ap <= n - 2; ++ap)
        for (int bp = 1; ap + bp <= n - 1; ++bp) {
          Dot dt = tau_dot(track, n, face, s, ap, bp, n - ap - bp);
          add(dl, dt, -coeff_mixed(a, ap, n));
          add(dr, dt, coeff_mixed(a, ap, n));
        }
    }
  }
  return omega;
}

QMat restricted_form(const ZMat& omega, const QMat& kernel) {
  if (omega.rows() != kernel.rows())
    throw std::invalid_argument("restricted_form: dimension mismatch");
  QMat q = to_rational(omega);
  return kernel.transpose() * q * kernel;
}

RankReport rank_check(const Track& track, int n) {
  RankReport r;
  r.dots = dot_count(track, n);
  QMat rel = to_rational(switch_relation_matrix(track, n));
  r.relation_rank = static_cast<int>(rank(rel));
  QMat ker = kernel_basis(rel);
  r.kernel_dim = static_cast<int>(ker.cols());
  ZMat omega = build_omega(track, n);
  r.omega_restricted_rank = static_cast<int>(rank(restricted_form(omega, ker)));
  return r;
}

ZMat n3_corollary_matrix(const Track& track) {
  const int n = 3;
  int D = dot_count(track, n);
  ZMat omega(D, D);
  auto add = [&](const Dot& x, const Dot& y, long coeff) {
    int i = dot_index(track, n, x), j = dot_index(track, n, y);
    omega(i, j) += coeff;
    omega(j, i) -= coeff;
  };
  for (int s = 0; s < track.switch_count(); ++s) {
    const Switch& sw = track.switch_at(s);
    EndRef le = sw.slot[1], re = sw.slot[2];
    Orient ltow = le.end == 1 ? Orient::forward : Orient::reversed;
    Orient rtow = re.end == 1 ? Orient::forward : Orient::reversed;
    Dot l1 = sigma_dot(track, n, le.branch, ltow, 1);
    Dot l2 = sigma_dot(track, n, le.branch, ltow, 2);
    Dot r1 = sigma_dot(track, n, re.branch, rtow, 1);
    Dot r2 = sigma_dot(track, n, re.branch, rtow, 2);
    auto [face, pos] = track.cusp_of_switch(s);
    (void)pos;
    Dot t = tau_dot(track, n, face, s, 1, 1, 1);
    add(l1, r1, 2);
    add(l2, r2, 2);
    add(l1, r2, 1);
    add(l2, r1, 1);
    add(r1, t, 2);
    add(r2, t, 1);
    add(l1, t, -2);
    add(l2, t, -1);
  }
  return omega;
}

bool n3_corollary_check(const Track& track) {
  return build_omega(track, 3) == n3_corollary_matrix(track);
}

}  // namespace fg
