#include "fg/zipper.hpp"

#include <algorithm>
#include <set>

namespace fg {

MoveKind move_kind_from_string(const std::string& s) {
  if (s == "I") return MoveKind::I;
  if (s == "II") return MoveKind::II;
  if (s == "Im") return MoveKind::I_mirror;
  if (s == "IIm") return MoveKind::II_mirror;
  throw std::invalid_argument("unknown move kind " + s + " (expected I, II, Im, IIm)");
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::I: return "I";
    case MoveKind::II: return "II";
    case MoveKind::I_mirror: return "Im";
    case MoveKind::II_mirror: return "IIm";
  }
  return "?";
}

namespace {

bool is_mirror(MoveKind k) { return k == MoveKind::I_mirror || k == MoveKind::II_mirror; }
bool is_move1(MoveKind k) { return k == MoveKind::I || k == MoveKind::I_mirror; }

Orient toward_end(const EndRef& e) { return e.end == 1 ? Orient::forward : Orient::reversed; }

struct Site {
  // Role ends in the mirrored reading: "left" means the SL slot.
  int s1 = -1, s2 = -1;
  EndRef l1, r1, l2, r2, o1;  // o1 only for move II
};

// Pattern-match the site; throws on mismatch.
Site match_site(const Track& t, const MoveSpec& spec) {
  Slot SL = is_mirror(spec.kind) ? Slot::right : Slot::left;
  Slot SR = is_mirror(spec.kind) ? Slot::left : Slot::right;
  int m = spec.branch;
  auto [sa, slot_a] = t.attachment(m, 0);
  auto [sb, slot_b] = t.attachment(m, 1);
  Site site;
  if (is_move1(spec.kind)) {
    if (slot_a != Slot::out || slot_b != Slot::out)
      throw std::invalid_argument("move I site: branch must be the out-branch at both ends");
    site.s1 = sa;  // holds m.0
    site.s2 = sb;  // holds m.1
    site.l1 = t.switch_at(site.s1).slot[static_cast<int>(SL)];
    site.r1 = t.switch_at(site.s1).slot[static_cast<int>(SR)];
    site.l2 = t.switch_at(site.s2).slot[static_cast<int>(SL)];
    site.r2 = t.switch_at(site.s2).slot[static_cast<int>(SR)];
    // The rewritten rows for the two SR-inputs must not collide with the
    // identity rows of the other role branches.
    std::set<int> others{site.l1.branch, site.l2.branch};
    if (others.count(site.r1.branch) || others.count(site.r2.branch) ||
        site.r1.branch == site.r2.branch)
      throw std::invalid_argument("move I site: degenerate branch overlap");
  } else {
    int s1 = -1, s2 = -1, x = -1;
    if (slot_a == SL && slot_b == Slot::out) {
      s1 = sa;
      s2 = sb;
      x = 0;
    } else if (slot_b == SL && slot_a == Slot::out) {
      s1 = sb;
      s2 = sa;
      x = 1;
    } else {
      throw std::invalid_argument("move II site: branch must join a " +
                                  std::string(SL == Slot::left ? "left" : "right") +
                                  " slot to an out slot");
    }
    (void)x;
    if (s1 == s2) throw std::invalid_argument("move II site: loop at a single switch");
    site.s1 = s1;
    site.s2 = s2;
    site.o1 = t.switch_at(s1).slot[0];
    site.r1 = t.switch_at(s1).slot[static_cast<int>(SR)];
    site.l2 = t.switch_at(s2).slot[static_cast<int>(SL)];
    site.r2 = t.switch_at(s2).slot[static_cast<int>(SR)];
  }
  return site;
}

std::string unique_branch_name(const Track& t, std::string base) {
  std::string name = base + "p";
  while (t.branch_index(name) != -1) name += "p";
  return name;
}

}  // namespace

std::vector<int> eligible_sites(const Track& track, MoveKind kind) {
  std::vector<int> out;
  for (int b = 0; b < track.branch_count(); ++b) {
    try {
      match_site(track, MoveSpec{kind, b});
      out.push_back(b);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

MoveResult apply_move(const Track& track, const MoveSpec& spec, int n) {
  if (!track.validated()) throw std::logic_error("apply_move: track must be validated");
  Site site = match_site(track, spec);
  Slot SL = is_mirror(spec.kind) ? Slot::right : Slot::left;
  Slot SR = is_mirror(spec.kind) ? Slot::left : Slot::right;
  int m = spec.branch;

  // ---- Rewire ------------------------------------------------------------
  std::vector<std::string> names;
  names.reserve(track.branch_count());
  std::vector<int> new_of_old(track.branch_count(), -1);
  for (int b = 0; b < track.branch_count(); ++b) {
    if (b == m) continue;
    new_of_old[b] = static_cast<int>(names.size());
    names.push_back(track.branch_name(b));
  }
  int mp = static_cast<int>(names.size());
  names.push_back(unique_branch_name(track, track.branch_name(m)));

  auto remap = [&](EndRef e) { return EndRef{new_of_old[e.branch], e.end}; };
  std::vector<Switch> switches;
  switches.reserve(track.switch_count());
  for (int s = 0; s < track.switch_count(); ++s) {
    Switch sw = track.switch_at(s);
    if (s != site.s1 && s != site.s2) {
      for (int k = 0; k < 3; ++k) sw.slot[k] = remap(sw.slot[k]);
      switches.push_back(sw);
      continue;
    }
    Switch nw;
    nw.name = sw.name;
    if (is_move1(spec.kind)) {
      if (s == site.s1) {
        nw.slot[0] = remap(site.r2);
        nw.slot[static_cast<int>(SL)] = remap(site.l1);
        nw.slot[static_cast<int>(SR)] = EndRef{mp, 0};
      } else {
        nw.slot[0] = remap(site.r1);
        nw.slot[static_cast<int>(SL)] = remap(site.l2);
        nw.slot[static_cast<int>(SR)] = EndRef{mp, 1};
      }
    } else {
      if (s == site.s1) {
        nw.slot[0] = EndRef{mp, 0};
        nw.slot[static_cast<int>(SL)] = remap(site.r2);
        nw.slot[static_cast<int>(SR)] = remap(site.r1);
      } else {
        nw.slot[0] = remap(site.o1);
        nw.slot[static_cast<int>(SL)] = remap(site.l2);
        nw.slot[static_cast<int>(SR)] = EndRef{mp, 1};
      }
    }
    switches.push_back(nw);
  }

  MoveResult res;
  res.track = Track::from_parts(track.name(), std::move(names), std::move(switches));
  validate(res.track);
  res.new_branch = mp;
  const Track& t2 = res.track;

  // The complementary triangles correspond through their cusp switches.
  for (int f = 0; f < static_cast<int>(track.faces().size()); ++f) {
    std::set<std::string> old_cusps, new_cusps;
    for (int s : track.faces()[f].cusp_switches) old_cusps.insert(track.switch_at(s).name);
    int f2 = t2.cusp_of_switch(t2.switch_index(
                                   track.switch_at(track.faces()[f].cusp_switches[0]).name))
                 .first;
    for (int s : t2.faces()[f2].cusp_switches) new_cusps.insert(t2.switch_at(s).name);
    if (old_cusps != new_cusps)
      throw std::logic_error("move broke the triangle correspondence");
  }

  // ---- Substitution -------------------------------------------------------
  int d_old = dot_count(track, n), d_new = dot_count(t2, n);
  ZMat sub(d_old, d_new);
  auto row_of = [&](const Dot& d) { return dot_index(track, n, d); };
  auto add = [&](int row, const Dot& d, long coeff) {
    sub(row, dot_index(t2, n, d)) += coeff;
  };

  // tau rows: read at the same switch corner on both sides.
  for (int f = 0; f < static_cast<int>(track.faces().size()); ++f) {
    const Face& fc = track.faces()[f];
    int base_sw = fc.cusp_switches[fc.base];
    int s2_idx = t2.switch_index(track.switch_at(base_sw).name);
    int f2 = t2.cusp_of_switch(s2_idx).first;
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b) {
        Dot od;
        od.kind = Dot::Kind::tau;
        od.face = f;
        od.ta = a;
        od.tb = b;
        od.tc = n - a - b;
        add(row_of(od), tau_dot(t2, n, f2, s2_idx, a, b, n - a - b), 1);
      }
  }

  // sigma rows.  Helpers writing the right-hand sides of the rewrites; all
  // level/orientation conventions go through sigma_dot.
  auto add_sigma_new = [&](int row, int new_branch, const EndRef& toward, int level,
                           long coeff) {
    add(row, sigma_dot(t2, n, new_branch, toward_end(toward), level), coeff);
  };
  auto add_tau_at_switch = [&](int row, int old_switch, int first, long coeff) {
    int s2_idx = t2.switch_index(track.switch_at(old_switch).name);
    int f2 = t2.cusp_of_switch(s2_idx).first;
    for (int bp = 1; first + bp <= n - 1; ++bp)
      add(row, tau_dot(t2, n, f2, s2_idx, first, bp, n - first - bp), coeff);
  };

  std::set<int> rewritten;  // old branches without identity rows
  rewritten.insert(m);
  if (is_move1(spec.kind)) {
    rewritten.insert(site.r1.branch);
    rewritten.insert(site.r2.branch);
  }
  for (int b = 0; b < track.branch_count(); ++b) {
    if (rewritten.count(b)) continue;
    for (int a = 1; a <= n - 1; ++a) {
      Dot od;
      od.kind = Dot::Kind::sigma;
      od.branch = b;
      od.a = a;
      Dot nd = od;
      nd.branch = new_of_old[b];
      add(row_of(od), nd, 1);
    }
  }

  if (is_move1(spec.kind)) {
    // Old SR-input of s1, read toward s1 at level (a, b): the freed end is
    // the new out-branch of s2; expanding with the new switch relation there:
    //   sigma^{ba}(l2 toward s2) + sigma^{ab}(m' toward s1)
    //     - sum_{b''+c''=n-b} tau^{b b'' c''}(U_{s2} at s2),
    // and symmetrically for the SR-input of s2.
    auto expand_r = [&](const EndRef& r_end, const EndRef& far_l, int far_switch,
                        int mp_end_here) {
      for (int a = 1; a <= n - 1; ++a) {
        int b = n - a;
        int row = row_of(sigma_dot(track, n, r_end.branch, toward_end(r_end), a));
        add_sigma_new(row, new_of_old[far_l.branch], far_l, b, 1);
        add(row, sigma_dot(t2, n, mp, mp_end_here == 1 ? Orient::forward : Orient::reversed, a),
            1);
        add_tau_at_switch(row, far_switch, b, -1);
      }
    };
    expand_r(site.r1, site.l2, site.s2, 0);  // m'.0 sits at s1
    expand_r(site.r2, site.l1, site.s1, 1);  // m'.1 sits at s2

    // Old middle branch, read away from s1 (out there): the old switch
    // relation at s1 rewritten in new coordinates.  m.0 sits at s1, so the
    // outgoing orientation is the declared one.
    for (int a = 1; a <= n - 1; ++a) {
      int row = row_of(sigma_dot(track, n, m, Orient::forward, a));
      add_sigma_new(row, new_of_old[site.l1.branch], site.l1, a, 1);
      // sigma^{a}(r1 toward s1) expanded as above:
      int b = n - a;
      add_sigma_new(row, new_of_old[site.l2.branch], site.l2, b, 1);
      add(row, sigma_dot(t2, n, mp, Orient::reversed, a), 1);  // toward m'.0
      add_tau_at_switch(row, site.s2, b, -1);
      add_tau_at_switch(row, site.s1, a, -1);
    }
  } else {
    // Old middle branch, read toward s1 (out of s2): the old switch relation
    // at s2, transported to the new labels.
    int m_end_at_s1 = track.attachment(m, 0).second == Slot::out ? 1 : 0;
    for (int a = 1; a <= n - 1; ++a) {
      Orient toward_s1 = m_end_at_s1 == 1 ? Orient::forward : Orient::reversed;
      int row = row_of(sigma_dot(track, n, m, toward_s1, a));
      add_sigma_new(row, new_of_old[site.l2.branch], site.l2, a, 1);
      add_sigma_new(row, new_of_old[site.r2.branch], site.r2, a, 1);
      add_tau_at_switch(row, site.s2, a, -1);
    }
  }

  res.subst = std::move(sub);
  return res;
}

bool invariance_check(const Track& track, const MoveSpec& spec, int n) {
  MoveResult mr = apply_move(track, spec, n);
  QMat mq = to_rational(mr.subst);
  QMat kp = kernel_basis(to_rational(switch_relation_matrix(mr.track, n)));
  QMat mk = mq * kp;
  QMat lhs = mk.transpose() * to_rational(build_omega(track, n)) * mk;
  QMat rhs = kp.transpose() * to_rational(build_omega(mr.track, n)) * kp;
  return lhs == rhs;
}

bool kernel_transport_check(const Track& track, const MoveSpec& spec, int n) {
  MoveResult mr = apply_move(track, spec, n);
  QMat mq = to_rational(mr.subst);
  QMat kp = kernel_basis(to_rational(switch_relation_matrix(mr.track, n)));
  QMat image = mq * kp;
  QMat r_old = to_rational(switch_relation_matrix(track, n));
  return (r_old * image).is_zero();
}

bool unrestricted_identity(const Track& track, const MoveSpec& spec, int n) {
  MoveResult mr = apply_move(track, spec, n);
  QMat mq = to_rational(mr.subst);
  QMat lhs = mq.transpose() * to_rational(build_omega(track, n)) * mq;
  return lhs == to_rational(build_omega(mr.track, n));
}

}  // namespace fg
