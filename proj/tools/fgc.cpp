#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fg/flows.hpp"
#include "fg/invariants.hpp"
#include "fg/killing.hpp"
#include "fg/symplectic.hpp"
#include "fg/zipper.hpp"

using namespace fg;

namespace {

Track load_validated(const std::string& path) {
  Track t = parse_track_file(path);
  validate(t);
  return t;
}

int cmd_validate(const std::string& path) {
  Track t = parse_track_file(path);
  ValidationReport rep = validate(t);
  std::cout << "V=" << rep.vertices << " E=" << rep.branches << " F=" << rep.faces
            << " chi=" << rep.chi << " genus=" << rep.genus << "\n";
  return 0;
}

int cmd_omega(const std::string& path, int n, bool legend) {
  Track t = load_validated(path);
  ZMat omega = build_omega(t, n);
  std::cout << to_string(omega);
  if (legend) {
    auto all = dots(t, n);
    for (std::size_t i = 0; i < all.size(); ++i)
      std::cout << "# " << i << " " << describe_dot(t, all[i]) << "\n";
  }
  return 0;
}

int cmd_rank(const std::string& path, int n) {
  Track t = load_validated(path);
  RankReport r = rank_check(t, n);
  std::cout << "D=" << r.dots << " relations=" << r.relation_rank
            << " kernel=" << r.kernel_dim << " omega_rank=" << r.omega_restricted_rank
            << "\n";
  return 0;
}

int cmd_zipper(const std::string& path, const std::string& move, const std::string& at,
               int n, std::string out_prefix) {
  Track t = load_validated(path);
  int branch = t.branch_index(at);
  if (branch < 0) throw std::invalid_argument("unknown branch " + at);
  MoveSpec spec{move_kind_from_string(move), branch};
  MoveResult mr = apply_move(t, spec, n);
  if (out_prefix.empty()) {
    out_prefix = path;
    if (out_prefix.size() > 3 && out_prefix.substr(out_prefix.size() - 3) == ".tt")
      out_prefix.resize(out_prefix.size() - 3);
    out_prefix += "-" + move + "-" + at;
  }
  std::ofstream track_out(out_prefix + ".tt");
  track_out << to_text(mr.track);
  std::ofstream subst_out(out_prefix + ".subst");
  subst_out << to_string(mr.subst);
  std::cout << "wrote " << out_prefix << ".tt and " << out_prefix << ".subst\n";
  return 0;
}

int cmd_zipper_verify(const std::string& path, int n) {
  Track t = load_validated(path);
  bool all_ok = true;
  for (MoveKind kind :
       {MoveKind::I, MoveKind::I_mirror, MoveKind::II, MoveKind::II_mirror}) {
    for (int site : eligible_sites(t, kind)) {
      bool ok = invariance_check(t, MoveSpec{kind, site}, n);
      all_ok = all_ok && ok;
      std::cout << "move " << to_string(kind) << " at " << t.branch_name(site) << ": "
                << (ok ? "ok" : "FAIL") << "\n";
    }
  }
  std::cout << (all_ok ? "all sites invariant" : "invariance violated") << "\n";
  return all_ok ? 0 : 2;
}

int cmd_killing_table(int n) {
  std::cout << "# K(R_abc, L_a'b'c') / 2n Tr pairing, n=" << n << "\n";
  for (int a = 1; a <= n - 2; ++a)
    for (int b = 1; a + b <= n - 1; ++b)
      for (int ap = 1; ap <= n - 2; ++ap)
        for (int bp = 1; ap + bp <= n - 1; ++bp) {
          int c = n - a - b, cp = n - ap - bp;
          std::cout << "RL " << a << b << c << " " << ap << bp << cp << " "
                    << to_string(kf_rl(a, b, c, ap, bp, cp, n)) << "\n";
        }
  for (int a = 1; a <= n - 1; ++a)
    for (int ap = 1; ap <= n - 1; ++ap)
      std::cout << "SGSF " << a << " " << ap << " "
                << to_string(kf_sg_sf(a, n - a, ap, n - ap, n)) << "\n";
  for (int a = 1; a <= n - 1; ++a)
    for (int ap = 1; ap <= n - 2; ++ap)
      for (int bp = 1; ap + bp <= n - 1; ++bp) {
        int cp = n - ap - bp;
        std::cout << "SGL " << a << " " << ap << bp << cp << " "
                  << to_string(kf_sg_l(a, n - a, ap, bp, cp, n)) << "\n";
        std::cout << "SFL " << a << " " << ap << bp << cp << " "
                  << to_string(kf_sf_l(a, n - a, ap, bp, cp, n)) << "\n";
      }
  return 0;
}

int cmd_invariants(const std::string& shape_name, int n, std::uint64_t seed) {
  Shape shape = shape_name == "quad" ? Shape::quad : Shape::pentagon;
  PolygonConfig c = generate_positive_config(n, seed, shape);
  std::cout << "shape " << shape_name << " n " << n << " seed " << seed << "\n";
  for (int t = 0; t < static_cast<int>(c.triangles.size()); ++t) {
    auto tv = c.triangles[t];
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b)
        std::cout << "tau T" << t << " (" << a << "," << b << "," << n - a - b
                  << ") = " << to_string(triangle_invariant(c, t, tv[0], a, b, n - a - b))
                  << "\n";
  }
  for (auto [u, v] : c.diagonals)
    for (int a = 1; a <= n - 1; ++a)
      std::cout << "sigma " << u << "->" << v << " a=" << a << " = "
                << to_string(shear_adjacent(c, u, v, a)) << "\n";
  bool all_zero = true;
  if (shape == Shape::pentagon) {
    for (int a = 1; a <= n - 1; ++a) {
      for (auto [from, to] : {std::pair{0, 2}, std::pair{2, 0}}) {
        Rational lhs = shear_pair(c, from, to, a);
        Rational rhs = shear_pair(c, from, 1, a) * shear_pair(c, 1, to, a);
        if (pivot_on_left(c, from, 1, to)) {
          for (int bp = 1; a + bp <= n - 1; ++bp)
            rhs /= triangle_invariant(c, 1, 0, a, bp, n - a - bp);
        } else {
          int b = n - a;
          for (int cp = 1; b + cp <= n - 1; ++cp)
            rhs /= triangle_invariant(c, 1, 0, b, cp, n - b - cp);
        }
        Rational residual = lhs / rhs - 1;
        all_zero = all_zero && residual == 0;
        std::cout << "quasi-additivity T" << from << "|T1|T" << to << " a=" << a
                  << " residual = " << to_string(residual) << "\n";
      }
    }
  }
  return all_zero ? 0 : 2;
}

Flag random_flag(Rng& rng, int n) {
  for (;;) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.integer(-4, 4);
    if (det(m) != 0) return Flag(std::move(m));
  }
}

FlagTriple random_max_span_triple(Rng& rng, int n) {
  for (;;) {
    Flag e = random_flag(rng, n), f = random_flag(rng, n), g = random_flag(rng, n);
    if (is_max_span(e, f, g)) return {e, f, g};
  }
}

int cmd_selfcheck(int n, int trials, std::uint64_t seed) {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    ok = ok && pass;
    std::cout << (pass ? "ok " : "FAIL ") << name << "\n";
  };

  {
    bool pass = true;
    Rng rng(seed);
    for (int t = 0; t < trials && pass; ++t) {
      auto [e, f, g] = random_max_span_triple(rng, n);
      for (int a = 1; a <= n - 2 && pass; ++a)
        for (int b = 1; a + b <= n - 1 && pass; ++b)
          for (int ap = 1; ap <= n - 2 && pass; ++ap)
            for (int bp = 1; ap + bp <= n - 1 && pass; ++bp) {
              SlnElem r(gen_eruption_right(e, f, g, a, b, n - a - b));
              SlnElem l(gen_eruption_left(e, f, g, ap, bp, n - ap - bp));
              pass = killing_form(r, l) == kf_rl(a, b, n - a - b, ap, bp, n - ap - bp, n);
            }
      for (int a = 1; a <= n - 1 && pass; ++a)
        for (int ap = 1; ap <= n - 1 && pass; ++ap) {
          SlnElem sg(gen_shear(e, g, a, n - a));
          SlnElem sf(gen_shear(e, f, ap, n - ap));
          pass = killing_form(sg, sf) == kf_sg_sf(a, n - a, ap, n - ap, n);
        }
    }
    report("killing tables vs trace pairing", pass);
  }

  {
    bool pass = true;
    for (int a = 1; a <= n - 1 && pass; ++a)
      for (int ap = 1; ap <= n - 1 && pass; ++ap) {
        pass = Rational(2 * coeff_mixed(a, ap, n)) == kf_sg_sf(a, n - a, ap, n - ap, n);
        if (pass && n >= 3)
          for (int bp = 1; ap + bp <= n - 1 && pass; ++bp)
            pass = Rational(-2 * coeff_mixed(a, ap, n)) ==
                   kf_sg_l(a, n - a, ap, bp, n - ap - bp, n);
      }
    if (n >= 3)
      for (int a = 1; a <= n - 2 && pass; ++a)
        for (int b = 1; a + b <= n - 1 && pass; ++b)
          for (int ap = 1; ap <= n - 2 && pass; ++ap)
            for (int bp = 1; ap + bp <= n - 1 && pass; ++bp) {
              int c = n - a - b, cp = n - ap - bp;
              pass = Rational(2 * coeff_face(a, b, c, ap, bp, cp, n)) ==
                     kf_rl(a, b, c, ap, bp, cp, n) - kf_rl(ap, bp, cp, a, b, c, n);
            }
    report("coefficient tables vs pairings", pass);
  }

  {
    bool pass = true;
    Rng rng(seed + 1);
    for (int t = 0; t < trials && pass; ++t) {
      auto [e, f, g] = random_max_span_triple(rng, n);
      Rational u = rng.positive_rational();
      if (n >= 3) {
        int a = static_cast<int>(rng.integer(1, n - 2));
        int b = static_cast<int>(rng.integer(1, n - 1 - a));
        int c = n - a - b;
        QMat lm = eruption_left(e, f, g, a, b, c, u);
        QMat rm = eruption_right(e, f, g, a, b, c, u);
        pass = flags_equal(apply(lm, e), e) && flags_equal(apply(rm, f), f) &&
               flags_equal(apply(lm, g), apply(rm, g)) &&
               triple_ratio(e, f, apply(lm, g), a, b, c) ==
                   u * triple_ratio(e, f, g, a, b, c);
      }
      if (pass) {
        int a = static_cast<int>(rng.integer(1, n - 1));
        QMat s = shear(e, f, a, n - a, u);
        pass = flags_equal(apply(s, e), e) && flags_equal(apply(s, f), f);
      }
    }
    report("flow axioms", pass);
  }

  {
    bool pass = true;
    Rng rng(seed + 2);
    for (int t = 0; t < trials && pass; ++t) {
      auto [e, f, g] = random_max_span_triple(rng, n);
      pass = double_ratio(e, f, g, g, 1, n - 1) == -1 &&
             shear(e, f, 1, n - 1, 1) == QMat::identity(n) &&
             slithering_elementary(SharedEnd::first, e, f, f) == QMat::identity(n);
    }
    report("trivial pins", pass);
  }

  std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact train-track symplectic form toolkit"};
  app.require_subcommand(1);

  std::string path, move, at, shape = "pentagon", out_prefix;
  int n = 3, trials = 100;
  std::uint64_t seed = 1;
  bool legend = false;

  auto* v = app.add_subcommand("validate", "parse and validate a train track file");
  v->add_option("file", path)->required();

  auto* om = app.add_subcommand("omega", "print the symplectic matrix in the dot basis");
  om->add_option("file", path)->required();
  om->add_option("-n", n)->check(CLI::Range(2, 16));
  om->add_flag("--legend", legend);

  auto* rk = app.add_subcommand("rank", "constraint and restricted-form ranks");
  rk->add_option("file", path)->required();
  rk->add_option("-n", n)->check(CLI::Range(2, 16));

  auto* zp = app.add_subcommand("zipper", "apply a zipper-opening move");
  zp->add_option("file", path)->required();
  zp->add_option("--move", move, "I, II, Im or IIm")->required();
  zp->add_option("--at", at, "middle branch of the site")->required();
  zp->add_option("-n", n)->check(CLI::Range(2, 16));
  zp->add_option("--out", out_prefix, "output prefix (.tt and .subst)");

  auto* zv = app.add_subcommand("zipper-verify", "invariance at every eligible site");
  zv->add_option("file", path)->required();
  zv->add_option("-n", n)->check(CLI::Range(2, 16));

  auto* kt = app.add_subcommand("killing-table", "print the pairing tables");
  kt->add_option("-n", n)->check(CLI::Range(2, 64))->required();

  auto* iv = app.add_subcommand("invariants", "invariants of a generated configuration");
  iv->add_option("--shape", shape)->check(CLI::IsMember({"quad", "pentagon"}));
  iv->add_option("-n", n)->check(CLI::Range(2, 16));
  iv->add_option("--seed", seed);

  auto* sc = app.add_subcommand("selfcheck", "run the property suites");
  sc->add_option("-n", n)->check(CLI::Range(2, 16));
  sc->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sc->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (v->parsed()) return cmd_validate(path);
    if (om->parsed()) return cmd_omega(path, n, legend);
    if (rk->parsed()) return cmd_rank(path, n);
    if (zp->parsed()) return cmd_zipper(path, move, at, n, out_prefix);
    if (zv->parsed()) return cmd_zipper_verify(path, n);
    if (kt->parsed()) return cmd_killing_table(n);
    if (iv->parsed()) return cmd_invariants(shape, n, seed);
    if (sc->parsed()) return cmd_selfcheck(n, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
