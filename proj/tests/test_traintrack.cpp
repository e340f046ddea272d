#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/traintrack.hpp"

using namespace fg;

namespace {

Track genus2() {
  Track t = parse_track_file(std::string(FG_FIXTURE_DIR) + "/genus2.tt");
  validate(t);
  return t;
}

}  // namespace

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_track("branch a\n"), ParseError);  // missing header
  CHECK_THROWS_AS(parse_track("traintrack t\nbranch a\nbranch a\n"), ParseError);
  CHECK_THROWS_AS(parse_track("traintrack t\nswitch s out=a.0 left=a.1 right=a.0\n"),
                  ParseError);  // unknown branch
  CHECK_THROWS_AS(parse_track("traintrack t\nbranch a\nswitch s out=a.2 left=a.1 right=a.0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_track("traintrack t\nbranch a\nswitch s out=a.0 left=a.1\n"),
                  ParseError);  // missing slot
  // unattached end
  CHECK_THROWS_AS(parse_track("traintrack t\nbranch a\nbranch b\n"
                              "switch s out=a.0 left=a.1 right=b.0\n"),
                  ValidationError);
  // doubly used end
  CHECK_THROWS_AS(parse_track("traintrack t\nbranch a\nbranch b\n"
                              "switch s out=a.0 left=a.1 right=a.0\n"
                              "switch r out=b.0 left=b.1 right=a.0\n"),
                  ValidationError);
}

TEST_CASE("non-triangle complement is rejected") {
  // theta graph: one boundary component with two cusps
  Track t = parse_track(
      "traintrack theta\n"
      "branch a\nbranch b\nbranch c\n"
      "switch s0 out=a.0 left=b.0 right=c.0\n"
      "switch s1 out=a.1 left=b.1 right=c.1\n");
  CHECK_THROWS_WITH_AS(validate(t), doctest::Contains("cusps"), ValidationError);
}

TEST_CASE("genus-2 fixture validates") {
  Track t = parse_track_file(std::string(FG_FIXTURE_DIR) + "/genus2.tt");
  ValidationReport rep = validate(t);
  CHECK(rep.vertices == 12);
  CHECK(rep.branches == 18);
  CHECK(rep.faces == 4);
  CHECK(rep.chi == -2);
  CHECK(rep.genus == 2);
  for (const Face& f : t.faces()) CHECK(f.cusp_switches.size() == 3);
}

TEST_CASE("face walks decompose the boundary sides") {
  // every directed side-arc (one per branch end in the walk encoding) lies in
  // exactly one face walk
  Track t = genus2();
  std::vector<int> uses(2 * t.branch_count(), 0);
  std::size_t total = 0;
  for (const Face& f : t.faces()) {
    total += f.ends.size();
    for (int h : f.ends) ++uses[h];
  }
  CHECK(total == 2 * static_cast<std::size_t>(t.branch_count()));
  for (int u : uses) CHECK(u == 1);
}

TEST_CASE("genus-3 fixture validates with matching counts") {
  Track t = parse_track_file(std::string(FG_FIXTURE_DIR) + "/genus3.tt");
  ValidationReport rep = validate(t);
  CHECK(rep.vertices == 24);
  CHECK(rep.branches == 36);
  CHECK(rep.faces == 8);
  CHECK(rep.chi == -4);
  CHECK(rep.genus == 3);
  for (int n = 2; n <= 5; ++n)
    CHECK(dot_count(t, n) == 4 * (n - 1) * (n + 7));
  for (int n = 2; n <= 3; ++n) {
    QMat r = to_rational(switch_relation_matrix(t, n));
    CHECK(rank(r) == static_cast<std::size_t>(24 * (n - 1)));
    CHECK(static_cast<int>(kernel_basis(r).cols()) == 4 * (n * n - 1));
  }
}

TEST_CASE("round trip through the serializer") {
  Track t = genus2();
  Track t2 = parse_track(to_text(t));
  ValidationReport rep = validate(t2);
  CHECK(rep.genus == 2);
  CHECK(to_text(t2) == to_text(t));
}

TEST_CASE("dot counting") {
  Track t = genus2();
  CHECK(dot_count(t, 2) == 18);
  CHECK(dot_count(t, 3) == 40);
  CHECK(dot_count(t, 4) == 66);
  for (int n = 2; n <= 6; ++n) {
    CHECK(dot_count(t, n) == 2 * (n - 1) * (n + 7));  // -chi (n-1)(n+7), chi = -2
    auto all = dots(t, n);
    CHECK(static_cast<int>(all.size()) == dot_count(t, n));
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
      CHECK(dot_index(t, n, all[i]) == i);
  }
}

TEST_CASE("sigma dot orientation reversal") {
  Track t = genus2();
  int n = 3;
  Dot fwd = sigma_dot(t, n, 4, Orient::forward, 1);
  CHECK(fwd.a == 1);
  Dot rev = sigma_dot(t, n, 4, Orient::reversed, 1);
  CHECK(rev.a == 2);
  // double reversal is the identity
  CHECK(sigma_dot(t, n, 4, Orient::reversed, rev.a).a == n - rev.a);
  CHECK_THROWS_AS(sigma_dot(t, n, 4, Orient::forward, 3), std::invalid_argument);
}

TEST_CASE("tau dot rotation") {
  Track t = genus2();
  int n = 4;
  const Face& face = t.faces()[0];
  int s_base = face.cusp_switches[face.base];
  int s1 = face.cusp_switches[(face.base + 1) % 3];
  int s2 = face.cusp_switches[(face.base + 2) % 3];

  Dot at_base = tau_dot(t, n, 0, s_base, 2, 1, 1);
  CHECK(at_base.ta == 2);
  CHECK(at_base.tb == 1);
  CHECK(at_base.tc == 1);

  // Rotation Condition: (a,b,c) at corner k equals (b,c,a) at corner k+1
  CHECK(tau_dot(t, n, 0, s_base, 2, 1, 1) == tau_dot(t, n, 0, s1, 1, 1, 2));
  CHECK(tau_dot(t, n, 0, s1, 2, 1, 1) == tau_dot(t, n, 0, s2, 1, 1, 2));
  // continuing the cycle once more returns to the base corner
  CHECK(tau_dot(t, n, 0, s2, 1, 2, 1) == tau_dot(t, n, 0, s_base, 2, 1, 1));
  // reading the same triple at the base is the identity on indices
  CHECK(tau_dot(t, n, 0, s_base, 1, 1, 2) ==
        tau_dot(t, n, 0, s_base, 1, 1, 2));

  CHECK_THROWS_AS(tau_dot(t, n, 0, /*corner=*/99, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("switch relation matrix") {
  Track t = genus2();
  SUBCASE("shape and row structure") {
    ZMat r = switch_relation_matrix(t, 3);
    CHECK(r.rows() == 24);
    CHECK(r.cols() == 40);
    // each row: +1 out dot, -1 two in dots, +1 on n-a-1 face dots, up to
    // cancellation when a branch serves two roles at one switch (not the
    // case on this fixture)
    for (std::size_t i = 0; i < r.rows(); ++i) {
      int plus_sigma = 0, minus_sigma = 0, plus_tau = 0;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (r(i, j) == 0) continue;
        bool sigma = j < 36;
        if (r(i, j) == 1 && sigma) ++plus_sigma;
        if (r(i, j) == -1 && sigma) ++minus_sigma;
        if (r(i, j) == 1 && !sigma) ++plus_tau;
      }
      CHECK(plus_sigma == 1);
      CHECK(minus_sigma == 2);
      int a = static_cast<int>(i) % 2 + 1;
      CHECK(plus_tau == 3 - a - 1);
    }
  }
  SUBCASE("ranks and kernels") {
    for (int n = 2; n <= 4; ++n) {
      QMat r = to_rational(switch_relation_matrix(t, n));
      CHECK(rank(r) == static_cast<std::size_t>(12 * (n - 1)));
      QMat k = kernel_basis(r);
      CHECK(static_cast<int>(k.cols()) == 2 * (n * n - 1));
      CHECK((r * k).is_zero());
    }
  }
}

TEST_CASE("kernel basis corner cases") {
  CHECK(kernel_basis(QMat::identity(5)).cols() == 0);
  QMat z(4, 6);
  CHECK(kernel_basis(z).cols() == 6);
}
