#include <doctest.h>

#include "folres/error.hpp"
#include "folres/localgeom.hpp"
#include "support.hpp"

using namespace folres;
using namespace folres::test;

namespace {

std::vector<TruncatedSeries> expected(std::vector<std::vector<long>> coeffs, int n) {
  std::vector<TruncatedSeries> out;
  for (const auto& c : coeffs) {
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) v[k] = c[k];
    out.emplace_back(v, n);
  }
  return out;
}

}  // namespace

TEST_SUITE("localgeom") {

TEST_CASE("generic points") {
  const std::vector<Polynomial> avoid{P("x")};
  const auto c = find_generic_point(P("y"), P("z"), avoid, 1);
  CHECK(c.point == pt({1, 0, 0}));
  CHECK(c.recheck());

  const auto l = find_generic_point(P("x + y"), P("z"), avoid, 1);
  CHECK(l.point[0] + l.point[1] == 0);
  CHECK(l.point[2] == 0);
  CHECK(l.point[0] != 0);
  CHECK(l.recheck());

  try {
    find_generic_point(P("x"), P("x"), {}, 1);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoGenericPointFound);
  }
  try {
    find_generic_point(P("x^2 + y^2 - 1"), P("x^2 - y^3 + z^2"), {}, 1);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UserPointRequired);
  }
  const auto hinted = find_generic_point(P("x^2 + y^2 - 1"), P("z"), {}, 1, 8, pt({1, 0, 0}));
  CHECK(hinted.point == pt({1, 0, 0}));
  CHECK_THROWS_AS(find_generic_point(P("y"), P("z"), avoid, 1, 8, pt({0, 0, 0})), Error);
}

TEST_CASE("point search is deterministic and seed dependent") {
  const std::vector<Polynomial> avoid{P("x"), P("x + y + z - 1")};
  const auto a = find_generic_point(P("y - 2*x"), P("z + x - 3"), avoid, 42, 8, std::nullopt, false);
  const auto b = find_generic_point(P("y - 2*x"), P("z + x - 3"), avoid, 42, 8, std::nullopt, false);
  CHECK(a.point == b.point);
  CHECK(a.recheck());
  bool differs = false;
  for (std::uint64_t s = 1; s < 6 && !differs; ++s) {
    differs = find_generic_point(P("y - 2*x"), P("z + x - 3"), avoid, s, 8, std::nullopt, false).point != a.point;
  }
  CHECK(differs);
}

TEST_CASE("transverse curves") {
  const int n = 6;
  const auto c = find_generic_point(P("y"), P("z"), {}, 1);
  const auto flat = lift_transverse_curve(P("z"), c, pt({0, 1, 0}), n);
  CHECK(flat.series == expected({{1}, {0, 1}, {0}}, n));
  const auto section = lift_transverse_curve(P("y"), c, pt({0, 0, 1}), n);
  CHECK(section.series == expected({{1}, {0}, {0, 1}}, n));

  const auto g = certify_generic_point(P("z - x^2"), P("x - 1"), {}, pt({1, 0, 1}));
  const auto graph = lift_transverse_curve(P("z - x^2"), g, pt({1, 0, 2}), n);
  CHECK(graph.series == expected({{1, 1}, {0}, {1, 2, 1}}, n));

  CHECK_THROWS_AS(lift_transverse_curve(P("z - 1"), c, pt({0, 1, 0}), n), Error);
  CHECK_THROWS_AS(lift_transverse_curve(P("z"), c, pt({0, 1, 1}), n), Error);
}

TEST_CASE("lifted curves stay on random hypersurfaces") {
  RandomStream rng(8);
  int lifted = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = P("z") * Polynomial::constant(xyz, Rational(rng.nonzero_int(4))) +
                         random_polynomial(rng, xyz, 3, 3);
    const std::vector<Rational> point{Rational(rng.small_int(3)), Rational(rng.small_int(3)), Rational(0)};
    const Polynomial shifted = f - Polynomial::constant(xyz, f.evaluate(point));
    if (shifted.derivative(2).evaluate(point) == 0) continue;
    const auto cert = certify_generic_point(shifted, P("x") - Polynomial::constant(xyz, point[0]), {}, point);
    const auto curve = transverse_curve(shifted, cert, 12);
    CHECK(shifted.evaluate(curve.series).is_zero());
    ++lifted;
  }
  CHECK(lifted > 10);
}

TEST_CASE("vanishing orders") {
  const auto c = find_generic_point(P("y"), P("z"), {}, 1);
  const auto along_y = lift_transverse_curve(P("z"), c, pt({0, 1, 0}));
  const auto along_z = lift_transverse_curve(P("y"), c, pt({0, 0, 1}));
  CHECK(vanishing_order(P("4*x*y"), along_y) == 1);
  CHECK(vanishing_order(P("x"), along_z) == 0);
  CHECK(vanishing_order(P("z^3"), along_z) == 3);
  CHECK(vanishing_order(RationalFunction(P("z^3"), P("z*x")), along_z) == 2);
  CHECK(vanishing_order(P("z^40"), along_z) == 40);
  CHECK_THROWS_AS(vanishing_order(P("y"), along_z), Error);
}

TEST_CASE("vanishing order is additive and independent of the point") {
  RandomStream rng(23);
  const Polynomial p = P("x + y - z"), q = P("2*x - y + 3*z - 1");
  const auto a = find_generic_point(p, q, {}, 1, 8, std::nullopt, false);
  const auto b = find_generic_point(p, q, {}, 2, 8, std::nullopt, false);
  REQUIRE(a.point != b.point);
  const Polynomial v = p;
  const auto ca = transverse_curve(v, a), cb = transverse_curve(v, b);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial g1 = q * random_linear(rng, xyz, true) + q.pow(2) * Polynomial::constant(xyz, Rational(trial));
    const Polynomial g2 = q.pow(static_cast<unsigned>(1 + trial % 3));
    if (g1.evaluate(a.point) != 0 || vanishes_on_component(g1, a, 1)) continue;
    CHECK(vanishing_order(g1 * g2, ca) == vanishing_order(g1, ca) + vanishing_order(g2, ca));
    CHECK(vanishing_order(g2, ca) == vanishing_order(g2, cb));
  }
}

TEST_CASE("containment in components") {
  const auto c = find_generic_point(P("y"), P("z"), {}, 1);
  CHECK(vanishes_on_component(P("y*x + z"), c, 1));
  CHECK_FALSE(vanishes_on_component(P("y + x - 1"), c, 1));
  const auto d = find_generic_point(P("y - x^2"), P("z"), {}, 1);
  CHECK(vanishes_on_component(P("y - x^2 + z*x"), d, 1));
  CHECK_FALSE(vanishes_on_component(P("y - x"), d, 1));
}

TEST_CASE("transverse planes") {
  const auto c = find_generic_point(P("y"), P("z"), {}, 1);
  const auto plane = build_transverse_plane(c, 1);
  CHECK(plane.plane.base == pt({1, 0, 0}));
  CHECK(plane.plane.dir_s == pt({0, 1, 0}));
  CHECK(plane.plane.dir_t == pt({0, 0, 1}));
  CHECK_THROWS_AS(certify_transverse_plane(c, pt({1, 0, 0}), pt({0, 1, 0})), Error);

  const auto l = find_generic_point(P("x + y - 2*z"), P("3*x - y + z - 4"), {}, 7);
  for (const auto& t : transverse_plane_candidates(l, 7)) {
    CHECK(t.cut_jacobian != 0);
    CHECK_NOTHROW(certify_transverse_plane(l, t.plane.dir_s, t.plane.dir_t));
  }
}

TEST_CASE("primitive vectors") {
  CHECK(primitive_vector({Q("1/2"), Q("-3/4"), Q("0")}) == pt({2, -3, 0}));
  CHECK(primitive_vector(pt({4, 6})) == pt({2, 3}));
}

}
