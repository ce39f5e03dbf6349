#include <doctest.h>

#include <cmath>
#include <random>

#include "conesurf/errors.hpp"
#include "conesurf/halfplane.hpp"
#include "conesurf/trig.hpp"

using namespace conesurf;

namespace {
constexpr double kAcosh1p5 = 0.9624236501192068949955;
constexpr double kAsinh1 = 0.8813735870195430252326;
constexpr double kLn2 = 0.6931471805599453094172;

double rand_len(std::mt19937_64& rng) {
  // log-uniform in [0.05, 8]
  std::uniform_real_distribution<double> u(std::log(0.05), std::log(8.0));
  return std::exp(u(rng));
}

double rand_angle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, kPi / 2.0 - 0.05);
  return u(rng);
}
}  // namespace

TEST_CASE("hdist: axioms and frozen values") {
  const HPoint i{0.0, 1.0};
  CHECK(hdist(i, i) == 0.0);
  CHECK(hdist(i, {0.0, std::exp(1.0)}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hdist(i, {1.0, 1.0}) == doctest::Approx(kAcosh1p5).epsilon(1e-14));
  // symmetry + triangle inequality on random triples
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.1, 5.0);
  for (int k = 0; k < 300; ++k) {
    const HPoint p{ux(rng), uy(rng)}, q{ux(rng), uy(rng)}, r{ux(rng), uy(rng)};
    CHECK(hdist(p, q) == doctest::Approx(hdist(q, p)).epsilon(1e-14));
    CHECK(hdist(p, r) <= hdist(p, q) + hdist(q, r) + 1e-12);
  }
}

TEST_CASE("perpendicular_foot: frozen cases and degenerate input") {
  const HGeodesic axis = HGeodesic::vertical_line(0.0);
  CHECK_THROWS_AS(perpendicular_foot({0.0, 2.0}, axis), DegenerateInput);

  auto [foot, d] = perpendicular_foot({1.0, 1.0}, axis);
  CHECK(d == doctest::Approx(kAsinh1).epsilon(1e-13));
  CHECK(foot.x == doctest::Approx(0.0));

  const HGeodesic circ = HGeodesic::half_circle(0.0, 2.0);
  auto [foot2, d2] = perpendicular_foot({0.0, 1.0}, circ);
  CHECK(d2 == doctest::Approx(kLn2).epsilon(1e-13));
  CHECK(foot2.x == doctest::Approx(0.0));
  CHECK(foot2.y == doctest::Approx(2.0));
}

TEST_CASE("perpendicular_foot: right angle and distance agreement") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.2, 4.0);
  for (int k = 0; k < 400; ++k) {
    const HPoint p{ux(rng), uy(rng)};
    const HGeodesic g = (k % 2) ? HGeodesic::vertical_line(ux(rng))
                                : HGeodesic::half_circle(ux(rng), uy(rng));
    if (dist_to_geodesic(p, g) < 1e-6) continue;
    auto [foot, d] = perpendicular_foot(p, g);
    CHECK(std::fabs(d - dist_to_geodesic(p, g)) < 1e-11);
    const HGeodesic perp = HGeodesic::through(p, foot);
    CHECK(std::fabs(angle_at(perp, p, g, walk(g, foot, 0.3), foot) - kPi / 2.0) < 1e-10);
    CHECK(hdist(p, foot) == doctest::Approx(d));
  }
}

TEST_CASE("walk moves the stated distance along the geodesic") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.2, 3.0), ud(-2.5, 2.5);
  for (int k = 0; k < 300; ++k) {
    const HGeodesic g = (k % 2) ? HGeodesic::vertical_line(ux(rng))
                                : HGeodesic::half_circle(ux(rng), uy(rng));
    const HPoint from = g.vertical
                            ? HPoint{g.foot, uy(rng)}
                            : walk(g, {g.center + g.radius, 1e-9}, 0.0);
    const HPoint start = g.vertical ? from : walk(g, HPoint{g.center, g.radius}, ud(rng));
    const double d = ud(rng);
    const HPoint to = walk(g, start, d);
    CHECK(hdist(start, to) == doctest::Approx(std::fabs(d)).epsilon(1e-12));
    CHECK(dist_to_geodesic(to, g) < 1e-12);
  }
}

TEST_CASE("isometries: invariance, inverses, determinant") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.1, 4.0);
  for (int k = 0; k < 500; ++k) {
    const HIsometry t = HIsometry::random(rng);
    CHECK(std::fabs(t.det() - 1.0) <= 1e-12);
    CHECK(t.m.cwiseAbs().maxCoeff() < 10.0);
    const HPoint p{ux(rng), uy(rng)}, q{ux(rng), uy(rng)};
    CHECK(std::fabs(hdist(t.apply(p), t.apply(q)) - hdist(p, q)) <= 1e-10);
    const HPoint back = t.inverse().apply(t.apply(p));
    CHECK(std::fabs(back.x - p.x) <= 1e-10);
    CHECK(std::fabs(back.y - p.y) <= 1e-10);
  }
}

TEST_CASE("construct_trirectangle: measured polygon matches every closed form") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    const double ab = rand_len(rng) / 2.0;
    const double phi = rand_angle(rng);
    const BuiltTrirectangle t = construct_trirectangle(ab, phi);

    CHECK(std::fabs(t.angle_a - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(t.angle_b - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(t.angle_c - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(t.angle_d - phi) < 1e-10);
    CHECK(std::fabs(t.ab - ab) < 1e-12);

    // The three relations routed through this library, all on one polygon.
    CHECK(std::fabs(t.bc - tri_half_collar(ab, phi)) < 1e-9);
    CHECK(std::fabs(t.cd - tri_cone_to_side(ab, phi)) < 1e-9);
    CHECK(std::fabs(t.da - tri_joker_perp(ab, phi)) < 1e-9);
    // Restated post-condition: cosh cd * sin phi = cosh ab.
    CHECK(std::cosh(t.cd) * std::sin(phi) ==
          doctest::Approx(std::cosh(t.ab)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(construct_trirectangle(1.0, kPi / 2.0), InvalidPolygon);
  CHECK_THROWS_AS(construct_trirectangle(-1.0, 0.5), InvalidPolygon);
}

TEST_CASE("construct_hexagon: regular case, nonexistence, random agreement") {
  const double s = 1.316957896924816708625;  // acosh 2
  const BuiltHexagon reg = construct_hexagon(s, s, s);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::fabs(reg.len[i] - s) < 1e-9);
    CHECK(std::fabs(reg.angle[i] - kPi / 2.0) < 1e-10);
  }
  CHECK_THROWS_AS(construct_hexagon(1.0, 1.0, 0.1), InvalidPolygon);

  std::mt19937_64 rng(43);
  for (int k = 0; k < 300; ++k) {
    const double a = rand_len(rng) / 2.0, b = rand_len(rng) / 2.0, g = rand_len(rng) / 2.0;
    double expect;
    try {
      expect = hexagon_opposite_side(a, b, g);
    } catch (const InvalidPolygon&) {
      CHECK_THROWS_AS(construct_hexagon(a, b, g), InvalidPolygon);
      continue;
    }
    const BuiltHexagon h = construct_hexagon(a, b, g);
    CHECK(std::fabs(h.len[4] - expect) < 1e-9);
    for (int i = 0; i < 6; ++i) CHECK(std::fabs(h.angle[i] - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(h.len[0] - a) < 1e-11);
    CHECK(std::fabs(h.len[1] - g) < 1e-11);
    CHECK(std::fabs(h.len[2] - b) < 1e-11);
  }
}

TEST_CASE("construct_vpiece_pentagon: angles close and split relations hold") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 150; ++k) {
    const double phi = rand_angle(rng);
    const double l1 = rand_len(rng) / 2.0, l2 = rand_len(rng) / 2.0;
    const BuiltPentagon p = construct_vpiece_pentagon(phi, l1, l2);

    CHECK(std::fabs(p.apex_angle - phi) < 1e-10);
    for (double a : p.right_angles) CHECK(std::fabs(a - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(p.half_l1 - l1) < 1e-11);
    CHECK(std::fabs(p.half_l2 - l2) < 1e-11);
    CHECK(std::fabs(p.c1 + p.c2 - p.seam) < 1e-10);
    CHECK(std::fabs(p.split_angle1 + p.split_angle2 - phi) < 1e-9);

    // The apex piece in the trirectangle holding half_l1 closes against the
    // shared perpendicular: sin(split1) = cosh(half_l1)/cosh(perp), and the
    // seam piece on that side is the half collar at split1.
    CHECK(std::sin(p.split_angle1) ==
          doctest::Approx(std::cosh(l1) / std::cosh(p.perp_len)).epsilon(1e-8));
    CHECK(std::sin(p.split_angle2) ==
          doctest::Approx(std::cosh(l2) / std::cosh(p.perp_len)).epsilon(1e-8));
    CHECK(std::fabs(p.c1 - tri_half_collar(l1, p.split_angle1)) < 1e-8);
    CHECK(std::fabs(p.c2 - tri_half_collar(l2, p.split_angle2)) < 1e-8);
    CHECK(std::fabs(p.d1 - tri_joker_perp(l1, p.split_angle1)) < 1e-8);
    CHECK(std::fabs(p.d2 - tri_joker_perp(l2, p.split_angle2)) < 1e-8);
  }
}

TEST_CASE("construct_hat_quad: angles close and split relations hold") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 150; ++k) {
    const double p1 = rand_angle(rng), p2 = rand_angle(rng);
    const double hl = rand_len(rng) / 2.0;
    const BuiltHatQuad q = construct_hat_quad(p1, p2, hl);

    CHECK(std::fabs(q.angle_p1 - p1) < 1e-10);
    CHECK(std::fabs(q.angle_p2 - p2) < 1e-10);
    for (double a : q.right_angles) CHECK(std::fabs(a - kPi / 2.0) < 1e-10);
    CHECK(std::fabs(q.half_len - hl) < 1e-11);
    CHECK(std::fabs(q.t1 + q.t2 - hl) < 1e-10);
    CHECK(std::fabs(q.b1 + q.b2 - q.bridge) < 1e-10);

    // Cone-to-boundary arcs and bridge pieces against the trirectangle forms.
    CHECK(std::fabs(q.e1 - tri_joker_perp(q.t1, p1)) < 1e-8);
    CHECK(std::fabs(q.e2 - tri_joker_perp(q.t2, p2)) < 1e-8);
    CHECK(std::cosh(q.b1) == doctest::Approx(std::cosh(q.t1) / std::sin(p1)).epsilon(1e-8));
    CHECK(std::cosh(q.b2) == doctest::Approx(std::cosh(q.t2) / std::sin(p2)).epsilon(1e-8));
    // Shared perpendicular closes: sinh(axis_dist) = cos(phi_i)/sinh(t_i).
    CHECK(std::sinh(q.axis_dist) ==
          doctest::Approx(std::cos(p1) / std::sinh(q.t1)).epsilon(1e-8));
    CHECK(std::sinh(q.axis_dist) ==
          doctest::Approx(std::cos(p2) / std::sinh(q.t2)).epsilon(1e-8));
  }
}

TEST_CASE("symmetric hat quad reduces to the quarter-length relation") {
  const BuiltHatQuad q = construct_hat_quad(kPi / 4.0, kPi / 4.0, 1.0);
  CHECK(q.t1 == doctest::Approx(0.5).epsilon(1e-11));
  CHECK(q.e1 == doctest::Approx(tri_joker_perp(0.5, kPi / 4.0)).epsilon(1e-9));
}
