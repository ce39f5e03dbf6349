#include "conesurf/halfplane.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "conesurf/errors.hpp"
#include "conesurf/trig.hpp"

namespace conesurf {

namespace {

constexpr double kBracketTol = 1e-13;
constexpr double kOnTol = 1e-13;

double rot_x(double x, double y, double a) { return x * std::cos(a) - y * std::sin(a); }
double rot_y(double x, double y, double a) { return x * std::sin(a) + y * std::cos(a); }

// Bracket a root of f(t) = target on a log-spaced grid (f may return NaN
// where the configuration does not close), then bisect to kBracketTol.
double scan_bisect(const std::function<double(double)>& f, double target,
                   double lo, double hi, int grid, const char* what) {
  double prev_t = std::numeric_limits<double>::quiet_NaN();
  double prev_v = std::numeric_limits<double>::quiet_NaN();
  double a = 0.0, b = 0.0, fa = 0.0;
  bool have = false;
  const double step = std::log(hi / lo) / grid;
  for (int i = 0; i <= grid; ++i) {
    const double t = lo * std::exp(step * i);
    const double v = f(t);
    if (std::isfinite(v) && std::isfinite(prev_v) &&
        (prev_v - target) * (v - target) <= 0.0) {
      a = prev_t;
      b = t;
      fa = prev_v;
      have = true;
      break;
    }
    prev_t = t;
    prev_v = v;
  }
  if (!have) throw InvalidPolygon(std::string(what) + ": no closing configuration");
  while (b - a > kBracketTol) {
    const double mid = 0.5 * (a + b);
    const double v = f(mid);
    // NaN midpoints are pushed toward the invalid end of the bracket.
    const bool same_side = std::isfinite(v) ? ((fa - target) * (v - target) > 0.0)
                                            : !std::isfinite(fa);
    if (same_side) {
      a = mid;
      if (std::isfinite(v)) fa = v;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Point on the unit half-circle at hyperbolic arc distance s from (0,1),
// on the x > 0 side.
HPoint unit_circle_point(double s) {
  return {std::tanh(s), 1.0 / std::cosh(s)};
}

}  // namespace

HGeodesic HGeodesic::vertical_line(double x0) {
  HGeodesic g;
  g.vertical = true;
  g.foot = x0;
  return g;
}

HGeodesic HGeodesic::half_circle(double c, double r) {
  if (!(r > 0.0)) throw DegenerateInput("half_circle: radius must be positive");
  HGeodesic g;
  g.vertical = false;
  g.center = c;
  g.radius = r;
  return g;
}

HGeodesic HGeodesic::through(const HPoint& p, const HPoint& q) {
  const double scale = std::max({1.0, std::fabs(p.x), std::fabs(q.x)});
  if (std::fabs(p.x - q.x) < 1e-14 * scale) return vertical_line(0.5 * (p.x + q.x));
  const double c =
      (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
  return half_circle(c, std::hypot(p.x - c, p.y));
}

HIsometry HIsometry::from_entries(double a, double b, double c, double d) {
  HIsometry t;
  t.m << a, b, c, d;
  if (std::fabs(t.det() - 1.0) > 1e-12)
    throw DegenerateInput("HIsometry: determinant must be 1");
  return t;
}

HIsometry HIsometry::translation(double t) { return from_entries(1.0, t, 0.0, 1.0); }

HIsometry HIsometry::scaling(double s) {
  return from_entries(std::exp(s / 2.0), 0.0, 0.0, std::exp(-s / 2.0));
}

HIsometry HIsometry::rotation_about_i(double theta) {
  return from_entries(std::cos(theta / 2.0), std::sin(theta / 2.0),
                      -std::sin(theta / 2.0), std::cos(theta / 2.0));
}

HIsometry HIsometry::random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> sc(-1.5, 1.5);
  std::uniform_real_distribution<double> tr(-2.0, 2.0);
  return rotation_about_i(ang(rng)).compose(scaling(sc(rng))).compose(translation(tr(rng)));
}

HIsometry HIsometry::compose(const HIsometry& other) const {
  HIsometry t;
  t.m = m * other.m;
  return t;
}

HIsometry HIsometry::inverse() const {
  HIsometry t;
  t.m << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return t;
}

HPoint HIsometry::apply(const HPoint& p) const {
  const std::complex<double> z(p.x, p.y);
  const std::complex<double> w =
      (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
  return {w.real(), w.imag()};
}

double hdist(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return acosh_guarded(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

double dist_to_geodesic(const HPoint& p, const HGeodesic& g) {
  if (g.vertical) return std::asinh(std::fabs(p.x - g.foot) / p.y);
  const double dx = p.x - g.center;
  const double q = dx * dx + p.y * p.y - g.radius * g.radius;
  return std::asinh(std::fabs(q) / (2.0 * g.radius * p.y));
}

HGeodesic geodesic_orthogonal_through(const HGeodesic& g, const HPoint& p) {
  if (g.vertical) {
    return HGeodesic::half_circle(g.foot, std::hypot(p.x - g.foot, p.y));
  }
  if (std::fabs(p.x - g.center) < 1e-14 * std::max(1.0, std::fabs(g.center)))
    return HGeodesic::vertical_line(g.center);
  const double m = (p.x * p.x + p.y * p.y - g.center * g.center + g.radius * g.radius) /
                   (2.0 * (p.x - g.center));
  return HGeodesic::half_circle(m, std::hypot(p.x - m, p.y));
}

std::pair<HPoint, double> perpendicular_foot(const HPoint& p, const HGeodesic& g) {
  if (dist_to_geodesic(p, g) < kOnTol)
    throw DegenerateInput("perpendicular_foot: point lies on the geodesic");
  const HGeodesic perp = geodesic_orthogonal_through(g, p);
  bool ok = false;
  const HPoint foot = intersect(perp, g, ok);
  if (!ok) throw DegenerateInput("perpendicular_foot: no intersection (degenerate data)");
  return {foot, hdist(p, foot)};
}

HGeodesic geodesic_with_tangent(const HPoint& p, double dir_x, double dir_y) {
  if (std::fabs(dir_x) < 1e-14) return HGeodesic::vertical_line(p.x);
  const double c = p.x + p.y * dir_y / dir_x;
  return HGeodesic::half_circle(c, std::hypot(p.x - c, p.y));
}

void tangent_at(const HGeodesic& g, const HPoint& z, const HPoint& toward,
                double& tx, double& ty) {
  if (g.vertical) {
    tx = 0.0;
    ty = 1.0;
  } else {
    tx = -z.y / g.radius;
    ty = (z.x - g.center) / g.radius;
  }
  // Orient along the chord to the far point (all polygon arcs subtend < pi).
  const double cx = toward.x - z.x;
  const double cy = toward.y - z.y;
  if (tx * cx + ty * cy < 0.0) {
    tx = -tx;
    ty = -ty;
  }
}

double angle_at(const HGeodesic& g1, const HPoint& toward1, const HGeodesic& g2,
                const HPoint& toward2, const HPoint& z) {
  double ax, ay, bx, by;
  tangent_at(g1, z, toward1, ax, ay);
  tangent_at(g2, z, toward2, bx, by);
  const double dot = ax * bx + ay * by;
  const double cross = ax * by - ay * bx;
  return std::atan2(std::fabs(cross), dot);
}

HPoint intersect(const HGeodesic& g1, const HGeodesic& g2, bool& ok) {
  ok = false;
  if (g1.vertical && g2.vertical) return {};
  if (g1.vertical || g2.vertical) {
    const HGeodesic& v = g1.vertical ? g1 : g2;
    const HGeodesic& c = g1.vertical ? g2 : g1;
    const double dx = v.foot - c.center;
    const double y2 = c.radius * c.radius - dx * dx;
    if (y2 <= 0.0) return {};
    ok = true;
    return {v.foot, std::sqrt(y2)};
  }
  const double dc = g2.center - g1.center;
  if (std::fabs(dc) < 1e-14 * std::max(1.0, std::fabs(g1.center))) return {};
  const double x = (g1.radius * g1.radius - g2.radius * g2.radius -
                    g1.center * g1.center + g2.center * g2.center) /
                   (2.0 * dc);
  const double y2 = g1.radius * g1.radius - (x - g1.center) * (x - g1.center);
  if (y2 <= 0.0) return {};
  ok = true;
  return {x, std::sqrt(y2)};
}

HPoint walk(const HGeodesic& g, const HPoint& from, double signed_dist) {
  if (g.vertical) return {g.foot, from.y * std::exp(signed_dist)};
  // Arc length element along (c + r cos t, r sin t) is dt / sin t, so the
  // log-half-tangent of the polar angle moves linearly with distance.
  const double t0 = std::atan2(from.y, from.x - g.center);
  const double ht = std::tan(t0 / 2.0) * std::exp(signed_dist);
  const double t1 = 2.0 * std::atan(ht);
  return {g.center + g.radius * std::cos(t1), g.radius * std::sin(t1)};
}

CommonPerp common_perpendicular(const HGeodesic& g1, const HGeodesic& g2) {
  if (g1.vertical && g2.vertical)
    throw InvalidPolygon("common_perpendicular: two vertical geodesics are asymptotic");
  CommonPerp out;
  if (g1.vertical || g2.vertical) {
    const HGeodesic& v = g1.vertical ? g1 : g2;
    const HGeodesic& c = g1.vertical ? g2 : g1;
    const double rr = (v.foot - c.center) * (v.foot - c.center) - c.radius * c.radius;
    if (rr <= 0.0)
      throw InvalidPolygon("common_perpendicular: geodesics intersect");
    out.perp = HGeodesic::half_circle(v.foot, std::sqrt(rr));
    HPoint on_v{v.foot, std::sqrt(rr)};
    bool ok = false;
    HPoint on_c = intersect(out.perp, c, ok);
    if (!ok) throw InvalidPolygon("common_perpendicular: feet not found");
    out.foot1 = g1.vertical ? on_v : on_c;
    out.foot2 = g1.vertical ? on_c : on_v;
    out.length = hdist(out.foot1, out.foot2);
    return out;
  }
  const double dm = g1.center - g2.center;
  if (std::fabs(dm) < 1e-14 * std::max(1.0, std::fabs(g1.center))) {
    if (std::fabs(g1.radius - g2.radius) < 1e-14 * g1.radius)
      throw InvalidPolygon("common_perpendicular: identical geodesics");
    out.perp = HGeodesic::vertical_line(g1.center);
    out.foot1 = {g1.center, g1.radius};
    out.foot2 = {g2.center, g2.radius};
    out.length = std::fabs(std::log(g1.radius / g2.radius));
    return out;
  }
  const double mu = (g1.center * g1.center - g2.center * g2.center +
                     g2.radius * g2.radius - g1.radius * g1.radius) /
                    (2.0 * dm);
  const double rr = (mu - g1.center) * (mu - g1.center) - g1.radius * g1.radius;
  if (rr <= 0.0) throw InvalidPolygon("common_perpendicular: geodesics intersect");
  out.perp = HGeodesic::half_circle(mu, std::sqrt(rr));
  bool ok1 = false, ok2 = false;
  out.foot1 = intersect(out.perp, g1, ok1);
  out.foot2 = intersect(out.perp, g2, ok2);
  if (!ok1 || !ok2) throw InvalidPolygon("common_perpendicular: feet not found");
  out.length = hdist(out.foot1, out.foot2);
  return out;
}

EuclideanCircle hyperbolic_circle(const HPoint& p, double r) {
  return {p.x, p.y * std::cosh(r), p.y * std::sinh(r)};
}

BuiltTrirectangle construct_trirectangle(double side_ab, double phi) {
  if (!(std::isfinite(side_ab) && side_ab > 0.0) || !is_half_angle(phi))
    throw InvalidPolygon("construct_trirectangle: no trirectangle for this data");

  const HPoint a{0.0, 1.0};
  const HPoint b{0.0, std::exp(side_ab)};
  const HGeodesic axis = HGeodesic::vertical_line(0.0);
  const HGeodesic perp_a = HGeodesic::half_circle(0.0, 1.0);
  const HGeodesic perp_b = HGeodesic::half_circle(0.0, b.y);

  const auto apex_angle = [&](double s) -> double {
    const HPoint d = unit_circle_point(s);
    const HGeodesic cd = geodesic_orthogonal_through(perp_b, d);
    bool ok = false;
    const HPoint c = intersect(cd, perp_b, ok);
    if (!ok) return std::numeric_limits<double>::quiet_NaN();
    return angle_at(perp_a, a, cd, c, d);
  };

  const double s = scan_bisect(apex_angle, phi, 1e-6, 350.0, 260, "construct_trirectangle");

  BuiltTrirectangle out;
  const HPoint d = unit_circle_point(s);
  const HGeodesic cd = geodesic_orthogonal_through(perp_b, d);
  bool ok = false;
  const HPoint c = intersect(cd, perp_b, ok);
  if (!ok) throw InvalidPolygon("construct_trirectangle: failed to close");
  out.v = {a, b, c, d};
  out.side = {axis, perp_b, cd, perp_a};
  out.ab = hdist(a, b);
  out.bc = hdist(b, c);
  out.cd = hdist(c, d);
  out.da = hdist(d, a);
  out.angle_a = angle_at(axis, b, perp_a, d, a);
  out.angle_b = angle_at(axis, a, perp_b, c, b);
  out.angle_c = angle_at(perp_b, b, cd, d, c);
  out.angle_d = angle_at(cd, c, perp_a, a, d);
  return out;
}

BuiltHexagon construct_hexagon(double a, double b, double gamma) {
  if (!(a > 0.0 && b > 0.0 && gamma > 0.0))
    throw InvalidPolygon("construct_hexagon: sides must be positive");

  // Side gamma on the imaginary axis between V2 and V3; a and b leave it at
  // right angles on the x > 0 side.
  const HPoint v2{0.0, 1.0};
  const HPoint v3{0.0, std::exp(gamma)};
  const HGeodesic axis = HGeodesic::vertical_line(0.0);
  const HGeodesic ga = HGeodesic::half_circle(0.0, 1.0);       // carries side a
  const HGeodesic gb = HGeodesic::half_circle(0.0, v3.y);      // carries side b
  const HPoint v1 = unit_circle_point(a);
  const HPoint u = unit_circle_point(b);
  const HPoint v4{v3.y * u.x, v3.y * u.y};

  const HGeodesic g61 = geodesic_orthogonal_through(ga, v1);
  const HGeodesic g45 = geodesic_orthogonal_through(gb, v4);
  // The hexagon closes only when the two perpendicular geodesics sit side by
  // side along the real axis.  Nested endpoint intervals still admit a common
  // perpendicular but the polygon would fold through itself.
  const double lo1 = g61.center - g61.radius, hi1 = g61.center + g61.radius;
  const double lo2 = g45.center - g45.radius, hi2 = g45.center + g45.radius;
  if (!(std::max(lo1, lo2) > std::min(hi1, hi2)))
    throw InvalidPolygon("construct_hexagon: no right-angled hexagon with these sides");
  const CommonPerp cp = common_perpendicular(g61, g45);

  BuiltHexagon out;
  const HPoint v6 = cp.foot1;
  const HPoint v5 = cp.foot2;
  out.v = {v1, v2, v3, v4, v5, v6};
  out.len = {hdist(v1, v2), hdist(v2, v3), hdist(v3, v4),
             hdist(v4, v5), hdist(v5, v6), hdist(v6, v1)};
  out.angle = {angle_at(g61, v6, ga, v2, v1),  angle_at(ga, v1, axis, v3, v2),
               angle_at(axis, v2, gb, v4, v3), angle_at(gb, v3, g45, v5, v4),
               angle_at(g45, v4, cp.perp, v6, v5), angle_at(cp.perp, v5, g61, v1, v6)};
  return out;
}

BuiltPentagon construct_vpiece_pentagon(double phi, double half_l1, double half_l2) {
  if (!is_half_angle(phi) || !(half_l1 > 0.0) || !(half_l2 > 0.0))
    throw InvalidPolygon("construct_vpiece_pentagon: invalid data");

  const HPoint a2{0.0, 1.0};
  const HPoint a1{0.0, std::exp(half_l1)};
  const HGeodesic axis = HGeodesic::vertical_line(0.0);
  const HGeodesic seam_geo = HGeodesic::half_circle(0.0, 1.0);
  const HGeodesic d1_geo = HGeodesic::half_circle(0.0, a1.y);

  struct Closed {
    HPoint a3, a4, p;
    HGeodesic g2, d2_geo;
    double apex;
  };
  const auto close = [&](double sigma) -> Closed {
    Closed c;
    c.a3 = unit_circle_point(sigma);
    c.g2 = geodesic_orthogonal_through(seam_geo, c.a3);
    c.a4 = walk(c.g2, c.a3, -half_l2);  // away from the axis side
    c.d2_geo = geodesic_orthogonal_through(c.g2, c.a4);
    c.apex = std::numeric_limits<double>::quiet_NaN();
    // The pentagon lives in x > 0; a cone arc reaching across the boundary
    // axis means sigma is on the wrong branch.
    if (!c.d2_geo.vertical && c.d2_geo.center - c.d2_geo.radius <= 0.0) return c;
    bool ok = false;
    c.p = intersect(d1_geo, c.d2_geo, ok);
    if (ok && c.p.x > 0.0) c.apex = angle_at(d1_geo, a1, c.d2_geo, c.a4, c.p);
    return c;
  };

  const double sigma = scan_bisect([&](double s) { return close(s).apex; }, phi,
                                   1e-6, 350.0, 260, "construct_vpiece_pentagon");
  const Closed c = close(sigma);
  if (!std::isfinite(c.apex))
    throw InvalidPolygon("construct_vpiece_pentagon: failed to close");

  BuiltPentagon out;
  out.v = {a1, a2, c.a3, c.a4, c.p};
  out.half_l1 = hdist(a1, a2);
  out.seam = hdist(a2, c.a3);
  out.half_l2 = hdist(c.a3, c.a4);
  out.d2 = hdist(c.a4, c.p);
  out.d1 = hdist(c.p, a1);
  out.apex_angle = c.apex;
  out.right_angles = {angle_at(d1_geo, c.p, axis, a2, a1),
                      angle_at(axis, a1, seam_geo, c.a3, a2),
                      angle_at(seam_geo, a2, c.g2, c.a4, c.a3),
                      angle_at(c.g2, c.a3, c.d2_geo, c.p, c.a4)};

  const auto [foot, plen] = perpendicular_foot(c.p, seam_geo);
  out.seam_foot = foot;
  out.perp_len = plen;
  out.c1 = hdist(a2, foot);
  out.c2 = hdist(foot, c.a3);
  const HGeodesic perp_geo = geodesic_orthogonal_through(seam_geo, c.p);
  out.split_angle1 = angle_at(d1_geo, a1, perp_geo, foot, c.p);
  out.split_angle2 = angle_at(c.d2_geo, c.a4, perp_geo, foot, c.p);
  return out;
}

BuiltHatQuad construct_hat_quad(double phi1, double phi2, double half_len) {
  if (!is_half_angle(phi1) || !is_half_angle(phi2) || !(half_len > 0.0))
    throw InvalidPolygon("construct_hat_quad: invalid data");

  const HPoint f1{0.0, 1.0};
  const HPoint f2{0.0, std::exp(half_len)};
  const HGeodesic axis = HGeodesic::vertical_line(0.0);
  const HGeodesic e1_geo = HGeodesic::half_circle(0.0, 1.0);
  const HGeodesic e2_geo = HGeodesic::half_circle(0.0, f2.y);

  struct Closed {
    HPoint p1, p2;
    HGeodesic bridge;
    double far_angle;
  };
  const auto close = [&](double u) -> Closed {
    Closed c;
    c.p1 = unit_circle_point(u);
    double tx, ty;
    tangent_at(e1_geo, c.p1, f1, tx, ty);
    // Interior angle phi1 between the arc toward F1 and the bridge; the
    // quadrilateral lies on the clockwise side for the x > 0 construction.
    const double dx = rot_x(tx, ty, -phi1);
    const double dy = rot_y(tx, ty, -phi1);
    c.bridge = geodesic_with_tangent(c.p1, dx, dy);
    bool ok = false;
    c.p2 = intersect(c.bridge, e2_geo, ok);
    c.far_angle = ok ? angle_at(c.bridge, c.p1, e2_geo, f2, c.p2)
                     : std::numeric_limits<double>::quiet_NaN();
    return c;
  };

  const double u = scan_bisect([&](double t) { return close(t).far_angle; }, phi2,
                               1e-6, 350.0, 260, "construct_hat_quad");
  const Closed c = close(u);
  if (!std::isfinite(c.far_angle))
    throw InvalidPolygon("construct_hat_quad: failed to close");

  BuiltHatQuad out;
  out.v = {c.p1, f1, f2, c.p2};
  out.e1 = hdist(c.p1, f1);
  out.half_len = hdist(f1, f2);
  out.e2 = hdist(f2, c.p2);
  out.bridge = hdist(c.p2, c.p1);
  out.angle_p1 = angle_at(e1_geo, f1, c.bridge, c.p2, c.p1);
  out.angle_p2 = c.far_angle;
  out.right_angles = {angle_at(e1_geo, c.p1, axis, f2, f1),
                      angle_at(axis, f1, e2_geo, c.p2, f2)};

  const CommonPerp cp = common_perpendicular(axis, c.bridge);
  out.boundary_foot = cp.foot1;
  out.bridge_foot = cp.foot2;
  out.axis_dist = cp.length;
  out.t1 = hdist(f1, cp.foot1);
  out.t2 = hdist(cp.foot1, f2);
  out.b1 = hdist(c.p1, cp.foot2);
  out.b2 = hdist(cp.foot2, c.p2);
  return out;
}

}  // namespace conesurf
