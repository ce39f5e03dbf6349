#pragma once

// Upper half-plane model used as the brute-force oracle.  Polygons are built
// from explicit geodesics (half-circles centered on the real axis, or
// vertical lines) and every quantity is then *measured* from coordinates, so
// results here never flow through the closed forms in trig.hpp.
//
// Constructions place the first side on the imaginary axis.  Perpendicularity
// reduces to circle orthogonality; the only root-finding is a single
// bisection per construct_* call on the closing angle, bracket tolerance
// 1e-13.

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <random>
#include <utility>

namespace conesurf {

struct HPoint {
  double x = 0.0;
  double y = 1.0;  // y > 0
};

/// Geodesic: either a half-circle centered on the real axis or a vertical
/// line.  radius > 0 when circular.
struct HGeodesic {
  bool vertical = false;
  double foot = 0.0;    // x-intercept of a vertical line
  double center = 0.0;  // center of a half-circle
  double radius = 1.0;

  static HGeodesic vertical_line(double x0);
  static HGeodesic half_circle(double c, double r);
  /// Unique geodesic through two distinct points.
  static HGeodesic through(const HPoint& p, const HPoint& q);
};

/// Orientation-preserving isometry z -> (az+b)/(cz+d), det = 1.
struct HIsometry {
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();

  static HIsometry from_entries(double a, double b, double c, double d);
  static HIsometry translation(double t);   // z -> z + t
  static HIsometry scaling(double s);       // z -> e^s z
  static HIsometry rotation_about_i(double theta);
  /// Haphazard isometry with matrix entries bounded by ~10; deterministic in
  /// the generator state.
  static HIsometry random(std::mt19937_64& rng);

  HIsometry compose(const HIsometry& other) const;  // this after other
  HIsometry inverse() const;
  HPoint apply(const HPoint& p) const;
  double det() const { return m.determinant(); }
};

/// Hyperbolic distance, cosh d = 1 + ((dx)^2 + (dy)^2) / (2 y1 y2).
double hdist(const HPoint& p, const HPoint& q);

/// Distance from a point to a geodesic (0 if on it).
double dist_to_geodesic(const HPoint& p, const HGeodesic& g);

/// Foot of the perpendicular from p to g and the distance.  Throws
/// DegenerateInput when p lies on g within 1e-13.
std::pair<HPoint, double> perpendicular_foot(const HPoint& p, const HGeodesic& g);

/// Geodesic through p orthogonal to g (p not on g's axis of symmetry cases
/// are handled; p on g is fine, giving the perpendicular at p).
HGeodesic geodesic_orthogonal_through(const HGeodesic& g, const HPoint& p);

/// Geodesic through p with unit Euclidean tangent direction dir at p.
HGeodesic geodesic_with_tangent(const HPoint& p, double dir_x, double dir_y);

/// Unit Euclidean tangent of g at a point z of g, oriented so that it points
/// toward the side of `toward` (chord heuristic; valid for arcs < pi).
void tangent_at(const HGeodesic& g, const HPoint& z, const HPoint& toward,
                double& tx, double& ty);

/// Interior angle between two geodesics meeting at z, measured toward the
/// given far points on each.  Returns a value in [0, pi].
double angle_at(const HGeodesic& g1, const HPoint& toward1, const HGeodesic& g2,
                const HPoint& toward2, const HPoint& z);

/// Both intersection points of two distinct geodesics would be conjugate;
/// returns the upper half-plane one.  `ok` is false when they do not meet.
HPoint intersect(const HGeodesic& g1, const HGeodesic& g2, bool& ok);

/// Walk a signed hyperbolic distance along g starting at a point of g.
/// Positive direction: increasing y on a vertical line, increasing polar
/// angle on a half-circle.
HPoint walk(const HGeodesic& g, const HPoint& from, double signed_dist);

/// Common perpendicular of two disjoint, non-asymptotic geodesics: the
/// perpendicular geodesic, the two feet, and the distance between them.
/// Throws InvalidPolygon when none exists.
struct CommonPerp {
  HGeodesic perp;
  HPoint foot1, foot2;
  double length = 0.0;
};
CommonPerp common_perpendicular(const HGeodesic& g1, const HGeodesic& g2);

/// Euclidean circle realizing the hyperbolic circle of radius r about p.
struct EuclideanCircle {
  double cx, cy, r;
};
EuclideanCircle hyperbolic_circle(const HPoint& p, double r);

// ---------------------------------------------------------------------------
// Polygon constructions.  All angles are measured from tangents; every
// returned structure carries the measured sides so the closed forms can be
// validated against them.

struct BuiltTrirectangle {
  // Vertices A, B, C, D; right angles at A, B, C; acute angle at D.
  std::array<HPoint, 4> v;
  std::array<HGeodesic, 4> side;  // AB, BC, CD, DA
  double ab, bc, cd, da;          // measured side lengths
  double angle_a, angle_b, angle_c, angle_d;
};

/// Trirectangle with side AB = side_ab on the imaginary axis and acute angle
/// phi at D.  Throws InvalidPolygon when no trirectangle exists.
BuiltTrirectangle construct_trirectangle(double side_ab, double phi);

struct BuiltHexagon {
  std::array<HPoint, 6> v;  // V1..V6; sides V1V2 = a, V2V3 = gamma, V3V4 = b
  std::array<double, 6> len;  // measured side lengths, len[4] = side opposite gamma
  std::array<double, 6> angle;
};

/// Right-angled hexagon with consecutive sides a, gamma, b prescribed
/// (gamma between a and b).  Throws InvalidPolygon when the data admits no
/// hexagon.
BuiltHexagon construct_hexagon(double a, double b, double gamma);

struct BuiltPentagon {
  // Pentagon A1 A2 A3 A4 P: right angles at A1..A4, angle phi at P.
  // Side A1A2 = half_l1 on the boundary geodesic gamma1 (imaginary axis),
  // A2A3 = seam, A3A4 = half_l2 on gamma2, A4P and PA1 the cone arcs.
  std::array<HPoint, 5> v;
  double half_l1, seam, half_l2, d2, d1;  // measured sides in order
  double apex_angle;                      // measured angle at P
  std::array<double, 4> right_angles;     // at A1..A4
  // Split of the apex by the perpendicular from P to the seam:
  HPoint seam_foot;
  double c1, c2;          // seam pieces adjacent to gamma1 / gamma2
  double split_angle1;    // apex piece in the trirectangle containing half_l1
  double split_angle2;
  double perp_len;        // distance from P to the seam
};

/// V-piece half-polygon: pentagon with four right angles, apex angle phi
/// (half the cone angle), boundary half-lengths half_l1, half_l2.
BuiltPentagon construct_vpiece_pentagon(double phi, double half_l1, double half_l2);

struct BuiltHatQuad {
  // Quadrilateral P1 F1 F2 P2: right angles at F1, F2 on the boundary
  // geodesic (imaginary axis), angles phi1 at P1 and phi2 at P2.
  std::array<HPoint, 4> v;
  double e1, half_len, e2, bridge;  // measured sides P1F1, F1F2, F2P2, P2P1
  double angle_p1, angle_p2;
  std::array<double, 2> right_angles;
  // Split by the common perpendicular between boundary and bridge:
  HPoint boundary_foot, bridge_foot;
  double t1, t2;      // boundary pieces adjacent to F1 / F2
  double axis_dist;   // length of the common perpendicular
  double b1, b2;      // bridge pieces adjacent to P1 / P2
};

/// Joker's-hat half-polygon: quadrilateral with two right angles on the
/// boundary geodesic, cone angles phi1, phi2 at the other two vertices.
BuiltHatQuad construct_hat_quad(double phi1, double phi2, double half_len);

}  // namespace conesurf
