#pragma once

// Scalar hyperbolic-trigonometric kernel: guarded inverse functions and the
// polygon relations used by the pants / collar machinery.
//
// Trirectangle convention used throughout this library:
//
//   Vertices A, B, C, D in cyclic order, right angles at A, B, C and the
//   acute angle phi at D.  Sides ab = AB, bc = BC, cd = CD, da = DA, so that
//   ab and bc run between right angles while cd and da end at the acute
//   vertex.  Opposite pairs are (ab, cd) and (bc, da).  The relation set:
//
//     sin phi  = cosh ab / cosh cd = cosh bc / cosh da
//     cos phi  = sinh ab * sinh bc = tanh cd * tanh da
//     sinh cd  = sinh ab * cosh da,   sinh da = sinh bc * cosh cd
//     sinh cd  = coth bc * cot phi,   sinh da = coth ab * cot phi
//
//   Any consistent labeling of the figure produces the same printed
//   relations; this one is fixed so that the oracle construction and the
//   closed forms below agree side-by-side.

#include <cmath>

namespace conesurf {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// arccosh with domain guard; stable near x = 1 (series in sqrt(2(x-1))).
/// Throws std::domain_error for x < 1.
double acosh_guarded(double x);

/// arcsinh restricted to nonnegative arguments (widths and distances).
/// Throws std::domain_error for x < 0.
double asinh_guarded(double x);

/// True iff phi is a valid half cone angle, i.e. phi in the open (0, pi/2).
bool is_half_angle(double phi);

/// Validate a half cone angle / positive length; throw std::domain_error.
void require_half_angle(double phi, const char* what = "half angle");
void require_positive_length(double x, const char* what = "length");

/// Side cd of a trirectangle from the opposite side ab = h and the acute
/// angle: cosh cd = cosh h / sin phi.  Always exceeds acosh(1/sin phi).
double tri_cone_to_side(double h, double phi);

/// Side bc from the adjacent side ab = half_len and the acute angle:
/// sinh bc = cos phi / sinh half_len.  This is the half-collar width of a
/// boundary geodesic of length 2*half_len cut off by an angle-phi corner.
double tri_half_collar(double half_len, double phi);

/// Side cd from the adjacent side bc = quarter_len and the acute angle:
/// sinh cd = coth quarter_len * cot phi.  Distance from a cone point to the
/// boundary geodesic in the symmetric two-cone pants with boundary length
/// 4*quarter_len.
double tri_joker_perp(double quarter_len, double phi);

/// Right-angled hexagon, alternating sides a, gamma, b consecutive: returns
/// the side c opposite gamma, cosh c = sinh a sinh b cosh gamma - cosh a
/// cosh b.  Throws InvalidPolygon when the right-hand side is <= 1 (no such
/// hexagon).
double hexagon_opposite_side(double a, double b, double gamma);

/// Inverse form of the hexagon relation: the side gamma between a and b
/// given the side c opposite it, cosh gamma = (cosh c + cosh a cosh b) /
/// (sinh a sinh b).  Used for seams, always well defined for positive data.
double hexagon_side_between(double a, double b, double c_opposite);

/// Closed form for sinh(w + v) where w is the geodesic collar width of a
/// geodesic of length len and v the cone collar width at half angle phi:
/// (1 + sqrt(cos^2 phi + sinh^2(len/2))) / sinh(len/2) * cot phi.
double collar_sum_sinh(double len, double phi);

}  // namespace conesurf
