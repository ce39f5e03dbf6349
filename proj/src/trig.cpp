#include "conesurf/trig.hpp"

#include <stdexcept>

#include "conesurf/errors.hpp"

namespace conesurf {

double acosh_guarded(double x) {
  if (!(x >= 1.0))
    throw std::domain_error("acosh_guarded: argument below 1 (inconsistent polygon data)");
  const double eps = x - 1.0;
  if (eps < 1e-8) {
    // acosh(1+e) = sqrt(2e) * (1 - e/12 + 3e^2/160 - ...)
    const double s = std::sqrt(2.0 * eps);
    return s * (1.0 - eps / 12.0 + 3.0 * eps * eps / 160.0);
  }
  return std::acosh(x);
}

double asinh_guarded(double x) {
  if (!(x >= 0.0))
    throw std::domain_error("asinh_guarded: negative argument (widths are nonnegative)");
  return std::asinh(x);
}

bool is_half_angle(double phi) {
  return std::isfinite(phi) && phi > 0.0 && phi < kPi / 2.0;
}

void require_half_angle(double phi, const char* what) {
  if (!is_half_angle(phi))
    throw std::domain_error(std::string(what) + ": half angle must lie in (0, pi/2)");
}

void require_positive_length(double x, const char* what) {
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error(std::string(what) + ": length must be positive and finite");
}

double tri_cone_to_side(double h, double phi) {
  require_positive_length(h, "tri_cone_to_side");
  require_half_angle(phi, "tri_cone_to_side");
  return acosh_guarded(std::cosh(h) / std::sin(phi));
}

double tri_half_collar(double half_len, double phi) {
  require_positive_length(half_len, "tri_half_collar");
  require_half_angle(phi, "tri_half_collar");
  return asinh_guarded(std::cos(phi) / std::sinh(half_len));
}

double tri_joker_perp(double quarter_len, double phi) {
  require_positive_length(quarter_len, "tri_joker_perp");
  require_half_angle(phi, "tri_joker_perp");
  return asinh_guarded(1.0 / std::tanh(quarter_len) / std::tan(phi));
}

double hexagon_opposite_side(double a, double b, double gamma) {
  require_positive_length(a, "hexagon_opposite_side");
  require_positive_length(b, "hexagon_opposite_side");
  require_positive_length(gamma, "hexagon_opposite_side");
  const double rhs =
      std::sinh(a) * std::sinh(b) * std::cosh(gamma) - std::cosh(a) * std::cosh(b);
  if (rhs <= 1.0)
    throw InvalidPolygon("hexagon_opposite_side: no right-angled hexagon with these sides");
  return acosh_guarded(rhs);
}

double hexagon_side_between(double a, double b, double c_opposite) {
  require_positive_length(a, "hexagon_side_between");
  require_positive_length(b, "hexagon_side_between");
  require_positive_length(c_opposite, "hexagon_side_between");
  const double rhs =
      (std::cosh(c_opposite) + std::cosh(a) * std::cosh(b)) / (std::sinh(a) * std::sinh(b));
  return acosh_guarded(rhs);
}

double collar_sum_sinh(double len, double phi) {
  require_positive_length(len, "collar_sum_sinh");
  require_half_angle(phi, "collar_sum_sinh");
  const double sh = std::sinh(len / 2.0);
  const double c = std::cos(phi);
  return (1.0 + std::sqrt(c * c + sh * sh)) / sh / std::tan(phi);
}

}  // namespace conesurf
