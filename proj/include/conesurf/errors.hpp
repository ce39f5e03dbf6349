#pragma once

#include <stdexcept>
#include <string>

namespace conesurf {

/// Polygon data that does not close to a valid hyperbolic polygon.
struct InvalidPolygon : std::domain_error {
  explicit InvalidPolygon(const std::string& msg) : std::domain_error(msg) {}
};

/// Point lies on the geodesic (no perpendicular foot), collapsed pants, etc.
struct DegenerateInput : std::domain_error {
  explicit DegenerateInput(const std::string& msg) : std::domain_error(msg) {}
};

/// Signature outside the admissible range (g,n) >= (0,4), (g,n) != (1,0).
struct InadmissibleSignature : std::invalid_argument {
  explicit InadmissibleSignature(const std::string& msg)
      : std::invalid_argument(msg) {}
};

/// Ledger event that is illegal in the current ledger state.
struct InvalidEvent : std::invalid_argument {
  explicit InvalidEvent(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace conesurf
