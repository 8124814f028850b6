#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Absolute tolerance for closed-set membership and boundary comparisons.
inline constexpr double kGeomTol = 1e-9;

// Thrown when an exact search would exceed its documented size or work cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pierce
