#pragma once

#include <stdexcept>
#include <string>

namespace fibint {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unsupported or malformed configuration (group label, family, rank).
struct config_error : error {
  using error::error;
};

/// Well-formed configuration but invalid values (non-dominant xi, dimension
/// mismatch, non-invariant input).
struct domain_error : error {
  using error::error;
};

/// Request exceeds a configured resource cap (Weyl group enumeration).
struct resource_error : error {
  using error::error;
};

/// An internal invariant was violated; always indicates a bug.
struct integrity_error : error {
  using error::error;
};

}  // namespace fibint
