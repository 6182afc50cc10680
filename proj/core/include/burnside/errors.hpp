#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

// Signed 64-bit arithmetic that would wrap raises this instead of wrapping.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size limit (group order, point count, truncation, degree) was hit.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A persisted table failed validation on load; callers recompute.
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace burnside
