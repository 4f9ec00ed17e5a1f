#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaintrail {

/// Malformed input: bad file syntax, unknown ids, out-of-range generators.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated contract.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration exceeded the caller-supplied cap.
struct enumeration_overflow : std::runtime_error {
  explicit enumeration_overflow(std::size_t cap_)
      : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap_)), cap(cap_) {}
  std::size_t cap;
};

}  // namespace gaintrail
