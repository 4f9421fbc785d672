#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

/// A formula denominator vanished, or came closer to zero than the
/// evaluation can tolerate.
class SingularParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// random_generic could not find a generic parameter point.
class SamplingExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap of an exponential- or factorial-cost route was exceeded.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace sixv
