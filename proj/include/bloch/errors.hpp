#pragma once

#include <stdexcept>
#include <string>

namespace bloch {

/// Thrown when an operation is called outside its domain of validity
/// (radius outside a bound's validity interval, malformed series, bad grid).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by bracketing methods when the endpoints do not straddle a root.
class NotBracketed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace bloch
