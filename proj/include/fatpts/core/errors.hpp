#pragma once

#include <stdexcept>
#include <string>

namespace fatpts {

/// Malformed arguments or data violating a type invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs an ACM scheme was handed one that is not.
class NotAcm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PointNotInSupport : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A Hilbert table or search window does not cover what was asked of it.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fatpts
