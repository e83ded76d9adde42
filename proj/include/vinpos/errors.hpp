#pragma once

#include <stdexcept>

namespace vinpos {

/// Raised when an interval is requested for bottom not <= top.
class NotComparableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a closed form is requested outside its hypotheses.
class NotApplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vinpos
