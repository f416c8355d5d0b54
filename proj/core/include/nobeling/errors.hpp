#pragma once

#include <stdexcept>
#include <string>

namespace nobeling {

// Points or lines living in different ambient dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A map evaluated outside the set it is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction whose requested guarantees cannot be met with the given data.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nobeling
