#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

/// Bad input or configuration: negative energies, misordered prices, bad files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reciprocal term (virtual cost, curvature) was evaluated at a non-positive SoC.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Signals a bug upstream, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A ratio metric was requested with a zero denominator.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sfc
