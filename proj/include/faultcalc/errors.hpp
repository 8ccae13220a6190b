#pragma once

#include <stdexcept>
#include <string>

namespace faultcalc {

/// Two matrices (or a matrix and a Dim) disagree on a dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the mathematical domain of an operation
/// (probability outside [0,1], improper distribution, non-sharp matrix where
/// a sharp one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Probability mass escaped a caller-supplied finite output dimension.
class TruncationError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace faultcalc
