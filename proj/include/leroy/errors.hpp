#ifndef LEROY_ERRORS_HPP
#define LEROY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leroy {

/// Gamma evaluated at 0 or a negative integer.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Result magnitude exceeds double range; callers should work in log space.
class OverflowError : public std::range_error {
 public:
  explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

/// Series hit the hard term cap before the stopping rule fired.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// F(0) != 1: the params are not unit-normalized as the check requires.
class NormalizationError : public std::domain_error {
 public:
  explicit NormalizationError(const std::string& what) : std::domain_error(what) {}
};

/// Wrong number of parameter triples for a single-triple operation.
class ArityError : public std::invalid_argument {
 public:
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace leroy

#endif  // LEROY_ERRORS_HPP
