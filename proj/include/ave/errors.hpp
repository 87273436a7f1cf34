#ifndef AVE_ERRORS_HPP
#define AVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ave {

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct NotApplicableError : std::runtime_error {
  explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidKindError : std::runtime_error {
  explicit InvalidKindError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the Newton step when A - diag(d) is singular; carries the
/// offending sign pattern.
struct SingularJacobianError : std::runtime_error {
  SingularJacobianError(const std::string& what, std::vector<int> d)
      : std::runtime_error(what), pattern(std::move(d)) {}
  std::vector<int> pattern;
};

}  // namespace ave

#endif
