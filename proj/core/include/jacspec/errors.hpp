#ifndef JACSPEC_ERRORS_HPP
#define JACSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacspec {

/// Failure categories shared by every operation in the toolkit. The CLI maps
/// these 1:1 onto the {"kind","detail"} error objects it prints.
enum class ErrorKind {
  LengthMismatch,
  NonPositiveOffDiagonal,
  NonPositiveTheta,
  ThetaOne,
  IndexOutOfRange,
  ConvergenceFailure,
  PoleEvaluation,
  DegenerateMeasure,
  DegenerateSplit,
  BadSelection,
  NoSolution,
  InvalidData,
  PreconditionViolated,
  UnsupportedModification,
  UnsupportedCase,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace jacspec

#endif  // JACSPEC_ERRORS_HPP
