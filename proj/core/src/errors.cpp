#include "jacspec/errors.hpp"

namespace jacspec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonPositiveOffDiagonal: return "NonPositiveOffDiagonal";
    case ErrorKind::NonPositiveTheta: return "NonPositiveTheta";
    case ErrorKind::ThetaOne: return "ThetaOne";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::DegenerateMeasure: return "DegenerateMeasure";
    case ErrorKind::DegenerateSplit: return "DegenerateSplit";
    case ErrorKind::BadSelection: return "BadSelection";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnsupportedModification: return "UnsupportedModification";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace jacspec
