#include "jacspec/tolerances.hpp"

#include "jacspec/errors.hpp"

namespace jacspec {

void Tolerances::validate() const {
  if (tol_eig <= 0 || tol_match <= 0 || tol_rank <= 0 || tol_weight <= 0 ||
      tol_identity <= 0) {
    fail(ErrorKind::InvalidData, "tolerances must be positive");
  }
  if (tol_identity < tol_eig) {
    fail(ErrorKind::InvalidData, "tol_identity must be >= tol_eig");
  }
  if (eig_max_iter <= 0 || bisection_max_iter <= 0) {
    fail(ErrorKind::InvalidData, "iteration caps must be positive");
  }
}

const Tolerances& default_tolerances() {
  static const Tolerances defaults{};
  return defaults;
}

}  // namespace jacspec
