#ifndef JACSPEC_JSON_IO_HPP
#define JACSPEC_JSON_IO_HPP

#include <complex>
#include <string>

#include "json.hpp"

#include "jacspec/corpus.hpp"
#include "jacspec/determinacy.hpp"
#include "jacspec/green.hpp"
#include "jacspec/measure.hpp"
#include "jacspec/perturb.hpp"
#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"

namespace jacspec {

// Wire formats:
//   JacobiMatrix      {"q":[...],"b":[...]}
//   EigenSystem       {"values":[...],"vectors":[[...],...]}
//   DiscreteMeasure   {"points":[...],"weights":[...]}
//   HerglotzRational  {"shift":x,"poles":[...],"residues":[...]}
//   complex           {"re":x,"im":y}
//   MeasureDescriptor {"base":"DET:3","ops":[{"kind":"AddMasses","l":2},...]}
//   InverseProblem    {"S":[...],"S_tilde":[...],"n":3,"gamma":0.5}
// Parsing validates the type invariants and throws InvalidData /
// LengthMismatch / NonPositiveOffDiagonal accordingly.

nlohmann::json to_json(const JacobiMatrix& J);
JacobiMatrix jacobi_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EigenSystem& sys);
EigenSystem eigensystem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HerglotzRational& f);
HerglotzRational herglotz_from_json(const nlohmann::json& j);

nlohmann::json to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MeasureDescriptor& d);
MeasureDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InverseProblem& p);
InverseProblem inverse_problem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GreenDecomposition& d);

nlohmann::json to_json(const SolutionReport& r);
nlohmann::json to_json(const InverseSolution& s);

/// Partial override: only the keys present in j are replaced.
Tolerances tolerances_from_json(const nlohmann::json& j,
                                const Tolerances& base = default_tolerances());

/// Parses "a", "bi", "a+bi" / "a-bi" (also accepts "j" for the unit).
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated doubles ("1,2.5,-3e-2"); empty string gives {}.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace jacspec

#endif  // JACSPEC_JSON_IO_HPP
