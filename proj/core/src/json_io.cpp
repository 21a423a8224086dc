#include "jacspec/json_io.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>

#include "jacspec/errors.hpp"

namespace jacspec {

using nlohmann::json;

namespace {

std::vector<double> doubles_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    fail(ErrorKind::InvalidData, std::string("missing array field '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) {
      fail(ErrorKind::InvalidData, std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    fail(ErrorKind::InvalidData, std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

long integer_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    fail(ErrorKind::InvalidData, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<long>();
}

}  // namespace

json to_json(const JacobiMatrix& J) { return json{{"q", J.q}, {"b", J.b}}; }

JacobiMatrix jacobi_from_json(const json& j) {
  return build_jacobi(doubles_field(j, "q"), doubles_field(j, "b"));
}

json to_json(const EigenSystem& sys) {
  return json{{"values", sys.values}, {"vectors", sys.vectors}};
}

EigenSystem eigensystem_from_json(const json& j) {
  EigenSystem sys;
  sys.values = doubles_field(j, "values");
  if (!j.contains("vectors") || !j.at("vectors").is_array()) {
    fail(ErrorKind::InvalidData, "missing array field 'vectors'");
  }
  for (const auto& row : j.at("vectors")) {
    std::vector<double> v;
    for (const auto& x : row) v.push_back(x.get<double>());
    sys.vectors.push_back(std::move(v));
  }
  if (sys.vectors.size() != sys.values.size()) {
    fail(ErrorKind::LengthMismatch, "values/vectors count mismatch");
  }
  return sys;
}

json to_json(const DiscreteMeasure& m) {
  return json{{"points", m.points}, {"weights", m.weights}};
}

DiscreteMeasure measure_from_json(const json& j) {
  return make_measure(doubles_field(j, "points"), doubles_field(j, "weights"));
}

json to_json(const HerglotzRational& f) {
  return json{{"shift", f.shift}, {"poles", f.poles}, {"residues", f.residues}};
}

HerglotzRational herglotz_from_json(const json& j) {
  HerglotzRational f;
  f.shift = number_field(j, "shift");
  f.poles = doubles_field(j, "poles");
  f.residues = doubles_field(j, "residues");
  if (f.poles.size() != f.residues.size()) {
    fail(ErrorKind::LengthMismatch, "poles/residues length mismatch");
  }
  for (double eta : f.residues) {
    if (!(eta > 0.0)) fail(ErrorKind::InvalidData, "residues must be positive");
  }
  for (std::size_t k = 1; k < f.poles.size(); ++k) {
    if (!(f.poles[k] > f.poles[k - 1])) {
      fail(ErrorKind::InvalidData, "poles must be strictly increasing");
    }
  }
  return f;
}

json to_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const json& j) {
  return {number_field(j, "re"), number_field(j, "im")};
}

json to_json(const MeasureDescriptor& d) {
  json ops = json::array();
  for (const Modification& op : d.ops) {
    std::visit(
        [&ops](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, AddMasses>) {
            ops.push_back(json{{"kind", "AddMasses"}, {"l", m.outside_count}});
          } else if constexpr (std::is_same_v<T, MultiplyPolySq>) {
            ops.push_back(json{{"kind", "MultiplyPolySq"},
                               {"l", m.outside_zero_count},
                               {"simple_zeros", m.simple_zeros}});
          } else if constexpr (std::is_same_v<T, MoveMasses>) {
            ops.push_back(json{{"kind", "MoveMasses"},
                               {"removed", m.removed},
                               {"added_outside", m.added_outside}});
          } else if constexpr (std::is_same_v<T, RemoveMassAtSupportPoint>) {
            ops.push_back(json{{"kind", "RemoveMassAtSupportPoint"}});
          } else if constexpr (std::is_same_v<T, ChangeWeights>) {
            ops.push_back(json{{"kind", m.finitely_many
                                            ? "ChangeFinitelyManyWeights"
                                            : "ChangeInfinitelyManyWeights"}});
          } else if constexpr (std::is_same_v<T, FiniteRankPerturbation>) {
            ops.push_back(json{{"kind", "FiniteRankPerturbation"}});
          } else if constexpr (std::is_same_v<T, ToSigmaN>) {
            ops.push_back(json{{"kind", "ToSigmaN"}});
          } else if constexpr (std::is_same_v<T, RhoNFromJ>) {
            ops.push_back(json{{"kind", "RhoNFromJ"},
                               {"common", m.common_count},
                               {"n", m.n}});
          }
        },
        op);
  }
  return json{{"base", d.base.str()}, {"ops", std::move(ops)}};
}

MeasureDescriptor descriptor_from_json(const json& j) {
  MeasureDescriptor d;
  if (!j.contains("base") || !j.at("base").is_string()) {
    fail(ErrorKind::InvalidData, "missing string field 'base'");
  }
  d.base = DetClass::parse(j.at("base").get<std::string>());
  if (j.contains("ops")) {
    if (!j.at("ops").is_array()) {
      fail(ErrorKind::InvalidData, "'ops' must be an array");
    }
    for (const auto& op : j.at("ops")) {
      const std::string kind = op.value("kind", "");
      if (kind == "AddMasses") {
        d.ops.push_back(AddMasses{integer_field(op, "l")});
      } else if (kind == "MultiplyPolySq") {
        d.ops.push_back(
            MultiplyPolySq{integer_field(op, "l"), op.value("simple_zeros", true)});
      } else if (kind == "MoveMasses") {
        d.ops.push_back(MoveMasses{integer_field(op, "removed"),
                                   integer_field(op, "added_outside")});
      } else if (kind == "RemoveMassAtSupportPoint") {
        d.ops.push_back(RemoveMassAtSupportPoint{});
      } else if (kind == "ChangeFinitelyManyWeights") {
        d.ops.push_back(ChangeWeights{true});
      } else if (kind == "ChangeInfinitelyManyWeights") {
        d.ops.push_back(ChangeWeights{false});
      } else if (kind == "FiniteRankPerturbation") {
        d.ops.push_back(FiniteRankPerturbation{});
      } else if (kind == "ToSigmaN") {
        d.ops.push_back(ToSigmaN{});
      } else if (kind == "RhoNFromJ") {
        d.ops.push_back(
            RhoNFromJ{integer_field(op, "common"), integer_field(op, "n")});
      } else {
        fail(ErrorKind::InvalidData, "unknown modification kind '" + kind + "'");
      }
    }
  }
  return d;
}

json to_json(const InverseProblem& p) {
  return json{{"S", p.S},
              {"S_tilde", p.S_tilde},
              {"n", p.n},
              {"gamma", p.gamma}};
}

InverseProblem inverse_problem_from_json(const json& j) {
  InverseProblem p;
  p.S = doubles_field(j, "S");
  p.S_tilde = doubles_field(j, "S_tilde");
  const long n = integer_field(j, "n");
  if (n < 1) fail(ErrorKind::IndexOutOfRange, "n must be positive");
  p.n = static_cast<std::size_t>(n);
  p.gamma = number_field(j, "gamma");
  return p;
}

json to_json(const GreenDecomposition& d) {
  return json{{"q_n", d.q_n},
              {"b_minus_sq", d.b_minus_sq},
              {"b_plus_sq", d.b_plus_sq},
              {"mu", to_json(d.mu)},
              {"sigma", to_json(d.sigma)}};
}

json to_json(const SolutionReport& r) {
  return json{{"spec_err", r.spec_err},
              {"spec_tilde_err", r.spec_tilde_err},
              {"gamma_err", r.gamma_err},
              {"accepted", r.accepted}};
}

json to_json(const InverseSolution& s) {
  return json{{"J", to_json(s.matrix)},
              {"theta", s.theta},
              {"h", s.h},
              {"interior", s.interior},
              {"report", to_json(s.report)}};
}

Tolerances tolerances_from_json(const json& j, const Tolerances& base) {
  Tolerances t = base;
  if (j.contains("tol_eig")) t.tol_eig = number_field(j, "tol_eig");
  if (j.contains("tol_match")) t.tol_match = number_field(j, "tol_match");
  if (j.contains("tol_rank")) t.tol_rank = number_field(j, "tol_rank");
  if (j.contains("tol_weight")) t.tol_weight = number_field(j, "tol_weight");
  if (j.contains("tol_identity")) t.tol_identity = number_field(j, "tol_identity");
  if (j.contains("eig_max_iter")) {
    t.eig_max_iter = static_cast<int>(integer_field(j, "eig_max_iter"));
  }
  if (j.contains("bisection_max_iter")) {
    t.bisection_max_iter =
        static_cast<int>(integer_field(j, "bisection_max_iter"));
  }
  t.validate();
  return t;
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(ErrorKind::InvalidData, "empty complex literal");

  const auto to_double = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidData, "bad number '" + part + "'");
    }
    if (used != part.size()) {
      fail(ErrorKind::InvalidData, "trailing characters in '" + part + "'");
    }
    return v;
  };

  const char last = s.back();
  if (last != 'i' && last != 'j') {
    return {to_double(s), 0.0};
  }
  s.pop_back();

  // Split at the sign that separates real and imaginary parts, skipping
  // exponent signs and a leading sign.
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') &&
        s[pos - 1] != 'e' && s[pos - 1] != 'E') {
      return {to_double(s.substr(0, pos)), to_double(s.substr(pos))};
    }
  }
  return {0.0, to_double(s)};
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  if (text.empty()) return out;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidData, "bad number '" + part + "'");
    }
    while (used < part.size() &&
           std::isspace(static_cast<unsigned char>(part[used]))) {
      ++used;
    }
    if (used != part.size()) {
      fail(ErrorKind::InvalidData, "trailing characters in '" + part + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace jacspec
