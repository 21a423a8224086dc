#include "jacspec/determinacy.hpp"

#include <string>

#include "jacspec/errors.hpp"

namespace jacspec {

DetClass DetClass::determinate(long index) {
  if (index < 0) fail(ErrorKind::InvalidData, "index must be nonnegative");
  DetClass c;
  c.kind_ = Kind::Determinate;
  c.infinite_ = false;
  c.index_ = index;
  return c;
}

DetClass DetClass::determinate_infinite() {
  DetClass c;
  c.kind_ = Kind::Determinate;
  c.infinite_ = true;
  return c;
}

DetClass DetClass::indet_n_extremal() {
  DetClass c;
  c.kind_ = Kind::IndetNExtremal;
  c.infinite_ = false;
  return c;
}

DetClass DetClass::indet_not_n_extremal() {
  DetClass c;
  c.kind_ = Kind::IndetNotNExtremal;
  c.infinite_ = false;
  return c;
}

bool DetClass::infinite_index() const {
  return kind_ == Kind::Determinate && infinite_;
}

long DetClass::index() const {
  if (kind_ != Kind::Determinate || infinite_) {
    fail(ErrorKind::InvalidData, "index() requires a finite determinate class");
  }
  return index_;
}

std::string DetClass::str() const {
  switch (kind_) {
    case Kind::Determinate:
      return infinite_ ? "DET:INF" : "DET:" + std::to_string(index_);
    case Kind::IndetNExtremal:
      return "INDET_NEXTREMAL";
    case Kind::IndetNotNExtremal:
      return "INDET_NOT_NEXTREMAL";
  }
  return "?";
}

DetClass DetClass::parse(const std::string& s) {
  if (s == "DET:INF") return determinate_infinite();
  if (s == "INDET_NEXTREMAL") return indet_n_extremal();
  if (s == "INDET_NOT_NEXTREMAL") return indet_not_n_extremal();
  if (s.rfind("DET:", 0) == 0) {
    try {
      return determinate(std::stol(s.substr(4)));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidData, "bad determinate index in '" + s + "'");
    }
  }
  fail(ErrorKind::InvalidData, "unknown classification '" + s + "'");
}

DetClass apply_add_masses(DetClass c, long outside_count) {
  if (outside_count < 0) {
    fail(ErrorKind::InvalidData, "outside count must be nonnegative");
  }
  const long l = outside_count;
  if (l == 0) return c;
  switch (c.kind()) {
    case DetClass::Kind::Determinate:
      if (c.infinite_index()) return c;
      if (c.index() >= l) return DetClass::determinate(c.index() - l);
      if (c.index() == l - 1) return DetClass::indet_n_extremal();
      return DetClass::indet_not_n_extremal();
    case DetClass::Kind::IndetNExtremal:
    case DetClass::Kind::IndetNotNExtremal:
      return DetClass::indet_not_n_extremal();
  }
  return c;
}

DetClass apply_poly_multiply(DetClass c, long outside_zero_count) {
  // Mass addition and |r|^2 multiplication share one transition table.
  return apply_add_masses(c, outside_zero_count);
}

DetClass apply_move_masses(DetClass c, long removed, long added_outside) {
  if (removed < 0 || added_outside < 0) {
    fail(ErrorKind::InvalidData, "move counts must be nonnegative");
  }
  const bool covered =
      c.kind() == DetClass::Kind::IndetNExtremal ||
      (c.is_determinate() && !c.infinite_index());
  if (!covered) {
    fail(ErrorKind::PreconditionViolated,
         "mass moves are only ruled for indeterminate N-extremal or "
         "finite-index determinate measures, got " + c.str());
  }
  const long d = removed - added_outside;
  if (d == 0) return c;
  if (d > 0) {
    if (c.kind() == DetClass::Kind::IndetNExtremal) {
      return DetClass::determinate(d - 1);
    }
    return DetClass::determinate(c.index() + d);
  }
  return apply_add_masses(c, -d);
}

DetClass apply_change_weights(DetClass c, bool finitely_many) {
  if (!finitely_many) {
    fail(ErrorKind::UnsupportedModification,
         "changing infinitely many weights can alter the index; no rule");
  }
  return c;
}

DetClass apply_finite_rank(DetClass c) { return c; }

DetClass transfer_sigma_n(DetClass c) { return c; }

RhoNClassification transfer_rho_n(DetClass rho_class, long zeros_outside) {
  RhoNClassification out;
  out.direct = apply_poly_multiply(rho_class, zeros_outside);
  out.via_block_sum =
      apply_add_masses(transfer_sigma_n(rho_class), zeros_outside);
  out.via_added_masses = apply_add_masses(rho_class, zeros_outside);
  return out;
}

namespace {

struct ClassifyVisitor {
  DetClass current;
  std::vector<std::string>* trace;

  void note(const std::string& rule, const DetClass& before) {
    trace->push_back(rule + ": " + before.str() + " -> " + current.str());
  }

  void operator()(const AddMasses& op) {
    const DetClass before = current;
    current = apply_add_masses(current, op.outside_count);
    note("add_masses(l=" + std::to_string(op.outside_count) + ")", before);
  }
  void operator()(const MultiplyPolySq& op) {
    if (!op.simple_zeros) {
      fail(ErrorKind::UnsupportedModification,
           "polynomial multiplication is only ruled for simple zeros");
    }
    const DetClass before = current;
    current = apply_poly_multiply(current, op.outside_zero_count);
    note("multiply_poly_sq(l=" + std::to_string(op.outside_zero_count) + ")",
         before);
  }
  void operator()(const MoveMasses& op) {
    const DetClass before = current;
    current = apply_move_masses(current, op.removed, op.added_outside);
    note("move_masses(removed=" + std::to_string(op.removed) +
             ", added_outside=" + std::to_string(op.added_outside) + ")",
         before);
  }
  void operator()(const RemoveMassAtSupportPoint&) {
    const DetClass before = current;
    current = apply_move_masses(current, 1, 0);
    note("remove_mass_at_support_point", before);
  }
  void operator()(const ChangeWeights& op) {
    const DetClass before = current;
    current = apply_change_weights(current, op.finitely_many);
    note("change_finitely_many_weights", before);
  }
  void operator()(const FiniteRankPerturbation&) {
    const DetClass before = current;
    current = apply_finite_rank(current);
    note("finite_rank_perturbation", before);
  }
  void operator()(const ToSigmaN&) {
    const DetClass before = current;
    current = transfer_sigma_n(current);
    note("to_sigma_n", before);
  }
  void operator()(const RhoNFromJ& op) {
    if (op.n < 2) {
      fail(ErrorKind::IndexOutOfRange, "rho_n transfer needs n >= 2");
    }
    if (op.common_count < 0 || op.common_count > op.n - 1) {
      fail(ErrorKind::InvalidData,
           "common spectrum count must lie in [0, n-1]");
    }
    const long zeros_outside = (op.n - 1) - op.common_count;
    const DetClass before = current;
    const RhoNClassification r = transfer_rho_n(current, zeros_outside);
    if (!r.consistent()) {
      fail(ErrorKind::InvalidData, "rho_n derivations disagree");
    }
    current = r.result();
    note("rho_n_from_j(zeros_outside=" + std::to_string(zeros_outside) + ")",
         before);
  }
};

}  // namespace

Classification classify(const MeasureDescriptor& d) {
  Classification out;
  ClassifyVisitor v{d.base, &out.trace};
  for (const Modification& op : d.ops) {
    std::visit(v, op);
  }
  out.result = v.current;
  return out;
}

}  // namespace jacspec
