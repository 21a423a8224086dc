#ifndef JACSPEC_DETERMINACY_HPP
#define JACSPEC_DETERMINACY_HPP

#include <string>
#include <variant>
#include <vector>

namespace jacspec {

/// Symbolic classification of a moment-problem measure: determinate with a
/// finite or infinite index of determinacy, indeterminate N-extremal, or
/// indeterminate and not N-extremal.
class DetClass {
 public:
  enum class Kind { Determinate, IndetNExtremal, IndetNotNExtremal };

  static DetClass determinate(long index);
  static DetClass determinate_infinite();
  static DetClass indet_n_extremal();
  static DetClass indet_not_n_extremal();

  Kind kind() const { return kind_; }
  bool is_determinate() const { return kind_ == Kind::Determinate; }
  bool infinite_index() const;
  long index() const;  // finite determinate only

  bool operator==(const DetClass& o) const = default;

  std::string str() const;                   // "DET:3", "DET:INF", ...
  static DetClass parse(const std::string&); // inverse of str()

 private:
  Kind kind_ = Kind::Determinate;
  bool infinite_ = true;
  long index_ = 0;
};

// Modification records a measure descriptor can carry. Counts refer to
// support points outside the support of the measure being modified.
struct AddMasses {
  long outside_count = 0;
};
struct MultiplyPolySq {
  long outside_zero_count = 0;
  bool simple_zeros = true;
};
struct MoveMasses {
  long removed = 0;
  long added_outside = 0;
};
struct RemoveMassAtSupportPoint {};
struct ChangeWeights {
  bool finitely_many = true;
};
struct FiniteRankPerturbation {};
struct ToSigmaN {};
struct RhoNFromJ {
  long common_count = 0;  // card(spectrum of leading block ∩ full spectrum)
  long n = 2;
};

using Modification =
    std::variant<AddMasses, MultiplyPolySq, MoveMasses,
                 RemoveMassAtSupportPoint, ChangeWeights,
                 FiniteRankPerturbation, ToSigmaN, RhoNFromJ>;

/// Base classification plus an ordered modification history.
struct MeasureDescriptor {
  DetClass base = DetClass::determinate_infinite();
  std::vector<Modification> ops;
};

/// Adding point masses at l sites outside the support: a finite index drops
/// by l, hits indeterminate N-extremal exactly at index l-1, and overshoots
/// into indeterminate not N-extremal below that. Infinite index absorbs.
DetClass apply_add_masses(DetClass c, long outside_count);

/// Multiplying by |r|^2 for a polynomial r with simple zeros, l of them
/// outside the support: same transition table as apply_add_masses.
DetClass apply_poly_multiply(DetClass c, long outside_zero_count);

/// Moving masses: removing d = removed - added_outside net points raises the
/// index by d (indeterminate N-extremal climbs to index d-1); a net addition
/// lowers it through the add-masses table. Only indeterminate-N-extremal and
/// finite-index determinate inputs are covered by the calculus.
DetClass apply_move_masses(DetClass c, long removed, long added_outside);

/// Changing finitely many weights preserves the classification. An infinite
/// weight change is rejected: the calculus has no rule for it.
DetClass apply_change_weights(DetClass c, bool finitely_many = true);

/// Finite-rank perturbation of the underlying operator: classification is
/// unchanged in all three variants.
DetClass apply_finite_rank(DetClass c);

/// The trailing-block measure sigma_n carries the same classification as the
/// spectral measure, for every n.
DetClass transfer_sigma_n(DetClass c);

/// Classification of the push-forward measure rho_n from the classification
/// of rho, where zeros_outside counts spectrum points of the leading block
/// missing from the full spectrum. Three algebraically equivalent routes are
/// reported for cross-checking.
struct RhoNClassification {
  DetClass direct;            // polynomial multiplication by pi_n^2
  DetClass via_block_sum;     // through sigma_n + mu_n
  DetClass via_added_masses;  // through rho + beta
  const DetClass& result() const { return direct; }
  bool consistent() const {
    return direct == via_block_sum && direct == via_added_masses;
  }
};
RhoNClassification transfer_rho_n(DetClass rho_class, long zeros_outside);

struct Classification {
  DetClass result = DetClass::determinate_infinite();
  std::vector<std::string> trace;
};

/// Left-to-right fold of the modification history over the base class; the
/// trace names the rule fired at each step.
Classification classify(const MeasureDescriptor& d);

}  // namespace jacspec

#endif  // JACSPEC_DETERMINACY_HPP
