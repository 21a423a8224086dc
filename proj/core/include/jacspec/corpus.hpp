#ifndef JACSPEC_CORPUS_HPP
#define JACSPEC_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "jacspec/tridiag.hpp"

namespace jacspec {

/// Deterministic generator for randomized test matrices. The stream is
/// mt19937_64 (fully pinned by the standard) and the real/integer mappings
/// below avoid std::uniform_*_distribution, whose output is
/// implementation-defined; identical seeds give identical corpora on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] by modulo reduction (the bias is far below
  /// anything observable at these range sizes).
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return lo + gen_() % (hi - lo + 1);
  }

 private:
  std::mt19937_64 gen_;
};

struct CorpusSpec {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  double q_lo = -2.0, q_hi = 2.0;
  double b_lo = 0.5, b_hi = 2.0;

  void validate() const;
};

/// Reproducible matrices: sizes uniform in [n_min, n_max], diagonal entries
/// uniform in [q_lo, q_hi], off-diagonal in [b_lo, b_hi].
std::vector<JacobiMatrix> generate_corpus(const CorpusSpec& spec);

}  // namespace jacspec

#endif  // JACSPEC_CORPUS_HPP
