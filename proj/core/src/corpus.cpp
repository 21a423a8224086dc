#include "jacspec/corpus.hpp"

#include "jacspec/errors.hpp"

namespace jacspec {

void CorpusSpec::validate() const {
  if (n_min < 2) fail(ErrorKind::InvalidData, "n_min must be at least 2");
  if (n_max < n_min) fail(ErrorKind::InvalidData, "size range is empty");
  if (!(q_hi >= q_lo)) fail(ErrorKind::InvalidData, "q range is empty");
  if (!(b_hi >= b_lo) || !(b_lo > 0.0)) {
    fail(ErrorKind::InvalidData, "b range must be nonempty and positive");
  }
}

std::vector<JacobiMatrix> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<JacobiMatrix> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::size_t n =
        static_cast<std::size_t>(rng.integer(spec.n_min, spec.n_max));
    std::vector<double> q(n), b(n - 1);
    for (double& x : q) x = rng.uniform(spec.q_lo, spec.q_hi);
    for (double& x : b) x = rng.uniform(spec.b_lo, spec.b_hi);
    out.push_back(build_jacobi(std::move(q), std::move(b)));
  }
  return out;
}

}  // namespace jacspec
