#include "jacspec/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "jacspec/errors.hpp"
#include "jacspec/measure.hpp"

namespace jacspec {

namespace {

using cplx = std::complex<double>;

double scale_of(std::span<const double> s) {
  double m = 1.0;
  for (double x : s) m = std::max(m, std::abs(x));
  return m;
}

void check_spectrum(std::span<const double> s, const char* name) {
  if (s.empty()) fail(ErrorKind::InvalidData, std::string(name) + " is empty");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) {
      fail(ErrorKind::InvalidData,
           std::string(name) + " must be strictly increasing");
    }
  }
}

// Pairs off points of S and S_tilde that agree to eigenvalue accuracy and
// returns the remaining (reduced) sequences. The pairing tolerance must stay
// near solver accuracy: genuinely shared eigenvalues coincide to ~1e-14
// while a weak perturbation can leave distinct eigenvalues only ~1e-8 apart,
// and cancelling those would bias the ratio.
void reduce_common(std::span<const double> S, std::span<const double> S_tilde,
                   double guard, std::vector<double>& s_red,
                   std::vector<double>& t_red) {
  std::vector<bool> t_used(S_tilde.size(), false);
  for (double lam : S) {
    bool matched = false;
    for (std::size_t j = 0; j < S_tilde.size(); ++j) {
      if (!t_used[j] && std::abs(S_tilde[j] - lam) <= guard) {
        t_used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) s_red.push_back(lam);
  }
  for (std::size_t j = 0; j < S_tilde.size(); ++j) {
    if (!t_used[j]) t_red.push_back(S_tilde[j]);
  }
}

double hausdorff(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    return a.empty() && b.empty() ? 0.0
                                  : std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (double x : a) {
    double best = std::numeric_limits<double>::infinity();
    for (double y : b) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  for (double y : b) {
    double best = std::numeric_limits<double>::infinity();
    for (double x : a) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    bool exhausted = true;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        exhausted = false;
        break;
      }
    }
    if (exhausted) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

JacobiMatrix build_perturbed(const JacobiMatrix& J,
                             const PerturbationParams& p) {
  const std::size_t N = J.size();
  if (p.n < 1 || p.n > N) {
    fail(ErrorKind::IndexOutOfRange, "perturbation site must satisfy 1 <= n <= N");
  }
  if (!(p.theta > 0.0)) {
    fail(ErrorKind::NonPositiveTheta, "theta must be positive");
  }
  JacobiMatrix out = J;
  const std::size_t i = p.n - 1;
  out.q[i] = p.theta * p.theta * (J.q[i] + p.h);
  if (p.n >= 2) out.b[i - 1] = p.theta * J.b[i - 1];
  if (p.n < N) out.b[i] = p.theta * J.b[i];
  return out;
}

double gamma_of(double theta, double h) {
  if (!(theta > 0.0)) fail(ErrorKind::NonPositiveTheta, "theta must be positive");
  if (std::abs(theta - 1.0) <= 1e-12) {
    fail(ErrorKind::ThetaOne, "gamma is undefined at theta = 1");
  }
  return theta * theta * h / (1.0 - theta * theta);
}

cplx m_frak(std::span<const double> S, std::span<const double> S_tilde,
            cplx z, const Tolerances& tol) {
  check_spectrum(S, "S");
  check_spectrum(S_tilde, "S_tilde");
  if (S.size() != S_tilde.size()) {
    fail(ErrorKind::LengthMismatch, "spectra must have equal cardinality");
  }
  const double scale = std::max(scale_of(S), scale_of(S_tilde));
  std::vector<double> s_red, t_red;
  reduce_common(S, S_tilde, tol.tol_eig * scale, s_red, t_red);

  const double pole_guard = tol.tol_match * scale;
  cplx num = 1.0, den = 1.0;
  for (double lt : t_red) num *= (lt - z);
  for (double ls : s_red) {
    const cplx d = ls - z;
    if (std::abs(d) <= pole_guard) {
      fail(ErrorKind::PoleEvaluation, "z within tolerance of S");
    }
    den *= d;
  }
  return num / den;
}

double recover_theta(std::span<const double> S,
                     std::span<const double> S_tilde, double gamma,
                     const Tolerances& tol) {
  const cplx mv = m_frak(S, S_tilde, gamma, tol);
  const double m = mv.real();
  if (!(m > 0.0)) {
    fail(ErrorKind::InvalidData,
         "characteristic ratio at gamma is not positive; no admissible theta");
  }
  if (std::abs(m - 1.0) <= 1e-12) {
    fail(ErrorKind::ThetaOne, "characteristic ratio at gamma equals 1");
  }
  return std::sqrt(m);
}

cplx green_from_spectra(std::span<const double> S,
                        std::span<const double> S_tilde, double gamma, cplx z,
                        const Tolerances& tol) {
  const double theta = recover_theta(S, S_tilde, gamma, tol);
  const double th2 = theta * theta;

  const double scale = std::max(scale_of(S), scale_of(S_tilde));
  if (std::abs(z - cplx(gamma)) <= tol.tol_match * scale) {
    // Removable point: G(gamma) = -M'(gamma) / (1 - theta^2), with the
    // logarithmic derivative taken on the reduced spectra.
    std::vector<double> s_red, t_red;
    reduce_common(S, S_tilde, tol.tol_eig * scale, s_red, t_red);
    const cplx mg = m_frak(S, S_tilde, gamma, tol);
    cplx logder = 0.0;
    for (double ls : s_red) logder += 1.0 / (ls - gamma);
    for (double lt : t_red) logder -= 1.0 / (lt - gamma);
    const cplx mprime = mg * logder;
    return -mprime / (1.0 - th2);
  }
  const cplx mv = m_frak(S, S_tilde, z, tol);
  return (mv - th2) / ((1.0 - th2) * (cplx(gamma) - z));
}

SolutionReport verify_solution(const JacobiMatrix& J, double theta, double h,
                               std::size_t n, const InverseProblem& prob,
                               const Tolerances& tol) {
  SolutionReport rep;
  rep.spec_err = hausdorff(eigenvalues(J, tol), prob.S);

  if (n >= 1 && n <= J.size()) {
    const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{n, theta, h});
    rep.spec_tilde_err = hausdorff(eigenvalues(Jt, tol), prob.S_tilde);
  } else {
    rep.spec_tilde_err = std::numeric_limits<double>::infinity();
  }
  rep.gamma_err = std::abs(gamma_of(theta, h) - prob.gamma);
  rep.accepted = rep.spec_err <= kSolutionAccept &&
                 rep.spec_tilde_err <= kSolutionAccept &&
                 rep.gamma_err <= kSolutionAccept;
  return rep;
}

std::vector<InverseSolution> solve_inverse(const InverseProblem& prob,
                                           const SolveOptions& opts,
                                           const Tolerances& tol) {
  check_spectrum(prob.S, "S");
  check_spectrum(prob.S_tilde, "S_tilde");
  if (prob.S.size() != prob.S_tilde.size()) {
    fail(ErrorKind::LengthMismatch, "spectra must have equal cardinality");
  }
  if (prob.n < 2) {
    fail(ErrorKind::IndexOutOfRange, "perturbation site must satisfy n >= 2");
  }
  // gamma must stay clear of the poles of the Green data. Points of S that
  // also belong to S_tilde are removable, so the guard uses the reduced
  // spectrum; a gamma at a genuine pole is the variant this solver rejects.
  const double scale = std::max(scale_of(prob.S), scale_of(prob.S_tilde));
  const double guard = tol.tol_match * scale;
  std::vector<double> s_red, t_red;
  reduce_common(prob.S, prob.S_tilde, tol.tol_eig * scale, s_red, t_red);
  for (double lam : s_red) {
    if (std::abs(prob.gamma - lam) <= guard) {
      fail(ErrorKind::UnsupportedCase,
           "gamma lies in S; that variant of the inverse problem is not "
           "handled");
    }
  }

  const double theta = recover_theta(prob.S, prob.S_tilde, prob.gamma, tol);
  const double th2 = theta * theta;
  const double h = prob.gamma * (1.0 - th2) / th2;

  // Residues of the common Green function at the points of S, analytically:
  // w_i = prod_j(S_tilde_j - S_i) / (prod_{j != i}(S_j - S_i) *
  //       (1 - theta^2)(gamma - S_i)).
  const std::size_t N = prob.S.size();
  std::vector<double> pts, wts;
  for (std::size_t i = 0; i < N; ++i) {
    const double lam = prob.S[i];
    if (std::abs(prob.gamma - lam) <= guard) {
      continue;  // gamma sits on a removable point; its residue vanishes
    }
    double num = 1.0;
    for (double lt : prob.S_tilde) num *= (lt - lam);
    double den = (1.0 - th2) * (prob.gamma - lam);
    for (std::size_t j = 0; j < N; ++j) {
      if (j != i) den *= (prob.S[j] - lam);
    }
    const double w = num / den;
    if (w < -1e-9) {
      fail(ErrorKind::NoSolution,
           "negative residue at " + std::to_string(lam) +
               "; the problem data is inconsistent");
    }
    if (w >= tol.tol_weight) {
      pts.push_back(lam);
      wts.push_back(w);
    }
  }
  if (pts.empty()) {
    fail(ErrorKind::NoSolution, "the extracted Green measure is empty");
  }
  // Renormalize away the dropped (removable) mass.
  const double mass = std::accumulate(wts.begin(), wts.end(), 0.0);
  if (std::abs(mass - 1.0) > 1e-6) {
    fail(ErrorKind::NoSolution,
         "the extracted Green measure has mass " + std::to_string(mass) +
             "; the problem data is inconsistent");
  }
  for (double& w : wts) w /= mass;
  const DiscreteMeasure g_measure = make_measure(std::move(pts), std::move(wts));

  const std::size_t removed = N - g_measure.size();
  if (removed != opts.splits.size()) {
    fail(ErrorKind::DegenerateSplit,
         std::to_string(removed) +
             " shared pole(s) need residue fractions, got " +
             std::to_string(opts.splits.size()));
  }

  const std::size_t npoles = g_measure.size() - 1;
  if (prob.n - 1 < opts.splits.size() ||
      prob.n - 1 - opts.splits.size() > npoles) {
    fail(ErrorKind::BadSelection,
         "site is too deep for the available pole count");
  }
  const std::size_t pick = prob.n - 1 - opts.splits.size();

  std::vector<std::vector<std::size_t>> combos = combinations(npoles, pick);

  // Exclude whole selections of poles that are also split.
  if (!opts.splits.empty()) {
    std::vector<std::vector<std::size_t>> kept;
    for (auto& c : combos) {
      bool clash = false;
      for (const ResidueSplit& s : opts.splits) {
        if (std::find(c.begin(), c.end(), s.pole_index) != c.end()) {
          clash = true;
        }
      }
      if (!clash) kept.push_back(std::move(c));
    }
    combos = std::move(kept);
  }

  if (combos.size() > opts.max_selections) {
    std::mt19937_64 gen(opts.selection_seed);
    for (std::size_t i = combos.size(); i-- > 1;) {
      std::swap(combos[i], combos[gen() % (i + 1)]);
    }
    combos.resize(opts.max_selections);
    std::sort(combos.begin(), combos.end());
  }

  std::vector<InverseSolution> solutions;
  for (const auto& sel : combos) {
    JacobiMatrix candidate;
    try {
      candidate = green_to_jacobi(g_measure, prob.n, sel, opts.splits, tol);
    } catch (const Error&) {
      continue;  // e.g. Lanczos breakdown for a pathological selection
    }
    SolutionReport rep = verify_solution(candidate, theta, h, prob.n, prob, tol);
    if (rep.accepted) {
      solutions.push_back(InverseSolution{std::move(candidate), theta, h, sel,
                                          rep});
    }
  }
  if (solutions.empty()) {
    fail(ErrorKind::NoSolution, "no interior selection verified");
  }
  return solutions;
}

}  // namespace jacspec
