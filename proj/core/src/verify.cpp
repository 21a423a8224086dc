#include "jacspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "jacspec/determinacy.hpp"
#include "jacspec/errors.hpp"
#include "jacspec/green.hpp"
#include "jacspec/json_io.hpp"
#include "jacspec/linalg.hpp"
#include "jacspec/measure.hpp"
#include "jacspec/perturb.hpp"

namespace jacspec {

namespace {

using cplx = std::complex<double>;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct Ctx {
  const std::vector<JacobiMatrix>& corpus;
  const Tolerances& tol;
  std::vector<CheckResult>* results;

  void report(const std::string& name, double residual, double threshold,
              const std::string& detail = "") {
    results->push_back(
        CheckResult{name, residual, threshold, residual <= threshold, detail});
  }
};

void check_zeros_vs_spectrum(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    for (std::size_t n = 2; n <= J.size(); ++n) {
      const std::vector<double> zs = poly_zeros(J, n, ctx.tol);
      const std::vector<double> oracle =
          sturm_eigenvalues(truncate_minus(J, n), 1e-13);
      for (std::size_t i = 0; i < zs.size(); ++i) {
        worst = std::max(worst, std::abs(zs[i] - oracle[i]));
      }
    }
  }
  ctx.report("zeros_vs_spectrum", worst, 1e-9,
             "poly_zeros against Sturm-bisection eigenvalues of the leading block");
}

void check_basis_identity(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const std::vector<Polynomial> pis = first_kind_coeffs(J, J.size());
    for (std::size_t k = 0; k < J.size(); ++k) {
      std::vector<double> u = apply_poly_e1(J, pis[k]);
      u[k] -= 1.0;
      worst = std::max(worst, norm2(u));
    }
  }
  ctx.report("basis_identity", worst, 1e-8,
             "pi_k(J)e_1 reproduces the k-th basis vector");
}

void check_intersection_identity(Ctx& ctx) {
  // Membership is decided with a two-band test. Genuinely shared points
  // coincide to eigensolver accuracy, while interlacing can push an
  // unrelated block eigenvalue within ~1e-9 of the spectrum; a single
  // threshold between those scales misclassifies such near-coincidences.
  // Points whose distance falls between the bands stay unclassified.
  double mismatches = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const double scale = std::max(1.0, gershgorin_radius(J));
    const double in_band = ctx.tol.tol_eig * scale;
    const double out_band = std::sqrt(ctx.tol.tol_match) * scale;
    const std::vector<double> spec = eigenvalues(J, ctx.tol);
    for (std::size_t n = 2; n < J.size(); ++n) {
      const std::vector<double> minus = eigenvalues(truncate_minus(J, n), ctx.tol);
      const std::vector<double> plus = eigenvalues(truncate_plus(J, n), ctx.tol);
      for (double x : minus) {
        double d_plus = std::numeric_limits<double>::infinity();
        double d_spec = std::numeric_limits<double>::infinity();
        for (double y : plus) d_plus = std::min(d_plus, std::abs(x - y));
        for (double y : spec) d_spec = std::min(d_spec, std::abs(x - y));
        const bool ambiguous = (d_plus > in_band && d_plus < out_band) ||
                               (d_spec > in_band && d_spec < out_band);
        if (ambiguous) continue;
        if ((d_plus <= in_band) != (d_spec <= in_band)) mismatches += 1.0;
      }
    }
  }
  ctx.report("intersection_identity", mismatches, 0.0,
             "spec(J_n^-) ∩ spec(J_n^+) equals spec(J_n^-) ∩ spec(J)");
}

void check_interlacing_bounds(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const std::vector<double> spec = eigenvalues(J, ctx.tol);
    for (std::size_t n = 2; n <= J.size(); ++n) {
      const std::vector<double> minus = eigenvalues(truncate_minus(J, n), ctx.tol);
      worst = std::max(worst, spec.front() - minus.front());
      worst = std::max(worst, minus.back() - spec.back());
    }
  }
  ctx.report("interlacing_bounds", worst, 0.0,
             "leading-block eigenvalues stay strictly inside the spectrum hull");
}

void check_cyclicity(Ctx& ctx) {
  double disagreements = 0.0;
  std::size_t cases = 0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const std::vector<double> spec = eigenvalues(J, ctx.tol);
    const double outside = spec.back() + 1.0;

    std::vector<Polynomial> rs;
    rs.push_back(Polynomial{{1.0}});
    rs.push_back(poly_from_roots(std::vector<double>{outside}));
    rs.push_back(poly_from_roots(std::vector<double>{spec[0]}));
    rs.push_back(poly_from_roots(std::vector<double>{spec[spec.size() / 2], outside}));

    for (const Polynomial& r : rs) {
      ++cases;
      const CyclicResult res = cyclic_test(J, r, ctx.tol);
      // The zero sets are known by construction: rs[0] and rs[1] stay clear
      // of the spectrum, rs[2] and rs[3] hit an eigenvalue exactly.
      bool zero_on_spectrum = false;
      for (double lam : spec) {
        if (std::abs(r(lam)) < 1e-9) zero_on_spectrum = true;
      }
      if (res.cyclic != !zero_on_spectrum) disagreements += 1.0;
    }
  }
  ctx.report("cyclicity_criterion", disagreements, 0.0,
             std::to_string(cases) + " polynomial cases against the zero-on-spectrum predicate");
}

void check_favard_roundtrip(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    const JacobiMatrix back = favard(rho, std::nullopt, ctx.tol);
    for (std::size_t k = 0; k < J.size(); ++k) {
      worst = std::max(worst, std::abs(back.q[k] - J.q[k]));
      if (k + 1 < J.size()) worst = std::max(worst, std::abs(back.b[k] - J.b[k]));
    }
    const DiscreteMeasure rho2 = spectral_measure(back, ctx.tol);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      worst = std::max(worst, std::abs(rho2.points[i] - rho.points[i]));
      worst = std::max(worst, std::abs(rho2.weights[i] - rho.weights[i]));
    }
  }
  ctx.report("favard_roundtrip", worst, 1e-8,
             "favard ∘ spectral_measure and spectral_measure ∘ favard are identities");
}

void check_borel_vs_resolvent(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    for (cplx z : offspectrum_samples(J, 20)) {
      worst = std::max(
          worst, std::abs(borel_transform(rho, z, ctx.tol) - weyl_m(J, z, ctx.tol)));
    }
  }
  ctx.report("borel_vs_resolvent", worst, 1e-9,
             "Borel transform of the spectral measure against the direct solve");
}

void check_moments(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    worst = std::max(worst, std::abs(moments(rho, 0) - 1.0));
    const JacobiMatrix back = favard(rho, std::nullopt, ctx.tol);
    worst = std::max(worst, std::abs(moments(rho, 1) - back.q[0]));
  }
  ctx.report("moment_normalization", worst, 1e-10,
             "zeroth moment is 1, first moment matches q_1 of the rebuild");
}

void check_pushforward(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    for (std::size_t n = 1; n <= J.size(); ++n) {
      const DiscreteMeasure rho_n = push_forward_pi_sq(J, n, ctx.tol);
      worst = std::max(worst, std::abs(rho_n.total_mass() - 1.0));
    }
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    const DiscreteMeasure rho_1 = push_forward_pi_sq(J, 1, ctx.tol);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      worst = std::max(worst, std::abs(rho.points[i] - rho_1.points[i]));
      worst = std::max(worst, std::abs(rho.weights[i] - rho_1.weights[i]));
    }
  }
  ctx.report("pushforward_mass", worst, 1e-9,
             "pi_n^2 push-forward keeps unit mass; n = 1 reproduces the spectral measure");
}

void check_gkk(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const auto samples = offspectrum_samples(J, 20);
    for (std::size_t n = 1; n <= J.size(); ++n) {
      worst = std::max(worst, verify_gkk(J, n, samples, ctx.tol));
    }
  }
  ctx.report("green_decomposition", worst, 1e-8,
             "reassembly residual of -1/G(z,n) across the corpus");
}

void check_asymptotics(Ctx& ctx) {
  double worst_ratio = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    for (std::size_t n = 1; n <= J.size(); ++n) {
      const cplx z1(0.0, 1e3), z2(0.0, 1e4);
      const double c_fit = std::abs(z1 * green(J, n, z1, ctx.tol) + 1.0) * 1e3;
      const double actual = std::abs(z2 * green(J, n, z2, ctx.tol) + 1.0);
      if (actual < 1e-15) continue;
      worst_ratio = std::max(worst_ratio, actual / (2.0 * c_fit / 1e4));
    }
  }
  ctx.report("green_asymptotics", worst_ratio, 1.0,
             "|zG+1| <= C/|z| with C fitted at |z|=1e3, validated at 1e4 within factor 2");
}

void check_herglotz(Ctx& ctx) {
  double worst = 0.0;
  Rng rng(0xC0FFEE);
  for (const JacobiMatrix& J : ctx.corpus) {
    const double radius = gershgorin_radius(J) + 1.0;
    for (int s = 0; s < 100; ++s) {
      const cplx z(rng.uniform(-radius, radius), rng.uniform(0.05, radius));
      const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(0, J.size() - 1));
      const cplx g = green(J, n, z, ctx.tol);
      worst = std::max(worst, -g.imag());
    }
  }
  ctx.report("herglotz_positivity", worst, 1e-12,
             "Im G(z,n) >= 0 on the upper half-plane");
}

void check_neg_inverse(Ctx& ctx) {
  double worst = 0.0;
  double order_violations = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    const HerglotzRational f = neg_inverse(rho, ctx.tol);
    // Interlacing: strictly one pole inside each gap of the resolvable
    // support (masses below tol_weight carry no representable pole).
    std::vector<double> support;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (rho.weights[i] >= ctx.tol.tol_weight) support.push_back(rho.points[i]);
    }
    if (f.poles.size() + 1 != support.size()) {
      order_violations += 1.0;
    } else {
      for (std::size_t k = 0; k < f.poles.size(); ++k) {
        if (!(f.poles[k] > support[k] && f.poles[k] < support[k + 1])) {
          order_violations += 1.0;
        }
      }
    }
    for (cplx z : offspectrum_samples(J, 10)) {
      const cplx b = borel_transform(rho, z, ctx.tol);
      worst = std::max(worst, std::abs(-1.0 / b - f(z)));
    }
  }
  ctx.report("neg_inverse_contract", worst + order_violations, 1e-8,
             "-1/Borel matches the rational form; poles interlace the support");
}

void check_rebuild(Ctx& ctx) {
  double worst = 0.0;
  std::size_t rebuilds = 0;
  for (std::size_t idx = 0; idx < ctx.corpus.size(); idx += 7) {
    const JacobiMatrix& J = ctx.corpus[idx];
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    const auto samples = offspectrum_samples(J, 20);
    const std::size_t npoles = rho.size() - 1;
    for (std::size_t l = 1; l <= std::min<std::size_t>(rho.size(), 4); ++l) {
      // First few lexicographic selections per l keeps the sweep bounded.
      std::vector<std::size_t> sel(l - 1);
      for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = i;
      if (sel.size() > npoles) break;
      const JacobiMatrix rebuilt = green_to_jacobi(rho, l, sel, {}, ctx.tol);
      ++rebuilds;
      for (cplx z : samples) {
        worst = std::max(worst, std::abs(green(rebuilt, l, z, ctx.tol) -
                                         borel_transform(rho, z, ctx.tol)));
      }
    }
  }
  ctx.report("green_rebuild_contract", worst, 1e-7,
             std::to_string(rebuilds) + " rebuilds reproduce the prescribed Green function");
}

void check_rebuild_nonuniqueness(Ctx& ctx) {
  // A generic 5-point measure rebuilt at l = 3 from different interior
  // selections: visibly different matrices, same Green function.
  const JacobiMatrix* J5 = nullptr;
  for (const JacobiMatrix& J : ctx.corpus) {
    if (J.size() == 5) {
      J5 = &J;
      break;
    }
  }
  if (J5 == nullptr) {
    ctx.report("rebuild_nonuniqueness", 1.0, 0.0, "no 5-point corpus item");
    return;
  }
  const DiscreteMeasure rho = spectral_measure(*J5, ctx.tol);
  const auto samples = offspectrum_samples(*J5, 20);
  const std::vector<std::size_t> sel_a{0, 1}, sel_b{2, 3};
  const JacobiMatrix a = green_to_jacobi(rho, 3, sel_a, {}, ctx.tol);
  const JacobiMatrix b = green_to_jacobi(rho, 3, sel_b, {}, ctx.tol);

  double entry_diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    entry_diff = std::max(entry_diff, std::abs(a.q[k] - b.q[k]));
    if (k + 1 < a.size()) {
      entry_diff = std::max(entry_diff, std::abs(a.b[k] - b.b[k]));
    }
  }
  double green_gap = 0.0;
  for (cplx z : samples) {
    green_gap = std::max(green_gap, std::abs(green(a, 3, z, ctx.tol) -
                                             green(b, 3, z, ctx.tol)));
  }
  const bool ok = entry_diff > 1e-3 && green_gap <= 1e-7;
  ctx.report("rebuild_nonuniqueness", ok ? 0.0 : 1.0, 0.0,
             "entry gap " + std::to_string(entry_diff) + ", Green gap " +
                 std::to_string(green_gap));
}

void check_sigma_mu(Ctx& ctx) {
  double worst = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const auto samples = offspectrum_samples(J, 10);
    for (std::size_t n = 1; n <= J.size(); ++n) {
      const SigmaMu sm = sigma_mu(J, n, ctx.tol);
      for (cplx z : samples) {
        if (!sm.sigma.empty()) {
          worst = std::max(worst, std::abs(borel_transform(sm.sigma, z, ctx.tol) -
                                           m_plus(J, n, z, ctx.tol)));
        }
        if (!sm.mu.empty()) {
          worst = std::max(worst, std::abs(borel_transform(sm.mu, z, ctx.tol) -
                                           m_minus(J, n, z, ctx.tol)));
        }
      }
    }
  }
  ctx.report("block_measures", worst, 1e-9,
             "Borel transforms of sigma_n / mu_n match the block Weyl functions");
}

void check_perturbation(Ctx& ctx) {
  double worst_theta = 0.0;
  double worst_green = 0.0;
  double rank_violations = 0.0;
  Rng rng(0xFEED);
  std::size_t instances = 0;
  for (std::size_t idx = 0; idx < ctx.corpus.size() && instances < 25; ++idx) {
    const JacobiMatrix& J = ctx.corpus[idx];
    const std::size_t n = 2 + static_cast<std::size_t>(rng.integer(0, J.size() - 2));
    const double theta = rng.uniform(1.2, 3.0);
    const double h = rng.uniform(-2.0, 2.0);
    const double gamma = gamma_of(theta, h);

    const std::vector<double> S = eigenvalues(J, ctx.tol);
    const JacobiMatrix Jt = build_perturbed(J, PerturbationParams{n, theta, h});
    const std::vector<double> St = eigenvalues(Jt, ctx.tol);
    // Keep gamma away from both spectra: near S the data is ill-posed, near
    // S_tilde the recovered theta loses digits to cancellation.
    bool gamma_clear = true;
    for (double lam : S) gamma_clear &= std::abs(gamma - lam) > 1e-2;
    for (double lam : St) gamma_clear &= std::abs(gamma - lam) > 1e-2;
    if (!gamma_clear) continue;
    ++instances;

    const double theta_hat = recover_theta(S, St, gamma, ctx.tol);
    worst_theta = std::max(worst_theta, std::abs(theta_hat - theta));

    for (cplx z : offspectrum_samples(J, 20)) {
      worst_green = std::max(
          worst_green, std::abs(green_from_spectra(S, St, gamma, z, ctx.tol) -
                                green(J, n, z, ctx.tol)));
    }

    // Difference rank: at most 3, exactly 1 for theta = 1 with h != 0.
    const std::size_t N = J.size();
    std::vector<double> diff(N * N, 0.0);
    for (std::size_t k = 0; k < N; ++k) diff[k * N + k] = Jt.q[k] - J.q[k];
    for (std::size_t k = 0; k + 1 < N; ++k) {
      diff[k * N + k + 1] = diff[(k + 1) * N + k] = Jt.b[k] - J.b[k];
    }
    if (numerical_rank(N, N, std::move(diff), ctx.tol.tol_rank) > 3) {
      rank_violations += 1.0;
    }
    const JacobiMatrix J1 = build_perturbed(J, PerturbationParams{n, 1.0, 0.7});
    std::vector<double> diff1(N * N, 0.0);
    for (std::size_t k = 0; k < N; ++k) diff1[k * N + k] = J1.q[k] - J.q[k];
    for (std::size_t k = 0; k + 1 < N; ++k) {
      diff1[k * N + k + 1] = diff1[(k + 1) * N + k] = J1.b[k] - J.b[k];
    }
    if (numerical_rank(N, N, std::move(diff1), ctx.tol.tol_rank) != 1) {
      rank_violations += 1.0;
    }
  }
  ctx.report("perturbation_forward_backward",
             std::max(worst_theta, worst_green) + rank_violations, 1e-8,
             std::to_string(instances) + " forward instances: theta recovery and Green match");
}

void check_determinacy(Ctx& ctx) {
  double violations = 0.0;

  // Transition tables against a direct restatement of the case split.
  for (long k = 0; k <= 20; ++k) {
    for (long l = 0; l <= 10; ++l) {
      const DetClass got = apply_add_masses(DetClass::determinate(k), l);
      DetClass expect = DetClass::indet_not_n_extremal();
      if (l == 0 || k >= l) {
        expect = DetClass::determinate(k - l);
      } else if (k == l - 1) {
        expect = DetClass::indet_n_extremal();
      }
      if (!(got == expect)) violations += 1.0;
      if (!(apply_poly_multiply(DetClass::determinate(k), l) == expect)) {
        violations += 1.0;
      }
      const RhoNClassification r = transfer_rho_n(DetClass::determinate(k), l);
      if (!r.consistent()) violations += 1.0;
    }
  }
  // Commutativity of mass additions.
  for (long k = 0; k <= 20; ++k) {
    for (long a = 0; a <= 10; ++a) {
      for (long b = 0; b <= 10; ++b) {
        const DetClass two =
            apply_add_masses(apply_add_masses(DetClass::determinate(k), a), b);
        const DetClass one = apply_add_masses(DetClass::determinate(k), a + b);
        if (!(two == one)) violations += 1.0;
      }
    }
  }
  // Move-mass equivalence: distinct classes per net removal count; net
  // additions collapse into the single not-N-extremal class.
  for (long r1 = 0; r1 <= 10; ++r1) {
    for (long a1 = 0; a1 <= 10; ++a1) {
      for (long r2 = 0; r2 <= 10; ++r2) {
        for (long a2 = 0; a2 <= 10; ++a2) {
          const long d1 = r1 - a1, d2 = r2 - a2;
          const DetClass c1 =
              apply_move_masses(DetClass::indet_n_extremal(), r1, a1);
          const DetClass c2 =
              apply_move_masses(DetClass::indet_n_extremal(), r2, a2);
          if ((c1 == c2) != (d1 == d2 || (d1 < 0 && d2 < 0))) {
            violations += 1.0;
          }
        }
      }
    }
  }
  // Round trip and absorbing/no-op rules.
  for (long d = 0; d <= 10; ++d) {
    const DetClass c = DetClass::determinate(3);
    if (!(apply_move_masses(apply_move_masses(c, d, 0), 0, d) == c)) {
      violations += 1.0;
    }
  }
  if (!(apply_add_masses(DetClass::determinate_infinite(), 7) ==
        DetClass::determinate_infinite())) {
    violations += 1.0;
  }
  for (long k = 0; k <= 20; ++k) {
    if (!(apply_add_masses(DetClass::determinate(k), 0) ==
          DetClass::determinate(k))) {
      violations += 1.0;  // no rule demotes a determinate class at l = 0
    }
  }
  ctx.report("determinacy_tables", violations, 0.0,
             "exhaustive transition tables, commutativity and move-mass equivalences");
}

void check_json_roundtrip(Ctx& ctx) {
  double violations = 0.0;
  for (const JacobiMatrix& J : ctx.corpus) {
    const JacobiMatrix back = jacobi_from_json(to_json(J));
    if (back.q != J.q || back.b != J.b) violations += 1.0;
    const DiscreteMeasure rho = spectral_measure(J, ctx.tol);
    const DiscreteMeasure mback = measure_from_json(to_json(rho));
    if (mback.points != rho.points || mback.weights != rho.weights) {
      violations += 1.0;
    }
  }
  ctx.report("json_roundtrip", violations, 0.0,
             "parse(print(x)) == x for matrices and measures");
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::vector<cplx> offspectrum_samples(const JacobiMatrix& J,
                                      std::size_t count) {
  const std::vector<double> spec = eigenvalues(J);
  const double lo = spec.front(), hi = spec.back();
  const double center = 0.5 * (lo + hi);
  const double radius = std::max(1.0, 0.5 * (hi - lo));

  std::vector<cplx> out;
  out.reserve(count);
  // Fixed spiral of points with imaginary parts bounded away from the axis.
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k);
    const double re = center + radius * std::cos(2.3 * t + 0.7) * (1.1 + 0.13 * t);
    const double im = (0.35 + 0.17 * std::fmod(t, 5.0)) * radius;
    out.emplace_back(re, (k % 2 == 0) ? im : -im);
  }
  return out;
}

VerifyReport run_verification(const CorpusSpec& spec, const Tolerances& tol) {
  tol.validate();
  const std::vector<JacobiMatrix> corpus = generate_corpus(spec);
  VerifyReport report;
  Ctx ctx{corpus, tol, &report.checks};

  const std::vector<std::pair<const char*, void (*)(Ctx&)>> checks{
      {"zeros_vs_spectrum", check_zeros_vs_spectrum},
      {"basis_identity", check_basis_identity},
      {"intersection_identity", check_intersection_identity},
      {"interlacing_bounds", check_interlacing_bounds},
      {"cyclicity_criterion", check_cyclicity},
      {"favard_roundtrip", check_favard_roundtrip},
      {"borel_vs_resolvent", check_borel_vs_resolvent},
      {"moment_normalization", check_moments},
      {"pushforward_mass", check_pushforward},
      {"green_decomposition", check_gkk},
      {"green_asymptotics", check_asymptotics},
      {"herglotz_positivity", check_herglotz},
      {"neg_inverse_contract", check_neg_inverse},
      {"green_rebuild_contract", check_rebuild},
      {"rebuild_nonuniqueness", check_rebuild_nonuniqueness},
      {"block_measures", check_sigma_mu},
      {"perturbation_forward_backward", check_perturbation},
      {"determinacy_tables", check_determinacy},
      {"json_roundtrip", check_json_roundtrip},
  };
  for (const auto& [name, fn] : checks) {
    try {
      fn(ctx);
    } catch (const std::exception& e) {
      report.checks.push_back(CheckResult{
          name, std::numeric_limits<double>::infinity(), 0.0, false,
          std::string("aborted: ") + e.what()});
    }
  }
  return report;
}

}  // namespace jacspec
