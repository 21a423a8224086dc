#include "cli_app.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jacspec/corpus.hpp"
#include "jacspec/determinacy.hpp"
#include "jacspec/errors.hpp"
#include "jacspec/green.hpp"
#include "jacspec/json_io.hpp"
#include "jacspec/measure.hpp"
#include "jacspec/perturb.hpp"
#include "jacspec/tolerances.hpp"
#include "jacspec/tridiag.hpp"
#include "jacspec/verify.hpp"

namespace jacspec::cli {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidData, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidData, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

// Shared flags for commands that take a matrix either inline or from a file.
struct MatrixInput {
  std::string q_list, b_list, file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q_list, "diagonal entries, comma separated");
    cmd->add_option("--b", b_list, "off-diagonal entries, comma separated");
    cmd->add_option("--file", file, "JacobiMatrix JSON file");
  }
  JacobiMatrix get() const {
    if (!file.empty()) return jacobi_from_json(load_json_file(file));
    if (q_list.empty()) {
      fail(ErrorKind::InvalidData, "provide --file or --q/--b");
    }
    return build_jacobi(parse_double_list(q_list), parse_double_list(b_list));
  }
};

struct MeasureInput {
  std::string points, weights, file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--points", points, "support points, comma separated");
    cmd->add_option("--weights", weights, "weights, comma separated");
    cmd->add_option("--file", file, "DiscreteMeasure JSON file");
  }
  DiscreteMeasure get() const {
    if (!file.empty()) return measure_from_json(load_json_file(file));
    if (points.empty()) {
      fail(ErrorKind::InvalidData, "provide --file or --points/--weights");
    }
    return make_measure(parse_double_list(points), parse_double_list(weights));
  }
};

std::vector<ResidueSplit> parse_splits(const std::vector<std::string>& specs) {
  std::vector<ResidueSplit> out;
  for (const std::string& s : specs) {
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
      fail(ErrorKind::InvalidData, "split must look like INDEX:FRACTION");
    }
    ResidueSplit rs;
    try {
      rs.pole_index = std::stoul(s.substr(0, colon));
      rs.interior_fraction = std::stod(s.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidData, "bad split '" + s + "'");
    }
    out.push_back(rs);
  }
  return out;
}

std::vector<Modification> parse_ops_list(const std::string& text) {
  // Compact history syntax: "AddMasses:2,MoveMasses:2:0,ToSigmaN".
  std::vector<Modification> ops;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream is(item);
    std::string p;
    while (std::getline(is, p, ':')) parts.push_back(p);
    const std::string& kind = parts[0];
    const auto arg = [&](std::size_t i) -> long {
      if (parts.size() <= i) {
        fail(ErrorKind::InvalidData, "missing argument in '" + item + "'");
      }
      try {
        return std::stol(parts[i]);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidData, "bad argument in '" + item + "'");
      }
    };
    if (kind == "AddMasses") {
      ops.push_back(AddMasses{arg(1)});
    } else if (kind == "MultiplyPolySq") {
      ops.push_back(MultiplyPolySq{arg(1), true});
    } else if (kind == "MoveMasses") {
      ops.push_back(MoveMasses{arg(1), arg(2)});
    } else if (kind == "RemoveMassAtSupportPoint") {
      ops.push_back(RemoveMassAtSupportPoint{});
    } else if (kind == "ChangeFinitelyManyWeights") {
      ops.push_back(ChangeWeights{true});
    } else if (kind == "ChangeInfinitelyManyWeights") {
      ops.push_back(ChangeWeights{false});
    } else if (kind == "FiniteRankPerturbation") {
      ops.push_back(FiniteRankPerturbation{});
    } else if (kind == "ToSigmaN") {
      ops.push_back(ToSigmaN{});
    } else if (kind == "RhoNFromJ") {
      ops.push_back(RhoNFromJ{arg(1), arg(2)});
    } else {
      fail(ErrorKind::InvalidData, "unknown modification '" + kind + "'");
    }
  }
  return ops;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi spectral toolkit: spectra, measures, Green functions, "
               "determinacy bookkeeping and two-spectra inverse problems"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "tolerance overrides (JSON)");
  Tolerances tol = default_tolerances();

  int exit_code = 0;

  // --- eig ---------------------------------------------------------------
  auto* eig_cmd = app.add_subcommand("eig", "eigenvalues and eigenvectors");
  auto eig_in = std::make_shared<MatrixInput>();
  eig_in->attach(eig_cmd);
  eig_cmd->callback([&, eig_in] {
    emit(out, to_json(eigensystem(eig_in->get(), tol)));
  });

  // --- measure -----------------------------------------------------------
  auto* measure_cmd = app.add_subcommand("measure", "spectral measure of a matrix");
  auto measure_in = std::make_shared<MatrixInput>();
  measure_in->attach(measure_cmd);
  auto measure_csv = std::make_shared<std::string>();
  measure_cmd->add_option("--emit-csv", *measure_csv, "also dump point,weight rows");
  measure_cmd->callback([&, measure_in, measure_csv] {
    const DiscreteMeasure m = spectral_measure(measure_in->get(), tol);
    if (!measure_csv->empty()) {
      std::ofstream csv(*measure_csv);
      csv << "point,weight\n";
      for (std::size_t i = 0; i < m.size(); ++i) {
        csv << m.points[i] << "," << m.weights[i] << "\n";
      }
    }
    emit(out, to_json(m));
  });

  // --- favard ------------------------------------------------------------
  auto* favard_cmd = app.add_subcommand(
      "favard", "Jacobi matrix of the orthonormal polynomials of a measure");
  auto favard_in = std::make_shared<MeasureInput>();
  favard_in->attach(favard_cmd);
  auto favard_max = std::make_shared<long>(-1);
  favard_cmd->add_option("--max-size", *favard_max, "truncate to this size");
  favard_cmd->callback([&, favard_in, favard_max] {
    std::optional<std::size_t> cap;
    if (*favard_max > 0) cap = static_cast<std::size_t>(*favard_max);
    emit(out, to_json(favard(favard_in->get(), cap, tol)));
  });

  // --- green -------------------------------------------------------------
  auto* green_cmd = app.add_subcommand("green", "n-th Green function at z");
  auto green_in = std::make_shared<MatrixInput>();
  green_in->attach(green_cmd);
  auto green_n = std::make_shared<std::size_t>(1);
  auto green_z = std::make_shared<std::string>("0+1i");
  auto green_csv = std::make_shared<std::string>();
  auto green_csv_count = std::make_shared<std::size_t>(40);
  green_cmd->add_option("--n", *green_n, "site index (1-based)")->required();
  green_cmd->add_option("--z", *green_z, "evaluation point, e.g. 0.5+2i");
  green_cmd->add_option("--emit-csv", *green_csv,
                        "dump y,Re G(iy,n),Im G(iy,n) for log-spaced y");
  green_cmd->add_option("--csv-samples", *green_csv_count, "rows in the dump");
  green_cmd->callback([&, green_in, green_n, green_z, green_csv, green_csv_count] {
    const JacobiMatrix J = green_in->get();
    if (!green_csv->empty()) {
      std::ofstream csv(*green_csv);
      csv << "y,re,im\n";
      const std::size_t rows = std::max<std::size_t>(2, *green_csv_count);
      for (std::size_t k = 0; k < rows; ++k) {
        const double y = std::pow(10.0, 4.0 * static_cast<double>(k) /
                                            static_cast<double>(rows - 1));
        const std::complex<double> g = green(J, *green_n, {0.0, y}, tol);
        csv << y << "," << g.real() << "," << g.imag() << "\n";
      }
    }
    emit(out, to_json(green(J, *green_n, parse_complex(*green_z), tol)));
  });

  // --- decompose ---------------------------------------------------------
  auto* dec_cmd = app.add_subcommand(
      "decompose", "split of -1/G(z,n) into blocks, couplings and site value");
  auto dec_in = std::make_shared<MatrixInput>();
  dec_in->attach(dec_cmd);
  auto dec_n = std::make_shared<std::size_t>(1);
  dec_cmd->add_option("--n", *dec_n, "site index (1-based)")->required();
  dec_cmd->callback([&, dec_in, dec_n] {
    const JacobiMatrix J = dec_in->get();
    json j = to_json(decompose(J, *dec_n, tol));
    j["residual"] = verify_gkk(J, *dec_n, offspectrum_samples(J, 20), tol);
    emit(out, j);
  });

  // --- rebuild -----------------------------------------------------------
  auto* reb_cmd = app.add_subcommand(
      "rebuild", "matrix whose l-th Green function matches a measure");
  auto reb_in = std::make_shared<MeasureInput>();
  reb_in->attach(reb_cmd);
  auto reb_l = std::make_shared<std::size_t>(1);
  auto reb_interior = std::make_shared<std::string>();
  auto reb_splits = std::make_shared<std::vector<std::string>>();
  reb_cmd->add_option("--l", *reb_l, "target site (1-based)")->required();
  reb_cmd->add_option("--interior", *reb_interior,
                      "pole indices for the leading block, comma separated");
  reb_cmd->add_option("--split", *reb_splits,
                      "shared-pole fraction INDEX:FRACTION (repeatable)");
  reb_cmd->callback([&, reb_in, reb_l, reb_interior, reb_splits] {
    std::vector<std::size_t> interior;
    for (double v : parse_double_list(*reb_interior)) {
      interior.push_back(static_cast<std::size_t>(v));
    }
    emit(out, to_json(green_to_jacobi(reb_in->get(), *reb_l, interior,
                                      parse_splits(*reb_splits), tol)));
  });

  // --- perturb -----------------------------------------------------------
  auto* pert_cmd = app.add_subcommand(
      "perturb", "interior mass-spring modification of a matrix");
  pert_cmd->set_help_flag("--help", "print help");  // frees -h for the shift
  auto pert_in = std::make_shared<MatrixInput>();
  pert_in->attach(pert_cmd);
  auto pert_n = std::make_shared<std::size_t>(2);
  auto pert_theta = std::make_shared<double>(1.0);
  auto pert_h = std::make_shared<double>(0.0);
  pert_cmd->add_option("--n", *pert_n, "site index (1-based)")->required();
  pert_cmd->add_option("--theta", *pert_theta, "spring scale, > 0")->required();
  pert_cmd->add_option("--h", *pert_h, "diagonal shift");
  pert_cmd->callback([&, pert_in, pert_n, pert_theta, pert_h] {
    emit(out, to_json(build_perturbed(
                  pert_in->get(),
                  PerturbationParams{*pert_n, *pert_theta, *pert_h})));
  });

  // --- invert ------------------------------------------------------------
  auto* inv_cmd = app.add_subcommand(
      "invert", "solve the two-spectra inverse problem (S, S~, n, gamma)");
  auto inv_file = std::make_shared<std::string>();
  auto inv_s = std::make_shared<std::string>();
  auto inv_st = std::make_shared<std::string>();
  auto inv_n = std::make_shared<std::size_t>(2);
  auto inv_gamma = std::make_shared<double>(0.0);
  auto inv_splits = std::make_shared<std::vector<std::string>>();
  auto inv_cap = std::make_shared<std::size_t>(64);
  inv_cmd->add_option("--file", *inv_file, "InverseProblem JSON file");
  inv_cmd->add_option("--S", *inv_s, "spectrum of J, comma separated");
  inv_cmd->add_option("--S-tilde", *inv_st, "spectrum of the perturbed matrix");
  inv_cmd->add_option("--n", *inv_n, "perturbation site");
  inv_cmd->add_option("--gamma", *inv_gamma, "coupling parameter");
  inv_cmd->add_option("--split", *inv_splits,
                      "shared-pole fraction INDEX:FRACTION (repeatable)");
  inv_cmd->add_option("--max-selections", *inv_cap, "enumeration cap");
  inv_cmd->callback([&, inv_file, inv_s, inv_st, inv_n, inv_gamma, inv_splits,
                     inv_cap] {
    InverseProblem prob;
    if (!inv_file->empty()) {
      prob = inverse_problem_from_json(load_json_file(*inv_file));
    } else {
      prob.S = parse_double_list(*inv_s);
      prob.S_tilde = parse_double_list(*inv_st);
      prob.n = *inv_n;
      prob.gamma = *inv_gamma;
    }
    SolveOptions opts;
    opts.max_selections = *inv_cap;
    opts.splits = parse_splits(*inv_splits);
    json arr = json::array();
    for (const InverseSolution& s : solve_inverse(prob, opts, tol)) {
      arr.push_back(to_json(s));
    }
    emit(out, arr);
  });

  // --- classify ----------------------------------------------------------
  auto* cls_cmd = app.add_subcommand(
      "classify", "fold a modification history over a base classification");
  auto cls_file = std::make_shared<std::string>();
  auto cls_base = std::make_shared<std::string>();
  auto cls_ops = std::make_shared<std::string>();
  cls_cmd->add_option("--file", *cls_file, "MeasureDescriptor JSON file");
  cls_cmd->add_option("--base", *cls_base,
                      "base class: DET:k, DET:INF, INDET_NEXTREMAL, ...");
  cls_cmd->add_option("--ops", *cls_ops,
                      "history, e.g. AddMasses:2,MoveMasses:2:0,ToSigmaN");
  cls_cmd->callback([&, cls_file, cls_base, cls_ops] {
    MeasureDescriptor d;
    if (!cls_file->empty()) {
      d = descriptor_from_json(load_json_file(*cls_file));
    } else {
      if (cls_base->empty()) {
        fail(ErrorKind::InvalidData, "provide --file or --base");
      }
      d.base = DetClass::parse(*cls_base);
      d.ops = parse_ops_list(*cls_ops);
    }
    const Classification c = classify(d);
    emit(out, json{{"result", c.result.str()}, {"trace", c.trace}});
  });

  // --- verify ------------------------------------------------------------
  const auto add_corpus_flags = [](CLI::App* cmd,
                                   const std::shared_ptr<CorpusSpec>& spec) {
    cmd->add_option("--seed", spec->seed, "corpus seed");
    cmd->add_option("--count", spec->count, "number of matrices");
    cmd->add_option("--nmin", spec->n_min, "smallest matrix size");
    cmd->add_option("--nmax", spec->n_max, "largest matrix size");
    cmd->add_option("--qlo", spec->q_lo, "diagonal range, lower end");
    cmd->add_option("--qhi", spec->q_hi, "diagonal range, upper end");
    cmd->add_option("--blo", spec->b_lo, "off-diagonal range, lower end");
    cmd->add_option("--bhi", spec->b_hi, "off-diagonal range, upper end");
  };

  auto* ver_cmd = app.add_subcommand(
      "verify", "run the invariant suite over a seeded corpus");
  auto ver_spec = std::make_shared<CorpusSpec>();
  add_corpus_flags(ver_cmd, ver_spec);
  ver_cmd->callback([&, ver_spec] {
    const VerifyReport report = run_verification(*ver_spec, tol);
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back(json{{"name", c.name},
                            {"max_residual", c.max_residual},
                            {"threshold", c.threshold},
                            {"pass", c.pass},
                            {"detail", c.detail}});
    }
    emit(out, json{{"checks", checks}, {"all_pass", report.all_pass()}});
    if (!report.all_pass()) exit_code = 1;
  });

  // --- corpus ------------------------------------------------------------
  auto* cor_cmd = app.add_subcommand("corpus", "generate seeded test matrices");
  auto cor_spec = std::make_shared<CorpusSpec>();
  add_corpus_flags(cor_cmd, cor_spec);
  cor_cmd->callback([&, cor_spec] {
    json arr = json::array();
    for (const JacobiMatrix& J : generate_corpus(*cor_spec)) {
      arr.push_back(to_json(J));
    }
    emit(out, arr);
  });

  // Load tolerance config before any subcommand callback fires.
  app.parse_complete_callback([&] {
    if (!config_path.empty()) {
      tol = tolerances_from_json(load_json_file(config_path));
    }
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(out, json{{"kind", to_string(e.kind())}, {"detail", e.detail()}});
    return 1;
  }
  return exit_code;
}

}  // namespace jacspec::cli
