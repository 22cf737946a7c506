// izeta: command-line front end for the percolation-graph zeta experiments.

#include "izeta/experiment.hpp"
#include "izeta/format.hpp"
#include "izeta/limit_functions.hpp"
#include "izeta/moment_theory.hpp"
#include "izeta/percolation_graph.hpp"
#include "izeta/spectra.hpp"
#include "izeta/validate.hpp"
#include "izeta/zeta_exact.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace izeta;

namespace {

// Flags given on the command line, as key = value pairs layered over the config file.
struct Flags {
  std::map<std::string, std::string> given;
  std::string config_file;
};

void add_common(CLI::App* app, Flags& flags, std::map<std::string, std::string>& storage) {
  static const std::vector<std::pair<std::string, std::string>> options = {
      {"n", "half-width: sites -n..n, N = 2n+1"},
      {"R", "interaction radius (real, >= 1)"},
      {"profile", "profile family: exp, gauss or lorentz"},
      {"a", "profile amplitude in (0,1)"},
      {"v", "coupling v"},
      {"seed", "64-bit seed (fallback: ZS_SEED)"},
      {"trials", "number of independent realizations"},
      {"kmax", "largest moment order"},
      {"gamma", "sweep exponent: R = ceil(rscale * N^gamma)"},
      {"rscale", "sweep prefactor"},
      {"sizes", "sweep sizes N, comma separated"},
      {"u", "argument of Upsilon_N"},
      {"out", "output path (default: stdout)"},
      {"format", "csv or json"},
      {"threads", "worker threads for trials"},
  };
  for (const auto& [key, help] : options) app->add_option("--" + key, storage[key], help);
  app->add_option("--config", flags.config_file, "key = value file; flags override it");
}

ExperimentConfig resolve(CLI::App* app, const Flags& flags, const std::map<std::string, std::string>& storage) {
  ExperimentConfig config;
  if (!flags.config_file.empty()) {
    std::ifstream in(flags.config_file);
    if (!in) throw std::runtime_error("cannot read config file " + flags.config_file);
    std::stringstream text;
    text << in.rdbuf();
    config.apply(parse_key_values(text.str()));
  }
  if (app->count("--seed") == 0) {
    if (const char* env = std::getenv("ZS_SEED"); env && *env) config.apply({{"seed", env}});
  }
  std::map<std::string, std::string> given;
  for (const auto& [key, value] : storage)
    if (app->count("--" + key) > 0) given[key] = value;
  config.apply(given);
  config.validate();
  return config;
}

// Writes the table to --out (with a metadata sidecar) or to stdout.
void emit(const ExperimentConfig& config, const std::string& command, const Table& table) {
  if (config.out.empty()) {
    write_table(std::cout, table, config.format);
    return;
  }
  std::ofstream out(config.out);
  if (!out) throw std::runtime_error("cannot write " + config.out);
  write_table(out, table, config.format);
  write_metadata_sidecar(config.out, command, config.to_text());
}

int cmd_sample(const ExperimentConfig& config, bool dense) {
  const AdjacencySample sample = sample_adjacency(config.n, config.R, config.profile(), config.seed);
  const DegreeVector degrees = degree_vector(sample);
  std::ostream* target = &std::cout;
  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) throw std::runtime_error("cannot write " + config.out);
    target = &file;
  }
  if (dense) write_dense_csv(*target, sample);
  else write_edge_list(*target, sample);
  // The summary goes to stderr when the edge list occupies stdout.
  std::ostream& summary = config.out.empty() ? std::cerr : std::cout;
  summary << "edges " << sample.edges.size() << "\n"
          << "mean_degree " << format_number(mean_degree(degrees)) << "\n"
          << "expected_mean_degree " << format_number(expected_mean_degree(config.n, config.R, config.profile()))
          << "\n"
          << "phi1 " << format_number(config.profile().phi1()) << "\n";
  if (!config.out.empty()) write_metadata_sidecar(config.out, "sample", config.to_text());
  return 0;
}

int cmd_spectrum(const ExperimentConfig& config, int bins) {
  const auto trials = run_trials(config);
  Table table;
  if (bins > 0) {
    std::vector<SpectralSummary> spectra;
    double lo = 0.0, hi = 0.0;
    for (const auto& t : trials) {
      spectra.push_back(t.spectrum);
      lo = std::min(lo, t.spectrum.eigenvalues.minCoeff());
      hi = std::max(hi, t.spectrum.eigenvalues.maxCoeff());
    }
    hi += 1e-12 * std::max(1.0, std::abs(hi));
    table.columns = {"bin_left", "bin_right", "density"};
    for (const auto& bin : spectral_histogram(spectra, bins, lo, hi)) table.add_row({bin.left, bin.right, bin.density});
  } else {
    table.columns = {"trial", "index", "lambda"};
    for (std::size_t t = 0; t < trials.size(); ++t) {
      const auto& values = trials[t].spectrum.eigenvalues;
      for (Eigen::Index i = 0; i < values.size(); ++i)
        table.add_row({static_cast<long long>(t), static_cast<long long>(i), values(i)});
    }
  }
  emit(config, "spectrum", table);
  return 0;
}

int cmd_moments(const ExperimentConfig& config, bool theory_only) {
  const double phi1 = config.profile().phi1();
  Table table;
  if (theory_only) {
    const MomentTable theory = moment_table(config.v, phi1, config.k_max);
    table.columns = {"k", "m_k", "ell_k", "mu_k"};
    for (int k = 0; k <= config.k_max; ++k)
      table.add_row({static_cast<long long>(k), theory.m[k], theory.ell[k], theory.mu[k]});
    emit(config, "moments", table);
    return 0;
  }
  if (config.trials < 2) throw std::invalid_argument("moments needs at least 2 trials (or --theory)");
  const auto trials = run_trials(config);
  std::vector<SpectralSummary> spectra;
  for (const auto& t : trials) spectra.push_back(t.spectrum);
  const ThetaTable<double> theory(config.v, phi1, config.k_max);
  table.columns = {"k", "mean", "stderr", "theory_m_k", "abs_diff", "z_score"};
  for (const auto& e : average_moments(spectra, config.k_max)) {
    const double m = theory.moment(e.k);
    const double diff = std::abs(e.mean - m);
    const double z = e.std_error > 0 ? diff / e.std_error : (diff == 0 ? 0.0 : INFINITY);
    table.add_row({static_cast<long long>(e.k), e.mean, e.std_error, m, diff, z});
  }
  emit(config, "moments", table);
  return 0;
}

int cmd_converge(const ExperimentConfig& config) {
  sweep_radius(3, config.gamma, config.r_scale);  // reject gamma >= 1 before any sampling
  const auto rows = converge_sweep(config);
  Table table;
  table.columns = {"N", "R", "k", "mean", "stderr", "theory_m_k", "gap", "z_score"};
  for (const auto& row : rows) {
    const double z = row.std_error > 0 ? row.gap / row.std_error : 0.0;
    table.add_row({static_cast<long long>(row.N), row.R, static_cast<long long>(row.k), row.empirical, row.std_error,
                   row.theory, row.gap, z});
  }
  emit(config, "converge", table);
  for (int k = 1; k <= config.k_max; ++k)
    std::cerr << "k=" << k << " gap trend " << (gap_trend_decreasing(rows, k) ? "decreasing" : "not decreasing")
              << "\n";
  return 0;
}

Eigen::MatrixXi named_graph(const std::string& name) {
  if (name.size() >= 2) {
    const int size = std::stoi(name.substr(1));
    switch (name[0]) {
      case 'P': return path_graph(size);
      case 'C': return cycle_graph(size);
      case 'K': return complete_graph(size);
      default: break;
    }
  }
  throw std::invalid_argument("unknown graph name " + name + " (use Pn, Cn or Kn)");
}

int cmd_zeta(const ExperimentConfig& config, const std::string& graph_name, const std::string& edge_file) {
  Eigen::MatrixXi adjacency;
  if (!edge_file.empty()) {
    std::ifstream in(edge_file);
    if (!in) throw std::runtime_error("cannot read " + edge_file);
    adjacency = read_edge_list(in).adjacency;
  } else {
    adjacency = named_graph(graph_name.empty() ? "C3" : graph_name);
  }
  const ZetaPolynomial zeta = zeta_reciprocal_polynomial(adjacency);
  Table table;
  table.columns = {"power", "coefficient", "closed_paths"};
  const int top = std::max(zeta.reciprocal.degree(), config.k_max);
  for (int j = 0; j <= top; ++j) {
    std::string paths = j >= 1 && j <= config.k_max ? count_closed_paths(adjacency, j).str() : "";
    table.add_row({static_cast<long long>(j), zeta.reciprocal.coefficient(j).str(), paths});
  }
  emit(config, "zeta", table);
  std::cerr << "vertices " << zeta.vertices << " edges " << zeta.edges << " r-1 " << zeta.circuit_rank_minus_one
            << "\n";
  return 0;
}

const char* kPlotScript = R"(# plot the CSV written by `izeta limits` (matplotlib)
import csv, sys
import matplotlib.pyplot as plt
rows = list(csv.reader(open(sys.argv[1])))
header, data = rows[0], [[float(x) for x in r] for r in rows[1:]]
plt.plot([r[0] for r in data], [r[1] for r in data])
plt.xlabel(header[0]); plt.ylabel(header[1])
plt.savefig(sys.argv[1] + ".png", dpi=150)
)";

int cmd_limits(const ExperimentConfig& config, const std::string& what, int points, bool plot_script) {
  if (plot_script) {
    std::cout << kPlotScript;
    return 0;
  }
  if (points < 2) throw std::invalid_argument("need at least 2 grid points");
  Table table;
  if (what == "F") {
    table.columns = {"v", "F(v)"};
    for (int i = 0; i < points; ++i) {
      const double v = -2.0 + 4.0 * i / (points - 1);
      table.add_row({v, limit_F(v)});
    }
  } else if (what == "density") {
    const auto [lo, hi] = semicircle_support(config.v);
    table.columns = {"lambda", "density"};
    for (int i = 0; i < points; ++i) {
      const double lambda = lo + (hi - lo) * i / (points - 1);
      table.add_row({lambda, semicircle_density(lambda, config.v)});
    }
  } else if (what == "stieltjes") {
    const auto [lo, hi] = semicircle_support(config.v);
    table.columns = {"re_z", "im_z", "re_g", "im_g"};
    for (int i = 0; i < points; ++i) {
      const std::complex<double> z(lo - 1.0 + (hi - lo + 2.0) * i / (points - 1), 0.1);
      const auto g = stieltjes_g(z, config.v);
      table.add_row({z.real(), z.imag(), g.real(), g.imag()});
    }
  } else if (what == "upsilon") {
    table.columns = {"v", "upsilon(v)"};
    for (int i = 1; i <= points; ++i) {
      const double v = 2.0 * i / points;
      table.add_row({v, upsilon_integral(v)});
    }
  } else {
    throw std::invalid_argument("--what must be F, density, stieltjes or upsilon");
  }
  emit(config, "limits", table);
  return 0;
}

int cmd_validate(const ExperimentConfig& config, const std::string& faults) {
  ValidationOptions options;
  options.faults = parse_faults(faults);
  options.threads = config.threads;
  const ValidationReport report = run_validation(options);
  if (config.out.empty()) {
    write_report_json(std::cout, report);
  } else {
    std::ofstream out(config.out);
    write_report_json(out, report);
  }
  for (const auto& name : report.failed_names()) std::cerr << "FAILED " << name << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ihara zeta functions of long-range percolation graphs"};
  app.require_subcommand(1);
  Flags flags;
  std::map<std::string, std::map<std::string, std::string>> storage;

  auto* sample = app.add_subcommand("sample", "draw one adjacency matrix and write its edge list");
  add_common(sample, flags, storage["sample"]);
  bool dense = false;
  sample->add_flag("--dense", dense, "write the dense 0/1 CSV instead of the edge list");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of H per trial, or their pooled histogram");
  add_common(spectrum, flags, storage["spectrum"]);
  int bins = 0;
  spectrum->add_option("--bins", bins, "histogram bins (0: raw eigenvalues)");

  auto* moments = app.add_subcommand("moments", "empirical spectral moments against the limiting m_k");
  add_common(moments, flags, storage["moments"]);
  bool theory_only = false;
  moments->add_flag("--theory", theory_only, "print m_k, ell_k, mu_k only");

  auto* converge = app.add_subcommand("converge", "moment gaps over a sweep of sizes N");
  add_common(converge, flags, storage["converge"]);

  auto* zeta = app.add_subcommand("zeta", "exact Ihara zeta polynomial and closed-path counts");
  add_common(zeta, flags, storage["zeta"]);
  std::string graph_name, edge_file;
  zeta->add_option("--graph", graph_name, "named graph: Pn, Cn or Kn");
  zeta->add_option("--edges", edge_file, "edge-list file");

  auto* limits = app.add_subcommand("limits", "limit functions on a grid");
  add_common(limits, flags, storage["limits"]);
  std::string what = "F";
  int points = 101;
  bool plot_script = false;
  limits->add_option("--what", what, "F, density, stieltjes or upsilon");
  limits->add_option("--points", points, "grid points");
  limits->add_flag("--plot-script", plot_script, "print a matplotlib script for the CSV output");

  auto* validate = app.add_subcommand("validate", "run every cross-module check; exit 1 on failure");
  add_common(validate, flags, storage["validate"]);
  std::string faults;
  validate->add_option("--inject-fault", faults, "star and/or tailless (comma separated)");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const ExperimentConfig config = resolve(chosen, flags, storage[chosen->get_name()]);
    if (chosen == sample) return cmd_sample(config, dense);
    if (chosen == spectrum) return cmd_spectrum(config, bins);
    if (chosen == moments) return cmd_moments(config, theory_only);
    if (chosen == converge) return cmd_converge(config);
    if (chosen == zeta) return cmd_zeta(config, graph_name, edge_file);
    if (chosen == limits) return cmd_limits(config, what, points, plot_script);
    if (chosen == validate) return cmd_validate(config, faults);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
