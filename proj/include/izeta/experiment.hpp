#ifndef IZETA_EXPERIMENT_HPP
#define IZETA_EXPERIMENT_HPP

#include "izeta/percolation_graph.hpp"
#include "izeta/profile.hpp"
#include "izeta/spectra.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace izeta {

/// Parameters shared by every subcommand.  Serialized as "key = value" lines.
struct ExperimentConfig {
  int n = 100;
  double R = 10.0;
  ProfileFamily family = ProfileFamily::Gaussian;
  double a = 0.5;
  double v = 1.0;
  std::uint64_t seed = 1;
  int trials = 10;
  int k_max = 4;
  double gamma = 0.5;
  double r_scale = 1.0;  // converge: R = ceil(r_scale * N^gamma)
  std::vector<int> sizes{501, 1001, 2001, 4001};
  double u = 0.3;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;

  Profile profile() const { return Profile(family, a); }
  int N() const { return 2 * n + 1; }

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;

  std::string to_text() const;
  static ExperimentConfig from_text(const std::string& text);
  /// Applies "key = value" pairs on top of this config.
  void apply(const std::map<std::string, std::string>& values);

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Reads "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// One realization: its spectrum plus the degree-based statistics.
struct TrialResult {
  std::uint64_t seed = 0;
  SpectralSummary spectrum;
  double mean_degree = 0.0;
  double circuit_rank_term = 0.0;
  double upsilon = 0.0;  // upsilon_n at config.u
};

/// Trials with seeds seed + t, run on config.threads threads and returned in trial order.
std::vector<TrialResult> run_trials(const ExperimentConfig& config);

/// R = ceil(r_scale * N^gamma); throws unless 0 < gamma < 1.
double sweep_radius(int N, double gamma, double r_scale);

struct ConvergeRow {
  int N = 0;
  double R = 0.0;
  int k = 0;
  double empirical = 0.0;
  double std_error = 0.0;
  double theory = 0.0;
  double gap = 0.0;
};

/// Sweep over config.sizes; per (N, k) the gap |mean M_k - m_k| with its standard error.
std::vector<ConvergeRow> converge_sweep(const ExperimentConfig& config);

/// True when the gaps of order k, ordered by N, are nonincreasing up to one
/// standard error of slack between neighbours and the last gap is below the first.
bool gap_trend_decreasing(const std::vector<ConvergeRow>& rows, int k);

}  // namespace izeta

#endif  // IZETA_EXPERIMENT_HPP
