#ifndef IZETA_SPECTRA_HPP
#define IZETA_SPECTRA_HPP

#include "izeta/percolation_graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace izeta {

/// Sorted real spectrum of one H realization plus the parameters it came from.
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;  // ascending
  int n = 0;
  double R = 0.0;
  std::uint64_t seed = 0;
  double v = 0.0;
  double phi1 = 0.0;
  /// sum(eigenvalues) - trace(H); should be round-off small.
  double trace_check = 0.0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Thrown by psi when some 1 - v^2/phi1 + lambda_j <= 0.
class SpectralCrossing : public std::domain_error {
 public:
  SpectralCrossing(double lambda, double argument);
  double lambda() const { return lambda_; }
  double argument() const { return argument_; }

 private:
  double lambda_;
  double argument_;
};

/// Full spectrum of a dense symmetric matrix (symmetric within 1e-12 entrywise).
SpectralSummary eigenvalues(const Eigen::MatrixXd& h);

/// Spectrum of H for a percolation sample.
///
/// H only couples vertices of the same connected component, so the spectrum
/// is the union of the spectra of the per-component blocks.  Identical to
/// eigenvalues(build_h(...)) up to round-off but far cheaper for sparse draws.
SpectralSummary sample_spectrum(const AdjacencySample& sample, double v, double phi1);

/// sigma(lambda) = #{j : lambda_j <= lambda} / N.
double counting_function(const SpectralSummary& s, double lambda);

/// (1/N) sum_j lambda_j^k.
double empirical_moment(const SpectralSummary& s, int k);

struct MomentEstimate {
  int k = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Per-k mean and standard error of the mean across trials (k = 0..k_max).
std::vector<MomentEstimate> average_moments(std::span<const SpectralSummary> trials, int k_max);

/// Mean and standard error of an arbitrary per-trial statistic.
struct SampleMean {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};
SampleMean sample_mean(std::span<const double> values);

/// Psi = (1/N) sum_j log(1 - v^2/phi1 + lambda_j).
double psi(const SpectralSummary& s);

/// Upsilon_N = (1/2N) Tr(B - 2I) log(1 - u^2).
double upsilon_n(const DegreeVector& degrees, double u);

/// -(1/N) log Z(u) at u = v / sqrt(phi1), as Upsilon_N + Psi.
double neg_log_zeta_density(const DegreeVector& degrees, const SpectralSummary& s, double v, double phi1);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  double density = 0.0;
};

/// Normalized histogram of the pooled eigenvalues (integrates to 1).
std::vector<HistogramBin> spectral_histogram(std::span<const SpectralSummary> trials, int bins, double lo,
                                             double hi);

}  // namespace izeta

#endif  // IZETA_SPECTRA_HPP
