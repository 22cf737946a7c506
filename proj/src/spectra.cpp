#include "izeta/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace izeta {

namespace {

std::string crossing_message(double lambda, double argument) {
  std::ostringstream out;
  out.precision(17);
  out << "log-determinant argument nonpositive (spectral crossing): lambda = " << lambda
      << ", argument = " << argument;
  return out.str();
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& h) {
  if (h.rows() == 0) return Eigen::VectorXd();
  if (h.rows() == 1) return h.diagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  return solver.eigenvalues();
}

bool same_parameters(const SpectralSummary& a, const SpectralSummary& b) {
  return a.size() == b.size() && a.n == b.n && a.R == b.R && a.v == b.v && a.phi1 == b.phi1;
}

}  // namespace

SpectralCrossing::SpectralCrossing(double lambda, double argument)
    : std::domain_error(crossing_message(lambda, argument)), lambda_(lambda), argument_(argument) {}

SpectralSummary eigenvalues(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix is not square");
  if (h.size() > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("matrix is not symmetric");
  }
  SpectralSummary s;
  s.eigenvalues = symmetric_eigenvalues(h);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.trace_check = s.eigenvalues.sum() - h.trace();
  return s;
}

SpectralSummary sample_spectrum(const AdjacencySample& sample, double v, double phi1) {
  if (!(phi1 > 0.0)) throw std::invalid_argument("phi1 must be positive");
  const DegreeVector degrees = degree_vector(sample);
  const double diag_scale = v * v / phi1;
  const double offdiag_scale = v / std::sqrt(phi1);

  SpectralSummary s;
  s.n = sample.n;
  s.R = sample.R;
  s.seed = sample.seed;
  s.v = v;
  s.phi1 = phi1;
  s.eigenvalues.resize(sample.size());

  Eigen::Index filled = 0;
  double trace = 0.0;
  for (const auto& component : connected_components(sample)) {
    const auto size = static_cast<Eigen::Index>(component.size());
    Eigen::MatrixXd block(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        block(i, j) = -offdiag_scale * sample.entries(component[i], component[j]);
      }
      block(i, i) = diag_scale * degrees(component[i]);
    }
    trace += block.trace();
    s.eigenvalues.segment(filled, size) = symmetric_eigenvalues(block);
    filled += size;
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.trace_check = s.eigenvalues.sum() - trace;
  return s;
}

double counting_function(const SpectralSummary& s, double lambda) {
  if (s.size() == 0) return 0.0;
  auto count = std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), lambda) - s.eigenvalues.begin();
  return static_cast<double>(count) / static_cast<double>(s.size());
}

double empirical_moment(const SpectralSummary& s, int k) {
  if (k < 0) throw std::invalid_argument("moment order must be >= 0");
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  return s.eigenvalues.array().pow(k).sum() / static_cast<double>(s.size());
}

SampleMean sample_mean(std::span<const double> values) {
  SampleMean result;
  result.count = values.size();
  if (values.empty()) return result;
  double sum = 0.0;
  for (double x : values) sum += x;
  result.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double x : values) squares += (x - result.mean) * (x - result.mean);
    const double variance = squares / static_cast<double>(values.size() - 1);
    result.std_error = std::sqrt(variance / static_cast<double>(values.size()));
  }
  return result;
}

std::vector<MomentEstimate> average_moments(std::span<const SpectralSummary> trials, int k_max) {
  if (trials.size() < 2) throw std::invalid_argument("average_moments needs at least 2 trials");
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  for (const auto& trial : trials) {
    if (!same_parameters(trial, trials.front())) {
      throw std::invalid_argument("trials have mismatched parameters");
    }
  }

  std::vector<MomentEstimate> table;
  std::vector<double> values(trials.size());
  for (int k = 0; k <= k_max; ++k) {
    for (std::size_t t = 0; t < trials.size(); ++t) values[t] = empirical_moment(trials[t], k);
    const SampleMean m = sample_mean(values);
    table.push_back({k, m.mean, m.std_error});
  }
  return table;
}

double psi(const SpectralSummary& s) {
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  const double shift = 1.0 - s.v * s.v / s.phi1;
  double total = 0.0;
  for (double lambda : s.eigenvalues) {
    const double argument = shift + lambda;
    if (!(argument > 0.0)) throw SpectralCrossing(lambda, argument);
    total += std::log(argument);
  }
  return total / static_cast<double>(s.size());
}

double upsilon_n(const DegreeVector& degrees, double u) {
  if (!(std::abs(u) < 1.0)) throw std::domain_error("|u| must be < 1 for log(1 - u^2)");
  if (degrees.size() == 0) throw std::invalid_argument("empty degree vector");
  return circuit_rank_term(degrees) / static_cast<double>(degrees.size()) * std::log1p(-u * u);
}

double neg_log_zeta_density(const DegreeVector& degrees, const SpectralSummary& s, double v, double phi1) {
  if (!(phi1 > 0.0)) throw std::invalid_argument("phi1 must be positive");
  if (!(v * v < phi1)) throw std::domain_error("need v^2 < phi1 so that |u| < 1");
  if (s.v != v || s.phi1 != phi1) throw std::invalid_argument("spectrum was computed for other (v, phi1)");
  return upsilon_n(degrees, v / std::sqrt(phi1)) + psi(s);
}

std::vector<HistogramBin> spectral_histogram(std::span<const SpectralSummary> trials, int bins, double lo,
                                             double hi) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram needs bins >= 1 and hi > lo");
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  double total = 0.0;
  const double width = (hi - lo) / bins;
  for (const auto& trial : trials) {
    for (double lambda : trial.eigenvalues) {
      total += 1.0;
      if (lambda < lo || lambda > hi) continue;
      int bin = std::min(bins - 1, static_cast<int>((lambda - lo) / width));
      counts[bin] += 1.0;
    }
  }
  std::vector<HistogramBin> histogram;
  for (int b = 0; b < bins; ++b) {
    const double density = total > 0.0 ? counts[b] / (total * width) : 0.0;
    histogram.push_back({lo + b * width, lo + (b + 1) * width, density});
  }
  return histogram;
}

}  // namespace izeta
