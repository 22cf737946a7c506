#include "izeta/experiment.hpp"

#include "izeta/moment_theory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace izeta {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string exact(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string short_family(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Exponential: return "exp";
    case ProfileFamily::Gaussian: return "gauss";
    case ProfileFamily::Lorentzian: return "lorentz";
  }
  return "gauss";
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (in.fail() || !(in >> std::ws).eof()) throw std::invalid_argument("bad value for " + key + ": '" + text + "'");
  return value;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(R >= 1.0)) throw std::invalid_argument("R must be >= 1");
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("amplitude a must lie in (0,1)");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (k_max < 0) throw std::invalid_argument("kmax must be >= 0");
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
  for (int N : sizes)
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("sweep sizes must be odd and >= 3");
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream text;
  text << "n = " << n << "\n"
       << "R = " << exact(R) << "\n"
       << "profile = " << short_family(family) << "\n"
       << "a = " << exact(a) << "\n"
       << "v = " << exact(v) << "\n"
       << "seed = " << seed << "\n"
       << "trials = " << trials << "\n"
       << "kmax = " << k_max << "\n"
       << "gamma = " << exact(gamma) << "\n"
       << "rscale = " << exact(r_scale) << "\n"
       << "sizes = ";
  for (std::size_t i = 0; i < sizes.size(); ++i) text << (i ? "," : "") << sizes[i];
  text << "\n"
       << "u = " << exact(u) << "\n"
       << "out = " << out << "\n"
       << "format = " << format << "\n"
       << "threads = " << threads << "\n";
  return text.str();
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return values;
}

void ExperimentConfig::apply(const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "n") n = parse_number<int>(key, value);
    else if (key == "R") R = parse_number<double>(key, value);
    else if (key == "profile") family = parse_profile_family(value);
    else if (key == "a") a = parse_number<double>(key, value);
    else if (key == "v") v = parse_number<double>(key, value);
    else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
    else if (key == "trials") trials = parse_number<int>(key, value);
    else if (key == "kmax") k_max = parse_number<int>(key, value);
    else if (key == "gamma") gamma = parse_number<double>(key, value);
    else if (key == "rscale") r_scale = parse_number<double>(key, value);
    else if (key == "u") u = parse_number<double>(key, value);
    else if (key == "out") out = value;
    else if (key == "format") format = value;
    else if (key == "threads") threads = parse_number<unsigned>(key, value);
    else if (key == "sizes") {
      sizes.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) sizes.push_back(parse_number<int>(key, trim(item)));
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
  ExperimentConfig config;
  config.apply(parse_key_values(text));
  return config;
}

std::vector<TrialResult> run_trials(const ExperimentConfig& config) {
  config.validate();
  const Profile profile = config.profile();
  const double phi1 = profile.phi1();
  const double v = config.v;
  std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      TrialResult& result = results[static_cast<std::size_t>(t)];
      result.seed = config.seed + static_cast<std::uint64_t>(t);
      const AdjacencySample sample = sample_adjacency(config.n, config.R, profile, result.seed);
      const DegreeVector degrees = degree_vector(sample);
      result.spectrum = sample_spectrum(sample, v, phi1);
      result.mean_degree = mean_degree(degrees);
      result.circuit_rank_term = circuit_rank_term(degrees);
      result.upsilon = upsilon_n(degrees, config.u);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();
  return results;
}

double sweep_radius(int N, double gamma, double r_scale) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (gamma >= 1.0) throw std::invalid_argument("gamma >= 1 violates R = o(N)");
  if (!(r_scale > 0.0)) throw std::invalid_argument("rscale must be positive");
  return std::max(1.0, std::ceil(r_scale * std::pow(static_cast<double>(N), gamma)));
}

std::vector<ConvergeRow> converge_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.trials < 2) throw std::invalid_argument("converge needs at least 2 trials for standard errors");
  const double phi1 = config.profile().phi1();
  const ThetaTable<double> theory(config.v, phi1, config.k_max);
  std::vector<ConvergeRow> rows;
  for (int N : config.sizes) {
    ExperimentConfig point = config;
    point.n = (N - 1) / 2;
    point.R = sweep_radius(N, config.gamma, config.r_scale);
    const auto trials = run_trials(point);
    std::vector<SpectralSummary> spectra;
    spectra.reserve(trials.size());
    for (const auto& t : trials) spectra.push_back(t.spectrum);
    const auto estimates = average_moments(spectra, config.k_max);
    for (const auto& e : estimates) {
      const double m = theory.moment(e.k);
      rows.push_back({N, point.R, e.k, e.mean, e.std_error, m, std::abs(e.mean - m)});
    }
  }
  return rows;
}

bool gap_trend_decreasing(const std::vector<ConvergeRow>& rows, int k) {
  std::vector<ConvergeRow> selected;
  for (const auto& row : rows)
    if (row.k == k) selected.push_back(row);
  std::sort(selected.begin(), selected.end(), [](const auto& x, const auto& y) { return x.N < y.N; });
  if (selected.size() < 2) return true;
  for (std::size_t i = 1; i < selected.size(); ++i) {
    const double slack = selected[i].std_error + selected[i - 1].std_error;
    if (selected[i].gap > selected[i - 1].gap + slack) return false;
  }
  return selected.back().gap < selected.front().gap;
}

}  // namespace izeta
