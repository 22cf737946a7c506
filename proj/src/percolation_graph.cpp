#include "izeta/percolation_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace izeta {

namespace {

double probability_at_distance(int distance, double R, const Profile& profile) {
  const double p = profile(static_cast<double>(distance) / R) / R;
  if (!(p < 1.0)) throw std::domain_error("profile violates 0<phi<1");
  return p;
}

// 53 random bits mapped to [0, 1); independent of the standard library's
// distribution implementation so samples are portable.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

double edge_probability(int x, int y, double R, const Profile& profile) {
  if (x == y) throw std::invalid_argument("diagonal entry has no Bernoulli law");
  if (!(R >= 1.0)) throw std::invalid_argument("R must be >= 1");
  return probability_at_distance(std::abs(x - y), R, profile);
}

AdjacencySample sample_adjacency(int n, double R, const Profile& profile, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(R >= 1.0)) throw std::invalid_argument("R must be >= 1");

  AdjacencySample sample;
  sample.n = n;
  sample.R = R;
  sample.seed = seed;
  sample.family = profile.family();
  sample.amplitude = profile.amplitude();

  const int size = 2 * n + 1;
  std::vector<double> p_by_distance(static_cast<std::size_t>(size), 0.0);
  for (int d = 1; d < size; ++d) p_by_distance[d] = probability_at_distance(d, R, profile);

  sample.entries = AdjacencyMatrix::Zero(size, size);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (uniform01(rng) < p_by_distance[j - i]) {
        sample.entries(i, j) = 1;
        sample.entries(j, i) = 1;
        sample.edges.emplace_back(sample.site_of(i), sample.site_of(j));
      }
    }
  }
  return sample;
}

double circuit_rank_term(const DegreeVector& degrees) {
  return (static_cast<double>(degrees.sum()) - 2.0 * static_cast<double>(degrees.size())) / 2.0;
}

double mean_degree(const DegreeVector& degrees) {
  if (degrees.size() == 0) return 0.0;
  return static_cast<double>(degrees.sum()) / static_cast<double>(degrees.size());
}

double expected_mean_degree(int n, double R, const Profile& profile) {
  const int size = 2 * n + 1;
  // Each distance d appears for 2 (N - d) ordered pairs.
  double total = 0.0;
  for (int d = size - 1; d >= 1; --d) {
    total += 2.0 * static_cast<double>(size - d) * probability_at_distance(d, R, profile);
  }
  return total / static_cast<double>(size);
}

std::vector<std::vector<int>> connected_components(const AdjacencySample& sample) {
  const int size = sample.size();
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(size));
  for (const auto& [x, y] : sample.edges) {
    neighbours[sample.index_of(x)].push_back(sample.index_of(y));
    neighbours[sample.index_of(y)].push_back(sample.index_of(x));
  }

  std::vector<std::vector<int>> components;
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  std::vector<int> stack;
  for (int start = 0; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<int> component;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      int current = stack.back();
      stack.pop_back();
      component.push_back(current);
      for (int next : neighbours[current]) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

void write_edge_list(std::ostream& out, const AdjacencySample& sample) {
  for (const auto& [x, y] : sample.edges) out << x << ' ' << y << '\n';
}

void write_dense_csv(std::ostream& out, const AdjacencySample& sample) {
  const int size = sample.size();
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (j > 0) out << ',';
      out << static_cast<int>(sample.entries(i, j));
    }
    out << '\n';
  }
}

ParsedGraph read_edge_list(std::istream& in, std::pair<int, int> site_range) {
  std::vector<Edge> edges;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int x = 0;
    int y = 0;
    if (!(fields >> x)) continue;
    if (!(fields >> y)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_number) + ": expected \"x y\"");
    }
    if (x == y) throw std::invalid_argument("edge list line " + std::to_string(line_number) + ": loop");
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }

  int lo = site_range.first;
  int hi = site_range.second;
  if (lo > hi) {
    if (edges.empty()) throw std::invalid_argument("empty edge list without a vertex range");
    lo = edges.front().first;
    hi = edges.front().second;
    for (const auto& [x, y] : edges) {
      lo = std::min(lo, x);
      hi = std::max(hi, y);
    }
  }

  ParsedGraph graph;
  graph.first_label = lo;
  const int size = hi - lo + 1;
  graph.adjacency = Eigen::MatrixXi::Zero(size, size);
  for (const auto& [x, y] : edges) {
    if (x < lo || y > hi) throw std::invalid_argument("edge label outside the vertex range");
    if (graph.adjacency(x - lo, y - lo) != 0) throw std::invalid_argument("duplicate edge in edge list");
    graph.adjacency(x - lo, y - lo) = 1;
    graph.adjacency(y - lo, x - lo) = 1;
  }
  return graph;
}

}  // namespace izeta
