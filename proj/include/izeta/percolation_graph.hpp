#ifndef IZETA_PERCOLATION_GRAPH_HPP
#define IZETA_PERCOLATION_GRAPH_HPP

#include "izeta/profile.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace izeta {

using AdjacencyMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using DegreeVector = Eigen::VectorXi;

/// Undirected edge between site labels, always stored with first < second.
using Edge = std::pair<int, int>;

/// One seeded draw of the symmetric 0/1 adjacency matrix on sites -n..n.
///
/// Row/column i of `entries` corresponds to site x = i - n.  `edges` lists the
/// same graph by site label in draw order (row-major over the upper triangle).
struct AdjacencySample {
  int n = 0;
  double R = 1.0;
  std::uint64_t seed = 0;
  ProfileFamily family = ProfileFamily::Gaussian;
  double amplitude = 0.5;
  AdjacencyMatrix entries;
  std::vector<Edge> edges;

  int size() const { return 2 * n + 1; }
  int index_of(int site) const { return site + n; }
  int site_of(int index) const { return index - n; }
};

/// Bernoulli parameter phi((x - y) / R) / R of the pair {x, y}.
double edge_probability(int x, int y, double R, const Profile& profile);

/// Draws every upper-triangle pair once, in row-major order, from a
/// mt19937_64 stream seeded with `seed`; the lower triangle mirrors it.
AdjacencySample sample_adjacency(int n, double R, const Profile& profile, std::uint64_t seed);

/// Row sums of a 0/1 adjacency matrix (the diagonal of B).
template <typename Derived>
DegreeVector degree_vector(const Eigen::MatrixBase<Derived>& adjacency) {
  return adjacency.template cast<int>().rowwise().sum();
}

inline DegreeVector degree_vector(const AdjacencySample& sample) {
  return degree_vector(sample.entries);
}

/// H = (v^2 / phi1) diag(B) - (v / sqrt(phi1)) A.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> build_h(const Eigen::MatrixBase<Derived>& adjacency,
                                                              const DegreeVector& degrees, Scalar v,
                                                              Scalar phi1) {
  if (!(phi1 > Scalar(0))) throw std::invalid_argument("phi1 must be positive");
  using std::sqrt;
  const Scalar diag_scale = v * v / phi1;
  const Scalar offdiag_scale = v / sqrt(phi1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h =
      -offdiag_scale * adjacency.template cast<Scalar>();
  h.diagonal() += diag_scale * degrees.template cast<Scalar>();
  return h;
}

inline Eigen::MatrixXd build_h(const AdjacencySample& sample, const DegreeVector& degrees, double v,
                               double phi1) {
  return build_h<double>(sample.entries, degrees, v, phi1);
}

/// r - 1 = Tr(B - 2I) / 2.
double circuit_rank_term(const DegreeVector& degrees);

/// Mean vertex degree (1/N) sum_x deg(x).
double mean_degree(const DegreeVector& degrees);

/// Exact finite-size expectation of the mean degree, (1/N) sum_{x != y} p_R(x - y).
double expected_mean_degree(int n, double R, const Profile& profile);

/// Connected components as lists of matrix indices, each sorted ascending.
std::vector<std::vector<int>> connected_components(const AdjacencySample& sample);

void write_edge_list(std::ostream& out, const AdjacencySample& sample);
void write_dense_csv(std::ostream& out, const AdjacencySample& sample);

/// Parses "x y" lines ('#' starts a comment).  Vertices are the labels
/// lo..hi where [lo, hi] spans all labels unless `site_range` is given.
struct ParsedGraph {
  int first_label = 0;
  Eigen::MatrixXi adjacency;
};
ParsedGraph read_edge_list(std::istream& in, std::pair<int, int> site_range = {1, 0});

}  // namespace izeta

#endif  // IZETA_PERCOLATION_GRAPH_HPP
