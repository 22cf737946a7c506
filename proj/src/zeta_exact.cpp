#include "izeta/zeta_exact.hpp"

#include "izeta/percolation_graph.hpp"

#include <Eigen/LU>

#include <cmath>
#include <random>
#include <stdexcept>

namespace izeta {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(long long c) { return IntPolynomial({Integer(c)}); }

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients_.size())) return Integer(0);
  return coefficients_[power];
}

double IntPolynomial::evaluate(double u) const {
  double value = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * u + it->convert_to<double>();
  }
  return value;
}

Rational IntPolynomial::evaluate(const Rational& u) const {
  Rational value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * u + Rational(*it);
  return value;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) throw std::domain_error("polynomial not divisible");

  std::vector<Integer> remainder = a.coefficients_;
  std::vector<Integer> quotient(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Integer& lead = b.coefficients_.back();
  for (int shift = a.degree() - b.degree(); shift >= 0; --shift) {
    const Integer& top = remainder[static_cast<std::size_t>(shift + b.degree())];
    if (top % lead != 0) throw std::domain_error("polynomial not divisible");
    Integer q = top / lead;
    quotient[shift] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) remainder[shift + j] -= q * b.coefficients_[j];
  }
  for (const auto& r : remainder) {
    if (r != 0) throw std::domain_error("polynomial not divisible");
  }
  return IntPolynomial(std::move(quotient));
}

// ---------------------------------------------------------------------------
// Determinant formula

namespace {

void check_simple_graph(const Eigen::MatrixXi& adjacency) {
  if (adjacency.rows() != adjacency.cols()) throw std::invalid_argument("adjacency matrix is not square");
  for (Eigen::Index i = 0; i < adjacency.rows(); ++i) {
    if (adjacency(i, i) != 0) throw std::invalid_argument("graph has a loop");
    for (Eigen::Index j = 0; j < adjacency.cols(); ++j) {
      const int a = adjacency(i, j);
      if ((a != 0 && a != 1) || a != adjacency(j, i)) {
        throw std::invalid_argument("adjacency must be a symmetric 0/1 matrix");
      }
    }
  }
}

int circuit_rank_minus_one(const Eigen::MatrixXi& adjacency) {
  const DegreeVector degrees = degree_vector(adjacency);
  const int twice = degrees.sum() - 2 * static_cast<int>(degrees.size());
  return twice / 2;
}

// Bareiss fraction-free elimination; every division is exact in Z[u].
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  IntPolynomial previous = IntPolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return IntPolynomial();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = IntPolynomial::divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = IntPolynomial();
    }
    previous = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  return negate ? IntPolynomial() - det : det;
}

}  // namespace

double ihara_det_reciprocal(const Eigen::MatrixXi& adjacency, double u) {
  check_simple_graph(adjacency);
  const int rank_term = circuit_rank_minus_one(adjacency);
  if (std::abs(u) >= 1.0 && rank_term < 0) {
    throw std::domain_error("(1 - u^2)^(r-1) has a pole at |u| = 1");
  }
  if (std::abs(u) > 1.0) throw std::domain_error("|u| must be < 1");
  const DegreeVector degrees = degree_vector(adjacency);
  const auto n = adjacency.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - u * adjacency.cast<double>();
  m.diagonal().array() += u * u * (degrees.cast<double>().array() - 1.0);
  const double det = n == 0 ? 1.0 : m.partialPivLu().determinant();
  return std::pow(1.0 - u * u, rank_term) * det;
}

ZetaPolynomial zeta_reciprocal_polynomial(const Eigen::MatrixXi& adjacency) {
  check_simple_graph(adjacency);
  const auto n = static_cast<std::size_t>(adjacency.rows());
  if (n > 12) throw std::invalid_argument("exact zeta polynomial limited to N <= 12");

  const DegreeVector degrees = degree_vector(adjacency);
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = IntPolynomial({Integer(1), Integer(0), Integer(degrees(i) - 1)});
      } else if (adjacency(i, j) != 0) {
        m[i][j] = IntPolynomial({Integer(0), Integer(-1)});
      }
    }
  }

  ZetaPolynomial result;
  result.vertices = static_cast<int>(n);
  result.edges = degrees.sum() / 2;
  result.circuit_rank_minus_one = circuit_rank_minus_one(adjacency);

  IntPolynomial poly = bareiss_determinant(std::move(m));
  const IntPolynomial one_minus_u2({Integer(1), Integer(0), Integer(-1)});
  try {
    for (int i = 0; i < result.circuit_rank_minus_one; ++i) poly = poly * one_minus_u2;
    for (int i = 0; i < -result.circuit_rank_minus_one; ++i) poly = IntPolynomial::divide_exact(poly, one_minus_u2);
  } catch (const std::domain_error&) {
    throw std::domain_error("determinant not divisible - graph/implementation inconsistency");
  }
  result.reciprocal = std::move(poly);
  return result;
}

// ---------------------------------------------------------------------------
// Path enumeration

namespace {

struct DirectedEdges {
  std::vector<int> tail;
  std::vector<int> head;
  std::vector<int> reverse;
  std::vector<std::vector<int>> leaving;  // directed edges leaving each vertex
};

DirectedEdges directed_edges(const Eigen::MatrixXi& adjacency) {
  DirectedEdges d;
  const int n = static_cast<int>(adjacency.rows());
  d.leaving.resize(static_cast<std::size_t>(n));
  Eigen::MatrixXi id = Eigen::MatrixXi::Constant(n, n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adjacency(i, j) == 0) continue;
      id(i, j) = static_cast<int>(d.tail.size());
      d.leaving[i].push_back(id(i, j));
      d.tail.push_back(i);
      d.head.push_back(j);
    }
  }
  d.reverse.resize(d.tail.size());
  for (std::size_t e = 0; e < d.tail.size(); ++e) d.reverse[e] = id(d.head[e], d.tail[e]);
  return d;
}

void extend_paths(const DirectedEdges& d, int first, int last, int remaining, ClosedPathRules rules,
                  unsigned long long& count) {
  if (remaining == 0) {
    if (d.head[last] != d.tail[first]) return;
    if (rules.tailless && first == d.reverse[last]) return;
    ++count;
    return;
  }
  for (int next : d.leaving[d.head[last]]) {
    if (next == d.reverse[last]) continue;  // backtrackless
    extend_paths(d, first, next, remaining - 1, rules, count);
  }
}

}  // namespace

Integer count_closed_paths(const Eigen::MatrixXi& adjacency, int k, ClosedPathRules rules) {
  check_simple_graph(adjacency);
  if (k < 1) throw std::invalid_argument("path length must be >= 1");
  if (adjacency.rows() > 10 || k > 12) throw std::invalid_argument("path enumeration budget exceeded (N <= 10, k <= 12)");
  const DirectedEdges d = directed_edges(adjacency);
  unsigned long long count = 0;
  for (int first = 0; first < static_cast<int>(d.tail.size()); ++first) {
    extend_paths(d, first, first, k - 1, rules, count);
  }
  return Integer(count);
}

Rational series_consistency(const Eigen::MatrixXi& adjacency, int K, ClosedPathRules rules) {
  if (K < 1) throw std::invalid_argument("series order must be >= 1");
  const ZetaPolynomial zeta = zeta_reciprocal_polynomial(adjacency);

  // log Z = sum_k N_k u^k / k; exp via E_j = (1/j) sum_{k=1}^{j} k a_k E_{j-k}.
  std::vector<Rational> log_series(static_cast<std::size_t>(K + 1), Rational(0));
  for (int k = 1; k <= K; ++k) log_series[k] = Rational(count_closed_paths(adjacency, k, rules)) / k;
  std::vector<Rational> zeta_series(static_cast<std::size_t>(K + 1), Rational(0));
  zeta_series[0] = 1;
  for (int j = 1; j <= K; ++j) {
    Rational sum(0);
    for (int k = 1; k <= j; ++k) sum += k * log_series[k] * zeta_series[j - k];
    zeta_series[j] = sum / j;
  }

  Rational worst(0);
  for (int j = 0; j <= K; ++j) {
    Rational product(0);
    for (int i = 0; i <= j; ++i) product += zeta_series[i] * Rational(zeta.reciprocal.coefficient(j - i));
    Rational discrepancy = abs(product - (j == 0 ? Rational(1) : Rational(0)));
    if (discrepancy > worst) worst = discrepancy;
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Corpus

Eigen::MatrixXi path_graph(int vertices) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(vertices, vertices);
  for (int i = 0; i + 1 < vertices; ++i) a(i, i + 1) = a(i + 1, i) = 1;
  return a;
}

Eigen::MatrixXi cycle_graph(int vertices) {
  if (vertices < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Eigen::MatrixXi a = path_graph(vertices);
  a(0, vertices - 1) = a(vertices - 1, 0) = 1;
  return a;
}

Eigen::MatrixXi complete_graph(int vertices) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Ones(vertices, vertices);
  a.diagonal().setZero();
  return a;
}

Eigen::MatrixXi random_connected_graph(int vertices, int extra_edges, unsigned long long seed) {
  if (vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(vertices, vertices);
  for (int v = 1; v < vertices; ++v) {
    const int parent = static_cast<int>(rng() % static_cast<unsigned long long>(v));
    a(v, parent) = a(parent, v) = 1;
  }
  const int max_edges = vertices * (vertices - 1) / 2;
  int edges = vertices - 1;
  for (int added = 0; added < extra_edges && edges < max_edges;) {
    const int i = static_cast<int>(rng() % static_cast<unsigned long long>(vertices));
    const int j = static_cast<int>(rng() % static_cast<unsigned long long>(vertices));
    if (i == j || a(i, j) != 0) continue;
    a(i, j) = a(j, i) = 1;
    ++added;
    ++edges;
  }
  return a;
}

std::vector<NamedGraph> zeta_test_corpus() {
  std::vector<NamedGraph> corpus;
  for (int n = 2; n <= 5; ++n) corpus.push_back({"P" + std::to_string(n), path_graph(n)});
  for (int n = 3; n <= 6; ++n) corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
  corpus.push_back({"K4", complete_graph(4)});
  const int sizes[] = {5, 6, 7, 8, 8};
  const int extras[] = {2, 2, 3, 2, 4};
  for (int i = 0; i < 5; ++i) {
    corpus.push_back({"random" + std::to_string(i), random_connected_graph(sizes[i], extras[i], 1000 + i)});
  }
  return corpus;
}

}  // namespace izeta
