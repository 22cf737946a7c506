#ifndef IZETA_ZETA_EXACT_HPP
#define IZETA_ZETA_EXACT_HPP

#include "izeta/scalar.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace izeta {

/// Dense polynomial with exact integer coefficients, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  static IntPolynomial constant(long long c);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Integer coefficient(int power) const;

  double evaluate(double u) const;
  Rational evaluate(const Rational& u) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Exact quotient a / b; throws std::domain_error when b does not divide a in Z[u].
  static IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

/// Z(u)^{-1} of a small explicit graph with its bookkeeping.
struct ZetaPolynomial {
  IntPolynomial reciprocal;
  int vertices = 0;
  int edges = 0;
  int circuit_rank_minus_one = 0;
};

/// Rules for the closed-path enumeration.  Turning `tailless` off is only
/// meant for mutation testing of the series check.
struct ClosedPathRules {
  bool tailless = true;
};

/// (1 - u^2)^{r-1} det(I + u^2 (B - I) - u A) in floating point.
double ihara_det_reciprocal(const Eigen::MatrixXi& adjacency, double u);

/// Exact integer coefficients of Z(u)^{-1} via a fraction-free determinant over Z[u].
ZetaPolynomial zeta_reciprocal_polynomial(const Eigen::MatrixXi& adjacency);

/// Number of closed backtrackless tailless paths of length k, counting every
/// starting vertex and both orientations.
Integer count_closed_paths(const Eigen::MatrixXi& adjacency, int k, ClosedPathRules rules = {});

/// max_{j <= K} |[u^j] exp(sum_k N_k u^k / k) * Z^{-1}(u) - delta_{j,0}|, exactly.
Rational series_consistency(const Eigen::MatrixXi& adjacency, int K, ClosedPathRules rules = {});

/// Named graphs for tests and the validation corpus.
Eigen::MatrixXi path_graph(int vertices);
Eigen::MatrixXi cycle_graph(int vertices);
Eigen::MatrixXi complete_graph(int vertices);
/// Random connected simple graph: a random spanning tree plus extra edges.
Eigen::MatrixXi random_connected_graph(int vertices, int extra_edges, unsigned long long seed);

struct NamedGraph {
  std::string name;
  Eigen::MatrixXi adjacency;
};

/// P2..P5, C3..C6, K4 and five seeded random connected graphs on at most 8 vertices.
std::vector<NamedGraph> zeta_test_corpus();

}  // namespace izeta

#endif  // IZETA_ZETA_EXACT_HPP
