#include "izeta/percolation_graph.hpp"
#include "izeta/zeta_exact.hpp"

#include <doctest.h>

#include <cmath>

using namespace izeta;

namespace {

// Non-backtracking edge matrix on directed edges: T(e, f) = 1 when head(e) = tail(f) and f != reverse(e).
Eigen::MatrixXd hashimoto(const Eigen::MatrixXi& a) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j)) arcs.emplace_back(i, j);
  const int m = static_cast<int>(arcs.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (arcs[e].second == arcs[f].first && arcs[f].second != arcs[e].first) t(e, f) = 1;
  return t;
}

}  // namespace

TEST_CASE("ihara_det_reciprocal") {
  for (const auto& graph : zeta_test_corpus()) CHECK(ihara_det_reciprocal(graph.adjacency, 0.0) == doctest::Approx(1.0));
  for (double u : {0.1, 0.3, -0.2})
    CHECK(std::abs(ihara_det_reciprocal(cycle_graph(3), u) - std::pow(1 - u * u * u, 2)) <= 1e-12);
  for (double u : {0.1, 0.5, -0.7}) CHECK(std::abs(ihara_det_reciprocal(path_graph(3), u) - 1.0) <= 1e-12);
  CHECK_THROWS(ihara_det_reciprocal(path_graph(3), 1.0));
}

TEST_CASE("zeta_reciprocal_polynomial") {
  const auto c3 = zeta_reciprocal_polynomial(cycle_graph(3));
  CHECK(c3.reciprocal == IntPolynomial({1, 0, 0, -2, 0, 0, 1}));
  CHECK(c3.vertices == 3);
  CHECK(c3.edges == 3);
  CHECK(c3.circuit_rank_minus_one == 0);

  const auto empty = zeta_reciprocal_polynomial(Eigen::MatrixXi::Zero(5, 5));
  CHECK(empty.reciprocal == IntPolynomial::constant(1));
  CHECK(empty.circuit_rank_minus_one == -5);

  for (const auto& graph : zeta_test_corpus()) {
    CAPTURE(graph.name);
    const auto z = zeta_reciprocal_polynomial(graph.adjacency);
    CHECK(z.reciprocal.coefficient(0) == 1);
    CHECK(z.reciprocal.degree() <= 2 * z.edges);
    if (degree_vector(graph.adjacency).minCoeff() >= 2) CHECK(z.reciprocal.degree() == 2 * z.edges);
    CHECK(std::abs(z.reciprocal.evaluate(0.17) - ihara_det_reciprocal(graph.adjacency, 0.17)) <= 1e-12);
    // Hashimoto form det(I - u T), an independent route to the same polynomial.
    const Eigen::MatrixXd t = hashimoto(graph.adjacency);
    for (double u : {0.13, -0.31, 0.45}) {
      const double hash = t.rows() ? (Eigen::MatrixXd::Identity(t.rows(), t.cols()) - u * t).determinant() : 1.0;
      CHECK(std::abs(z.reciprocal.evaluate(u) - hash) <= 1e-10);
    }
  }
  CHECK_THROWS(zeta_reciprocal_polynomial(complete_graph(13)));
}

TEST_CASE("IntPolynomial arithmetic") {
  const IntPolynomial a({1, -1});  // 1 - u
  const IntPolynomial b({1, 1});   // 1 + u
  CHECK(a * b == IntPolynomial({1, 0, -1}));
  CHECK(IntPolynomial::divide_exact(a * b, b) == a);
  CHECK_THROWS_AS(IntPolynomial::divide_exact(IntPolynomial({1, 0, 1}), b), std::domain_error);
  CHECK((a + b) == IntPolynomial::constant(2));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.evaluate(Rational(1, 3)) == Rational(2, 3));
}

TEST_CASE("closed path counts") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(count_closed_paths(path_graph(5), k) == 0);
    CHECK(count_closed_paths(random_connected_graph(7, 0, 3), k) == 0);
  }
  CHECK(count_closed_paths(cycle_graph(3), 3) == 6);
  CHECK(count_closed_paths(cycle_graph(3), 4) == 0);
  CHECK(count_closed_paths(cycle_graph(3), 5) == 0);
  CHECK(count_closed_paths(cycle_graph(3), 6) == 6);
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 12; ++k) CHECK(count_closed_paths(cycle_graph(n), k) == (k % n == 0 ? 2 * n : 0));

  // Tr T^k counts the same tailless backtrackless closed paths.
  for (const auto& graph : zeta_test_corpus()) {
    const Eigen::MatrixXd t = hashimoto(graph.adjacency);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(t.rows(), t.cols());
    for (int k = 1; k <= 9; ++k) {
      power = power * t;
      CAPTURE(graph.name);
      CAPTURE(k);
      CHECK(count_closed_paths(graph.adjacency, k) == static_cast<long long>(std::llround(power.trace())));
    }
  }
  CHECK_THROWS(count_closed_paths(complete_graph(11), 3));
  CHECK_THROWS(count_closed_paths(cycle_graph(4), 13));
  CHECK_THROWS(count_closed_paths(cycle_graph(4), 0));
}

TEST_CASE("series consistency") {
  CHECK(series_consistency(cycle_graph(3), 10) == 0);
  CHECK(series_consistency(path_graph(4), 10) == 0);
  CHECK(series_consistency(complete_graph(4), 8) == 0);
  for (const auto& graph : zeta_test_corpus()) {
    CAPTURE(graph.name);
    CHECK(series_consistency(graph.adjacency, 10) == 0);
  }
}

TEST_CASE("dropping the tailless rule is visible off the cycles") {
  ClosedPathRules loose;
  loose.tailless = false;
  // a 2-regular cycle has no tails, so C3 cannot see the fault
  CHECK(series_consistency(cycle_graph(3), 10, loose) == 0);
  CHECK(series_consistency(complete_graph(4), 10, loose) > 0);
  CHECK(count_closed_paths(complete_graph(4), 5, loose) > count_closed_paths(complete_graph(4), 5));
}

TEST_CASE("test corpus") {
  const auto corpus = zeta_test_corpus();
  CHECK(corpus.size() == 14);
  for (const auto& graph : corpus) {
    CHECK(graph.adjacency.rows() <= 8);
    CHECK(graph.adjacency == graph.adjacency.transpose());
    CHECK(graph.adjacency.diagonal().isZero());
  }
  const auto g = random_connected_graph(8, 3, 99);
  CHECK(g == random_connected_graph(8, 3, 99));
  CHECK(g.sum() == 2 * (7 + 3));
}
