#include "izeta/moment_theory.hpp"
#include "izeta/walk_oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace izeta;

namespace {

const double kGridV[] = {0.5, 1.0, 2.0};
const double kGridPhi[] = {0.5, 1.0, 2.0, 10.0};

double catalan(int p) {
  double c = 1.0;
  for (int i = 0; i < p; ++i) c = c * 2.0 * (2 * i + 1) / (i + 2);
  return c;
}

double choose(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Moments of the semicircle of radius 2|v| shifted by v^2, by binomial expansion.
double shifted_semicircle_moment(int k, double v) {
  double total = 0.0;
  for (int p = 0; 2 * p <= k; ++p) total += choose(k, 2 * p) * std::pow(v * v, k - 2 * p) * std::pow(v * v, p) * catalan(p);
  return total;
}

}  // namespace

TEST_CASE("star_binomial") {
  CHECK(star_binomial(-1, 0) == 1);
  CHECK(star_binomial(0, 1) == 0);
  CHECK(star_binomial(3, 2) == 3);
  CHECK(star_binomial(10, 4) == 210);
  CHECK(star_binomial(2, 5) == 0);
  CHECK_THROWS(star_binomial(-2, 0));
  CHECK(star_binomial_in_domain(-1, 0));
  CHECK(star_binomial_in_domain(0, 1));
  CHECK_FALSE(star_binomial_in_domain(0, 3));
}

TEST_CASE("Theta and m_k hand values") {
  for (double v : kGridV)
    for (double phi1 : kGridPhi) {
      const ThetaTable<double> t(v, phi1, 6);
      const double v2 = v * v;
      CHECK(t(0, 0) == 1.0);
      for (int k = 1; k <= 6; ++k) CHECK(t(k, 0) == 0.0);
      CHECK(t(1, 1) == doctest::Approx(v2).epsilon(1e-15));
      CHECK(t(2, 1) == doctest::Approx(v2).epsilon(1e-15));
      CHECK(t(2, 2) == doctest::Approx(v2 * v2 + v2 * v2 / phi1).epsilon(1e-15));
      CHECK(t.moment(0) == 1.0);
      CHECK(t.moment(1) == doctest::Approx(v2).epsilon(1e-15));
      for (int k = 1; k <= 6; ++k) CHECK(t.moment(k) > 0.0);
      CHECK(t.out_of_domain_star_calls() == 0);
    }
  CHECK_THROWS(theta(2, 3, 1.0, 1.0));
  CHECK(theta(1, 1, 0.7, 3.0) == doctest::Approx(0.49));
  CHECK(limit_moment_m(0, 0.7, 3.0) == 1.0);
}

TEST_CASE("Theta agrees with the tree-type walk oracle for k <= 8") {
  const WalkCensus census(8);
  for (double v : kGridV)
    for (double phi1 : kGridPhi) {
      const ThetaTable<double> t(v, phi1, 8);
      for (int k = 1; k <= 8; ++k) {
        for (int r = 1; r <= k; ++r) CHECK(relative_gap(t(k, r), census.theta(k, r, v, phi1)) <= 1e-9);
        CHECK(relative_gap(t.moment(k), census.moment(k, v, phi1)) <= 1e-9);
      }
    }
  // exact arithmetic at a rational point
  const ThetaTable<Rational> exact(Rational(2, 3), Rational(5, 7), 8);
  for (int k = 1; k <= 8; ++k)
    for (int r = 1; r <= k; ++r) CHECK(exact(k, r) == census.theta(k, r, Rational(2, 3), Rational(5, 7)));
}

TEST_CASE("Upsilon decomposition") {
  for (double v : kGridV)
    for (double phi1 : kGridPhi) {
      const DecompositionTable<double> d(v, phi1, 10);
      const ThetaTable<double> t(v, phi1, 10);
      for (int g = 1; g <= 10; ++g)
        CHECK(d.upsilon(g, g) == doctest::Approx(std::pow(v, 2 * g) / std::pow(phi1, g - 1)).epsilon(1e-13));
      CHECK(d.upsilon(1, 1) == doctest::Approx(v * v));
      for (int k = 1; k <= 10; ++k)
        for (int r = 1; r <= k; ++r) CHECK(relative_gap(t(k, r), d.theta(k, r)) <= 1e-12);
      CHECK(d.out_of_domain_star_calls() == 0);
    }
  CHECK_THROWS(upsilon_weight(2, 3, 1.0, 1.0));
  const DecompositionTable<Rational> exact(Rational(1, 2), Rational(3), 8);
  const ThetaTable<Rational> direct(Rational(1, 2), Rational(3), 8);
  for (int k = 1; k <= 8; ++k)
    for (int r = 1; r <= k; ++r) CHECK(exact.theta(k, r) == direct(k, r));
}

TEST_CASE("Lambda, ell and the auxiliary sums") {
  for (double v : kGridV)
    for (double phi1 : kGridPhi) {
      const LambdaTable<double> l(v, phi1, 6);
      CHECK(l(0, 0) == 1.0);
      for (int p = 1; p <= 6; ++p) {
        CHECK(l(p, 0) == 0.0);
        for (int r = 0; r <= p; ++r) CHECK(l(p, r) >= 0.0);
        CHECK(l.ell(2 * p - 1) == 0.0);
        CHECK(l.frak_l(1, p) == doctest::Approx(l.moment(p)).epsilon(1e-15));
        CHECK(relative_gap(l.frak_l(1, p), l.frak_l_convolution(p)) <= 1e-9);
      }
      CHECK(l(1, 1) == doctest::Approx(v * v));
      CHECK(l.ell(2) == doctest::Approx(v * v));
      CHECK(l.ell(0) == 1.0);
      for (int i = 1; i <= 4; ++i) CHECK(l.frak_l(i, 0) == 1.0);
    }
  CHECK(adjacency_moment_ell(3, 1.3, 2.0) == 0.0);
  CHECK_THROWS(lambda_adj(1, 2, 1.0, 1.0));
  CHECK(frak_L(1, 3, 0.8, 2.0) == doctest::Approx(LambdaTable<double>(0.8, 2.0, 3).moment(3)));
}

TEST_CASE("semicircle limits") {
  for (double v : {0.5, 1.0, 2.0, 1.7}) {
    const auto mu = mu_sequence<double>(v, 12);
    CHECK(mu[0] == 1.0);
    CHECK(mu[1] == doctest::Approx(v * v));
    CHECK(mu[2] == doctest::Approx(std::pow(v, 4) + v * v));
    for (int k = 0; k <= 12; ++k) CHECK(relative_gap(mu[k], shifted_semicircle_moment(k, v)) <= 1e-13);

    const auto theta_lim = theta_limit_table<double>(v, 12);
    CHECK(theta_lim[1][1] == doctest::Approx(v * v));
    for (int k = 1; k <= 12; ++k) {
      double sum = 0.0;
      for (int r = 1; r <= k; ++r) sum += theta_lim[k][r];
      CHECK(relative_gap(sum, mu[k]) <= 1e-14);
    }

    for (int p = 0; p <= 8; ++p) CHECK(relative_gap(catalan_moment<double>(p, v), std::pow(v, 2 * p) * catalan(p)) <= 1e-14);
    const auto cat = catalan_sequence<double>(v, 8);
    for (int p = 1; p <= 8; ++p) {
      double conv = 0.0;
      for (int j = 0; j < p; ++j) conv += cat[p - 1 - j] * cat[j];
      CHECK(relative_gap(cat[p], v * v * conv) <= 1e-14);
    }
  }
  CHECK(catalan_moment<double>(0, 3.0) == 1.0);
  CHECK(catalan_moment<double>(2, 1.5) == doctest::Approx(2 * std::pow(1.5, 4)));
  CHECK(catalan_moment<double>(3, 1.5) == doctest::Approx(5 * std::pow(1.5, 6)));
}

TEST_CASE("large phi1 limits are approached monotonically") {
  for (double v : kGridV) {
    const auto mu = mu_sequence<double>(v, 10);
    const auto theta_lim = theta_limit_table<double>(v, 10);
    const auto cat = catalan_sequence<double>(v, 6);
    std::vector<double> previous_m(11, INFINITY), previous_l(7, INFINITY);
    for (double phi1 : {1e2, 1e4, 1e6, 1e8}) {
      const ThetaTable<double> t(v, phi1, 10);
      const LambdaTable<double> l(v, phi1, 6);
      for (int k = 1; k <= 10; ++k) {
        const double gap = std::abs(t.moment(k) - mu[k]);
        CHECK(gap <= previous_m[k]);
        previous_m[k] = gap;
        if (phi1 == 1e8) {
          CHECK(relative_gap(t.moment(k), mu[k]) <= 1e-6);
          for (int r = 1; r <= k; ++r) CHECK(relative_gap(t(k, r), theta_lim[k][r]) <= 1e-6);
        }
      }
      for (int p = 1; p <= 6; ++p) {
        const double gap = std::abs(l.moment(p) - cat[p]);
        CHECK(gap <= previous_l[p]);
        previous_l[p] = gap;
        if (phi1 == 1e8) CHECK(relative_gap(l.ell(2 * p), cat[p]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("positivity for negative v") {
  const ThetaTable<double> t(-1.3, 0.8, 8);
  const LambdaTable<double> l(-1.3, 0.8, 6);
  for (int k = 0; k <= 8; ++k)
    for (int r = 0; r <= k; ++r) CHECK(t(k, r) >= 0.0);
  for (int p = 0; p <= 6; ++p) CHECK(l.moment(p) >= 0.0);
  for (double m : mu_sequence<double>(-1.3, 8)) CHECK(m >= 0.0);
}

TEST_CASE("growth bounds") {
  CHECK(check_bound_lambda(8, 1.0, 1.0, 1.0).passed);
  CHECK_THROWS_WITH_AS(check_bound_lambda(8, 0.5, 1.0, 1.0), doctest::Contains("C inadmissible"), std::invalid_argument);
  {
    const auto [first, second] = theta_bound_admissibility(3.0, 1.0, 2.0);
    CHECK(first <= 1.0);
    CHECK(second <= 1.0);
    CHECK(check_bound_theta(8, 3.0, 1.0, 2.0).passed);
  }
  CHECK_THROWS_WITH(check_bound_theta(8, 1.0, 1.0, 1.0), doctest::Contains("C inadmissible"));

  const double c11 = smallest_admissible_theta_C(1.0, 1.0);
  CHECK(check_bound_theta(8, c11, 1.0, 1.0).passed);
  CHECK_THROWS(check_bound_theta(8, c11 * (1 - 1e-9), 1.0, 1.0));

  for (double v : {0.25, 0.5, 1.0, 2.0, 4.0})
    for (double phi1 : kGridPhi) {
      CAPTURE(v);
      CAPTURE(phi1);
      const auto lambda = check_bound_lambda(8, std::max(1.0, 1.0 / phi1), v, phi1);
      CHECK(lambda.passed);
      CHECK(lambda.rows.front().value <= lambda.rows.front().bound);
      const auto theta_report = check_bound_theta(8, smallest_admissible_theta_C(v, phi1), v, phi1);
      CHECK(theta_report.passed);
      CHECK(theta_report.moment_rows.size() == 8);
      CHECK(theta_report.tightest_ratio <= 1.0);
    }
}

TEST_CASE("moment_table") {
  const MomentTable table = moment_table(1.0, 2.0, 6);
  CHECK(table.m.size() == 7);
  CHECK(table.m[0] == 1.0);
  CHECK(table.ell[3] == 0.0);
  CHECK(table.mu[2] == doctest::Approx(2.0));
  CHECK(table.theta[2][2] == doctest::Approx(1.5));
}
