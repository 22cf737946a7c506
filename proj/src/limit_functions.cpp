#include "izeta/limit_functions.hpp"

#include "izeta/moment_theory.hpp"

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace izeta {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

void require_nonzero(double v, const char* what) {
  if (v == 0.0) throw std::invalid_argument(std::string(what) + ": v = 0 is degenerate (point mass at 0)");
}

// Adaptive 61-point Gauss-Kronrod on [-pi/2, pi/2]; throws past the depth cap.
template <typename F>
double angle_quadrature(F f, double tolerance) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -pi / 2, pi / 2, 15, 1e-13, &error);
  if (!(error <= tolerance)) throw std::runtime_error("quadrature did not converge within the depth cap");
  return value;
}

}  // namespace

std::pair<double, double> semicircle_support(double v) {
  const double radius = 2.0 * std::abs(v);
  return {v * v - radius, v * v + radius};
}

double semicircle_density(double lambda, double v) {
  require_nonzero(v, "semicircle_density");
  const double x = lambda - v * v;
  const double inside = 4.0 * v * v - x * x;
  if (inside <= 0.0) return 0.0;
  return std::sqrt(inside) / (2.0 * pi * v * v);
}

double semicircle_mass(double v) {
  require_nonzero(v, "semicircle_mass");
  const auto [lo, hi] = semicircle_support(v);
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate([v](double lambda) { return semicircle_density(lambda, v); }, lo, hi);
}

double semicircle_moment(int k, double v) {
  if (k < 0) throw std::invalid_argument("moment order must be >= 0");
  require_nonzero(v, "semicircle_moment");
  if (k == 0) return 1.0;
  const double v2 = v * v, radius = 2.0 * std::abs(v);
  auto f = [&](double theta) {
    const double c = std::cos(theta);
    return (2.0 / pi) * c * c * std::pow(v2 + radius * std::sin(theta), k);
  };
  const double scale = std::pow(v2 + radius, k);
  return angle_quadrature(f, 1e-10 * scale);
}

std::complex<double> stieltjes_g(std::complex<double> z, double v) {
  require_nonzero(v, "stieltjes_g");
  const double v2 = v * v;
  const std::complex<double> b = z - v2;
  if (z.imag() == 0.0) {
    return {stieltjes_g_real(z.real(), v), 0.0};
  }
  const std::complex<double> disc = std::sqrt(b * b - 4.0 * v2);
  const std::complex<double> g1 = (-b + disc) / (2.0 * v2);
  const std::complex<double> g2 = (-b - disc) / (2.0 * v2);
  const bool upper = z.imag() > 0.0;
  const bool first = upper ? g1.imag() >= g2.imag() : g1.imag() <= g2.imag();
  return first ? g1 : g2;
}

double limit_F(double v) {
  if (v == 0.0) return 0.0;
  // Gauss-Chebyshev of the second kind integrates sqrt(1 - tau^2) exactly.
  auto rule = [v](long points) {
    double total = 0.0;
    const double step = pi / static_cast<double>(points + 1);
    for (long i = 1; i <= points; ++i) {
      const double angle = step * static_cast<double>(i);
      const double s = std::sin(angle);
      total += step * s * s * std::log(1.0 + v * v + 2.0 * v * std::cos(angle));
    }
    return (2.0 / pi) * total;
  };
  constexpr long cap = 1L << 24;
  long points = 16;
  double previous = rule(points);
  while (points < cap) {
    points *= 2;
    const double current = rule(points);
    if (std::abs(current - previous) <= 1e-10 * std::max(1.0, std::abs(current))) return v * v / 2.0 - current;
    previous = current;
  }
  throw std::runtime_error("limit_F: Gauss-Chebyshev quadrature not stable to 1e-10 within the node cap");
}

double upsilon_integral(double v) {
  require_nonzero(v, "upsilon_integral");
  const double v2 = v * v, radius = 2.0 * std::abs(v);
  auto f = [&](double theta) {
    const double c = std::cos(theta);
    const double shift = v2 + radius * std::sin(theta);
    if (shift <= -1.0) return 0.0;  // only at theta = -pi/2 when |v| = 1, where cos^2 kills it
    return (2.0 / pi) * c * c * std::log1p(shift);
  };
  return angle_quadrature(f, 1e-10 * std::max(v2, std::log1p(v2 + radius)));
}

double upsilon_by_density(double v) {
  require_nonzero(v, "upsilon_by_density");
  const auto [lo, hi] = semicircle_support(v);
  boost::math::quadrature::tanh_sinh<double> rule;
  double error = 0.0;
  const double value = rule.integrate(
      [v](double lambda) {
        const double density = semicircle_density(lambda, v);
        return density == 0.0 ? 0.0 : std::log1p(lambda) * density;
      },
      lo, hi, std::sqrt(std::numeric_limits<double>::epsilon()), &error);
  return value;
}

GaussRule gauss_rule_from_moments(std::span<const double> moments, int points) {
  if (points < 1) throw std::invalid_argument("Gauss rule needs at least one node");
  if (moments.size() < static_cast<std::size_t>(2 * points)) throw std::invalid_argument("need 2n moments for n nodes");
  if (!(moments[0] > 0.0)) throw std::domain_error("zeroth moment must be positive");
  const int width = 2 * points;
  std::vector<double> alpha(points), beta(points);
  std::vector<double> older(width, 0.0), old(moments.begin(), moments.begin() + width);
  alpha[0] = moments[1] / moments[0];
  beta[0] = moments[0];
  for (int k = 1; k < points; ++k) {
    std::vector<double> sigma(width, 0.0);
    for (int l = k; l < width - k; ++l)
      sigma[l] = old[l + 1] - alpha[k - 1] * old[l] - beta[k - 1] * older[l];
    if (!(sigma[k] > 0.0)) throw std::domain_error("moment sequence not positive definite at this order");
    alpha[k] = sigma[k + 1] / sigma[k] - old[k] / old[k - 1];
    beta[k] = sigma[k] / old[k - 1];
    older = std::move(old);
    old = std::move(sigma);
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
  for (int i = 0; i < points; ++i) {
    jacobi(i, i) = alpha[i];
    if (i + 1 < points) jacobi(i, i + 1) = jacobi(i + 1, i) = std::sqrt(beta[i + 1]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussRule rule;
  for (int i = 0; i < points; ++i) {
    rule.nodes.push_back(solver.eigenvalues()(i));
    const double first = solver.eigenvectors()(0, i);
    rule.weights.push_back(beta[0] * first * first);
  }
  return rule;
}

double psi_moment_bridge(double v, double phi1, int points) {
  const ThetaTable<double> table(v, phi1, 2 * points - 1);
  std::vector<double> moments;
  for (int k = 0; k < 2 * points; ++k) moments.push_back(table.moment(k));
  const GaussRule rule = gauss_rule_from_moments(moments, points);
  double total = 0.0;
  for (int i = 0; i < points; ++i) {
    const double argument = 1.0 - v * v / phi1 + rule.nodes[i];
    if (argument <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    total += rule.weights[i] * std::log(argument);
  }
  return total;
}

}  // namespace izeta
