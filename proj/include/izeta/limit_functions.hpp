#ifndef IZETA_LIMIT_FUNCTIONS_HPP
#define IZETA_LIMIT_FUNCTIONS_HPP

#include "izeta/moment_theory.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace izeta {

/// Density of the semicircle law centred at v^2 with radius 2|v|.
double semicircle_density(double lambda, double v);

/// Support [v^2 - 2|v|, v^2 + 2|v|].
std::pair<double, double> semicircle_support(double v);

/// Integral of the density over its support by tanh-sinh quadrature.
double semicircle_mass(double v);

/// k-th moment of the shifted semicircle by adaptive Gauss-Kronrod in the
/// angle variable lambda = v^2 + 2|v| sin(theta).
double semicircle_moment(int k, double v);

/// Stieltjes transform: root of v^2 g^2 + (z - v^2) g + 1 = 0 with Im z Im g >= 0;
/// on the real axis outside the support, the limit from the upper half-plane.
std::complex<double> stieltjes_g(std::complex<double> z, double v);

/// Real-axis branch for z outside the support, in any floating type
/// (the decaying root, g ~ -1/z).
template <typename Real>
Real stieltjes_g_real(const Real& z, const Real& v) {
  using std::abs;
  using std::sqrt;
  const Real v2 = v * v;
  const Real x = z - v2;
  if (v2 == 0) throw std::invalid_argument("stieltjes_g: v = 0 is degenerate (point mass at 0)");
  if (abs(x) <= 2 * abs(v)) throw std::domain_error("on-support evaluation requires Im z > 0");
  const Real root = sqrt(x * x - 4 * v2);
  // Written so the small root is never formed by cancellation.
  return x > 0 ? Real(-2) / (x + root) : Real(2) / (root - x);
}

/// -sum_{k <= terms} mu_k / z^{k+1} for real z.
template <typename Real>
Real stieltjes_moment_series(const Real& z, const Real& v, int terms) {
  if (z == 0) throw std::invalid_argument("series needs z != 0");
  const auto moments = mu_sequence<Real>(v, terms);
  Real total(0), power = Real(1) / z;
  for (int k = 0; k <= terms; ++k) {
    total -= moments[k] * power;
    power /= z;
  }
  return total;
}

/// F(v) = v^2/2 - (2/pi) int_{-1}^{1} log(1 + v^2 + 2 v tau) sqrt(1 - tau^2) dtau.
double limit_F(double v);

/// (2/pi) int_{-pi/2}^{pi/2} log(1 + v^2 + 2|v| sin(theta)) cos^2(theta) dtheta.
double upsilon_integral(double v);

/// int log(1 + lambda) against the semicircle density, integrated in lambda directly.
double upsilon_by_density(double v);

/// n-point Gauss rule of a measure given by its moments m_0..m_{2n-1}
/// (Chebyshev algorithm + Golub-Welsch).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_rule_from_moments(std::span<const double> moments, int points);

/// sum_i w_i log(1 - v^2/phi1 + x_i) for the Gauss rule built from the limiting
/// moments m_k(v, phi1); NaN when some argument is nonpositive.
double psi_moment_bridge(double v, double phi1, int points);

}  // namespace izeta

#endif  // IZETA_LIMIT_FUNCTIONS_HPP
