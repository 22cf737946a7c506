#include "izeta/moment_theory.hpp"

#include <algorithm>
#include <sstream>

namespace izeta {

long long star_binomial(int a, int b) {
  if (a < -1) throw std::invalid_argument("star_binomial: upper index below -1");
  if (b < 0) throw std::invalid_argument("star_binomial: negative lower index");
  if (b == 0) return 1;
  if (a < b) return 0;
  long long result = 1;
  for (int i = 1; i <= b; ++i) result = result * (a - b + i) / i;
  return result;
}

bool star_binomial_in_domain(int a, int b) { return b == 0 || a >= b || a == b - 1; }

double theta(int k, int r, double v, double phi1) {
  if (r > k) throw std::invalid_argument("theta needs r <= k");
  if (r < 0) throw std::invalid_argument("theta needs r >= 0");
  return ThetaTable<double>(v, phi1, k)(k, r);
}

double limit_moment_m(int k, double v, double phi1) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return ThetaTable<double>(v, phi1, k).moment(k);
}

double upsilon_weight(int ks, int g, double v, double phi1) {
  if (g > ks) throw std::invalid_argument("upsilon needs g <= ks");
  return DecompositionTable<double>(v, phi1, ks).upsilon(ks, g);
}

double lambda_adj(int p, int r, double v, double phi1) {
  if (r > p) throw std::invalid_argument("lambda needs r <= p");
  if (r < 0) throw std::invalid_argument("lambda needs r >= 0");
  return LambdaTable<double>(v, phi1, p)(p, r);
}

double adjacency_moment_ell(int k, double v, double phi1) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return LambdaTable<double>(v, phi1, k / 2).ell(k);
}

double mu(int k, double v) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return mu_sequence<double>(v, k)[k];
}

double theta_limit(int k, int r, double v) {
  if (r < 0 || r > k) throw std::invalid_argument("theta_limit needs 0 <= r <= k");
  return theta_limit_table<double>(v, k)[k][r];
}

double frak_L(int i, int p, double v, double phi1) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  return LambdaTable<double>(v, phi1, p).frak_l(i, p);
}

MomentTable moment_table(double v, double phi1, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const ThetaTable<double> theta_table(v, phi1, k_max);
  const LambdaTable<double> lambda_table(v, phi1, k_max / 2);
  MomentTable table;
  table.v = v;
  table.phi1 = phi1;
  table.mu = mu_sequence<double>(v, k_max);
  table.theta = theta_table.triangle();
  for (int k = 0; k <= k_max; ++k) {
    table.m.push_back(theta_table.moment(k));
    table.ell.push_back(lambda_table.ell(k));
  }
  return table;
}

// ---------------------------------------------------------------------------

std::pair<double, double> theta_bound_admissibility(double C, double v, double phi1) {
  const double shared = 1.0 + 1.0 / (C * v * v);
  return {shared * std::exp(1.0 / (C * phi1)) / C, shared / (C * phi1)};
}

double smallest_admissible_theta_C(double v, double phi1) {
  if (v == 0.0 || !(phi1 > 0.0)) throw std::invalid_argument("bisection needs v != 0 and phi1 > 0");
  auto admissible = [&](double C) {
    auto [first, second] = theta_bound_admissibility(C, v, phi1);
    return first <= 1.0 && second <= 1.0;
  };
  // Both expressions decrease in C, so the admissible set is [C*, inf).
  double hi = 1.0;
  while (!admissible(hi)) hi *= 2.0;
  double lo = hi / 2.0;
  while (admissible(lo) && lo > 1e-300) lo /= 2.0;
  for (int iteration = 0; iteration < 200 && hi - lo > 1e-15 * hi; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? hi : lo) = mid;
  }
  return hi;
}

namespace {

void finish(BoundReport& report) {
  report.passed = true;
  report.tightest_ratio = 0.0;
  for (const auto* rows : {&report.rows, &report.moment_rows}) {
    for (const auto& row : *rows) {
      report.tightest_ratio = std::max(report.tightest_ratio, row.ratio);
      if (!(row.value <= row.bound)) report.passed = false;
    }
  }
}

}  // namespace

BoundReport check_bound_lambda(int p_max, double C, double v, double phi1) {
  if (!(C >= 1.0 && C * phi1 >= 1.0)) {
    std::ostringstream out;
    out << "C inadmissible: need C >= 1 and C*phi1 >= 1 (C = " << C << ", C*phi1 = " << C * phi1 << ")";
    throw std::invalid_argument(out.str());
  }
  const LambdaTable<double> table(v, phi1, p_max);
  BoundReport report;
  report.name = "lambda_growth_bound";
  report.C = C;
  report.v = v;
  report.phi1 = phi1;
  for (int p = 1; p <= p_max; ++p) {
    double largest = 0.0;
    for (int r = 1; r <= p; ++r) largest = std::max(largest, table(p, r));
    const double bound = std::pow(C * v * v, p) * std::pow(static_cast<double>(p), 2 * p);
    report.rows.push_back({p, largest, bound, largest / bound});
  }
  finish(report);
  return report;
}

BoundReport check_bound_theta(int k_max, double C, double v, double phi1) {
  auto [first, second] = theta_bound_admissibility(C, v, phi1);
  if (!(C > 0.0 && first <= 1.0 && second <= 1.0)) {
    std::ostringstream out;
    out.precision(15);
    out << "C inadmissible: admissibility expressions " << first << " and " << second << " must both be <= 1";
    throw std::invalid_argument(out.str());
  }
  const ThetaTable<double> table(v, phi1, k_max);
  BoundReport report;
  report.name = "theta_growth_bound";
  report.C = C;
  report.v = v;
  report.phi1 = phi1;
  for (int k = 1; k <= k_max; ++k) {
    double largest = 0.0;
    for (int r = 1; r <= k; ++r) largest = std::max(largest, table(k, r));
    const double kd = static_cast<double>(k);
    const double bound = std::pow(C * v * v * kd, k);
    report.rows.push_back({k, largest, bound, largest / bound});
    const double moment = table.moment(k);
    const double moment_bound = std::pow(C * v * v, k) * std::pow(kd, k + 1);
    report.moment_rows.push_back({k, moment, moment_bound, moment / moment_bound});
  }
  finish(report);
  return report;
}

}  // namespace izeta
