#include "izeta/validate.hpp"

#include "izeta/format.hpp"
#include "izeta/limit_functions.hpp"
#include "izeta/moment_theory.hpp"
#include "izeta/percolation_graph.hpp"
#include "izeta/spectra.hpp"
#include "izeta/walk_oracle.hpp"
#include "izeta/zeta_exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace izeta {

namespace {

const std::vector<double> kV{0.5, 1.0, 2.0};
const std::vector<double> kPhi{0.5, 1.0, 2.0, 10.0};

long long faulty_star(int a, int b) {
  if (a == -1 && b == 0) return 0;
  return star_binomial(a, b);
}

// Tracks the worst discrepancy of one check and the first case that broke it.
class Check {
 public:
  Check(std::string name, std::string relation, double tolerance) {
    result_.name = std::move(name);
    result_.relation = std::move(relation);
    result_.tolerance = tolerance;
    result_.passed = true;
  }

  void compare(double gap, const std::string& where) {
    if (!(gap <= result_.discrepancy) || std::isnan(gap)) result_.discrepancy = std::isnan(gap) ? INFINITY : gap;
    if (!(gap <= result_.tolerance)) fail(where + ": discrepancy " + format_number(gap));
  }

  void require(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }

  CheckResult finish() { return result_; }

  // Runs body; an exception counts as a failure of this check.
  static CheckResult run(Check check, const std::function<void(Check&)>& body) {
    try {
      body(check);
    } catch (const std::exception& e) {
      check.fail(std::string("exception: ") + e.what());
    }
    return check.finish();
  }

 private:
  void fail(const std::string& what) {
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }
  CheckResult result_;
};

std::string at(double v, double phi1) {
  return "v=" + format_number(v) + " phi1=" + format_number(phi1);
}

}  // namespace

FaultInjection parse_faults(const std::string& text) {
  FaultInjection faults;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "star") faults.star_minus_one_zero = true;
    else if (item == "tailless") faults.drop_tailless = true;
    else if (!item.empty()) throw std::invalid_argument("unknown fault '" + item + "' (expected star or tailless)");
  }
  return faults;
}

bool ValidationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> ValidationReport::failed_names() const {
  std::vector<std::string> names;
  for (const auto& c : checks)
    if (!c.passed) names.push_back(c.name);
  return names;
}

ValidationReport run_validation(const ValidationOptions& options) {
  RecurrenceOptions recurrence;
  if (options.faults.star_minus_one_zero) recurrence.star = &faulty_star;
  ClosedPathRules rules;
  rules.tailless = !options.faults.drop_tailless;

  ValidationReport report;
  auto add = [&](Check check, const std::function<void(Check&)>& body) {
    report.checks.push_back(Check::run(std::move(check), body));
  };

  add(Check("walk_oracle_vs_theta_recurrence", "tree-type walk sums equal the closed Theta recurrence", 1e-9),
      [&](Check& check) {
        const WalkCensus census(options.oracle_k_max, {}, options.threads);
        check.require(census.step_accounting_consistent(), "walk census step accounting");
        for (double v : kV)
          for (double phi1 : kPhi) {
            const ThetaTable<double> table(v, phi1, options.oracle_k_max, recurrence);
            for (int k = 1; k <= options.oracle_k_max; ++k)
              for (int r = 1; r <= k; ++r)
                check.compare(relative_gap(census.theta(k, r, v, phi1), table(k, r)),
                              at(v, phi1) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
          }
      });

  add(Check("walk_oracle_vs_theta_exact", "the same comparison in exact rationals", 0.0), [&](Check& check) {
    const WalkCensus census(options.oracle_k_max, {}, options.threads);
    for (const auto& [v, phi1] : {std::pair{Rational(1, 2), Rational(2)}, std::pair{Rational(3, 2), Rational(1, 3)}}) {
      const ThetaTable<Rational> table(v, phi1, options.oracle_k_max, recurrence);
      for (int k = 1; k <= options.oracle_k_max; ++k)
        for (int r = 1; r <= k; ++r)
          check.require(census.theta(k, r, v, phi1) == table(k, r),
                        "v=" + v.str() + " phi1=" + phi1.str() + " k=" + std::to_string(k) + " r=" + std::to_string(r));
    }
  });

  add(Check("star_binomial_domain", "recurrences only evaluate the defined generalized-binomial cases", 0.0),
      [&](Check& check) {
        const ThetaTable<double> direct(1.0, 2.0, 12, recurrence);
        const DecompositionTable<double> split(1.0, 2.0, 12, recurrence);
        check.compare(static_cast<double>(direct.out_of_domain_star_calls()), "Theta recurrence");
        check.compare(static_cast<double>(split.out_of_domain_star_calls()), "Upsilon decomposition");
      });

  add(Check("theta_recurrence_vs_decomposition", "closed Theta recurrence equals the Upsilon decomposition", 1e-12),
      [&](Check& check) {
        for (double v : kV)
          for (double phi1 : kPhi) {
            const ThetaTable<double> direct(v, phi1, 10, recurrence);
            const DecompositionTable<double> split(v, phi1, 10);
            for (int k = 1; k <= 10; ++k)
              for (int r = 1; r <= k; ++r)
                check.compare(relative_gap(direct(k, r), split.theta(k, r)),
                              at(v, phi1) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
          }
      });

  add(Check("moments_large_phi1_vs_semicircle", "m_k at phi1 = 1e8 approaches mu_k", 1e-6), [&](Check& check) {
    for (double v : kV) {
      const ThetaTable<double> table(v, 1e8, 10, recurrence);
      const auto mu = mu_sequence<double>(v, 10);
      for (int k = 1; k <= 10; ++k)
        check.compare(relative_gap(table.moment(k), mu[k]), "v=" + format_number(v) + " k=" + std::to_string(k));
    }
  });

  add(Check("mu_vs_semicircle_quadrature", "mu_k equals quadrature moments of the shifted semicircle", 1e-8),
      [&](Check& check) {
        for (double v : kV) {
          const auto mu = mu_sequence<double>(v, 12);
          for (int k = 0; k <= 12; ++k)
            check.compare(relative_gap(semicircle_moment(k, v), mu[k]),
                          "v=" + format_number(v) + " k=" + std::to_string(k));
        }
      });

  add(Check("adjacency_moments_vs_catalan", "ell_2p at phi1 = 1e8 approaches v^2p Catalan(p), odd orders vanish",
            1e-6),
      [&](Check& check) {
        for (double v : kV) {
          const LambdaTable<double> table(v, 1e8, 6);
          for (int p = 1; p <= 6; ++p) {
            check.compare(relative_gap(table.ell(2 * p), catalan_moment<double>(p, v)),
                          "v=" + format_number(v) + " p=" + std::to_string(p));
            check.require(table.ell(2 * p - 1) == 0.0, "odd moment nonzero at order " + std::to_string(2 * p - 1));
          }
        }
      });

  add(Check("zeta_series_vs_determinant", "exp of the closed-path series times the determinant polynomial is 1", 0.0),
      [&](Check& check) {
        for (const auto& graph : zeta_test_corpus()) {
          const Rational gap = series_consistency(graph.adjacency, 10, rules);
          check.compare(to_double(gap), graph.name);
        }
        const auto c3 = zeta_reciprocal_polynomial(cycle_graph(3)).reciprocal;
        check.require(c3 == IntPolynomial({1, 0, 0, -2, 0, 0, 1}), "C3 reciprocal differs from 1 - 2u^3 + u^6");
      });

  add(Check("frak_l_convolution_identity", "first auxiliary sum equals its convolution form", 1e-9),
      [&](Check& check) {
        for (double v : kV)
          for (double phi1 : kPhi) {
            const LambdaTable<double> table(v, phi1, 6);
            for (int p = 1; p <= 6; ++p)
              check.compare(relative_gap(table.frak_l(1, p), table.frak_l_convolution(p)),
                            at(v, phi1) + " p=" + std::to_string(p));
          }
      });

  add(Check("growth_bounds", "Lambda and Theta stay below their power bounds", 0.0), [&](Check& check) {
    for (double v : kV)
      for (double phi1 : kPhi) {
        const auto lambda = check_bound_lambda(8, std::max(1.0, 1.0 / phi1), v, phi1);
        check.require(lambda.passed, "Lambda bound " + at(v, phi1));
        const auto theta = check_bound_theta(8, smallest_admissible_theta_C(v, phi1), v, phi1);
        check.require(theta.passed, "Theta bound " + at(v, phi1));
      }
  });

  add(Check("limit_F_vs_upsilon", "F(v) = v^2/2 - Upsilon(v)", 1e-8), [&](Check& check) {
    check.require(limit_F(0.0) == 0.0, "F(0) is not exactly 0");
    for (double v : {0.3, 0.7, 0.9})
      check.compare(std::abs(limit_F(v) - (v * v / 2.0 - upsilon_integral(v))), "v=" + format_number(v));
  });

  add(Check("stieltjes_vs_moment_series", "g solves its quadratic and matches the 40-term moment series", 1e-12),
      [&](Check& check) {
        for (double z : {4.0, 6.0, 10.0}) {
          const std::complex<double> g = stieltjes_g(z, 1.0);
          check.compare(std::abs(g * (1.0 - z - g) - 1.0), "quadratic z=" + format_number(z));
          // the tail bound drops below double round-off, so compare at 50 digits
          using Wide = boost::multiprecision::cpp_bin_float_50;
          const Wide zw(z), one(1);
          const Wide tail = pow(Wide(3) / zw, 41) / (zw - 3);
          const Wide gap = abs(stieltjes_g_real(zw, one) - stieltjes_moment_series(zw, one, 40));
          check.require(gap <= tail, "series z=" + format_number(z) + " gap " + format_number(gap.convert_to<double>()));
          check.require(std::abs(g.real() - stieltjes_g_real(zw, one).convert_to<double>()) <= 1e-15,
                        "double branch z=" + format_number(z));
        }
      });

  add(Check("log_zeta_density_vs_exact_zeta", "-(1/N) log Z from the spectrum equals the exact polynomial", 1e-9),
      [&](Check& check) {
        for (const auto& graph : zeta_test_corpus()) {
          const auto exact = zeta_reciprocal_polynomial(graph.adjacency);
          const DegreeVector degrees = degree_vector(graph.adjacency);
          const double N = static_cast<double>(graph.adjacency.rows());
          for (double u : {-0.2, 0.05, 0.1, 0.2}) {
            const double phi1 = 1.0, v = u;
            SpectralSummary s = eigenvalues(build_h<double>(graph.adjacency, degrees, v, phi1));
            s.v = v;
            s.phi1 = phi1;
            const double spectral = neg_log_zeta_density(degrees, s, v, phi1);
            const double direct = std::log(exact.reciprocal.evaluate(u)) / N;
            check.compare(std::abs(spectral - direct), graph.name + " u=" + format_number(u));
          }
        }
      });

  return report;
}

void write_report_json(std::ostream& out, const ValidationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"relation", c.relation},
                      {"passed", c.passed},
                      {"discrepancy", std::isfinite(c.discrepancy) ? nlohmann::json(c.discrepancy) : nlohmann::json()},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  }
  nlohmann::json doc = {{"passed", report.passed()}, {"checks", checks}, {"failed", report.failed_names()}};
  out << doc.dump(2) << "\n";
}

}  // namespace izeta
