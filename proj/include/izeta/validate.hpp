#ifndef IZETA_VALIDATE_HPP
#define IZETA_VALIDATE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace izeta {

/// Deliberate faults used to confirm that the checks can fail.
struct FaultInjection {
  bool star_minus_one_zero = false;  // star_binomial(-1, 0) returns 0 instead of 1
  bool drop_tailless = false;        // closed-path counts admit tails
};

/// Parses "star" / "tailless" (comma separated); throws on anything else.
FaultInjection parse_faults(const std::string& text);

struct CheckResult {
  std::string name;
  std::string relation;  // what is compared, in words
  bool passed = false;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  std::string detail;  // first failing case, if any
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::vector<std::string> failed_names() const;
};

struct ValidationOptions {
  FaultInjection faults;
  int oracle_k_max = 6;
  unsigned threads = 1;
};

/// Runs every cross-module identity on small fixed grids.
ValidationReport run_validation(const ValidationOptions& options = {});

void write_report_json(std::ostream& out, const ValidationReport& report);

}  // namespace izeta

#endif  // IZETA_VALIDATE_HPP
