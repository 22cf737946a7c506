#include "izeta/experiment.hpp"
#include "izeta/format.hpp"
#include "izeta/validate.hpp"

#include <doctest.h>

#include <sstream>

using namespace izeta;

TEST_CASE("config text round trip") {
  ExperimentConfig config;
  config.n = 321;
  config.R = 7.25;
  config.family = ProfileFamily::Lorentzian;
  config.a = 0.1 + 0.2;  // not exactly representable in short decimal
  config.v = -1.0 / 3.0;
  config.seed = 18446744073709551615ull;
  config.trials = 17;
  config.k_max = 9;
  config.gamma = 0.45;
  config.r_scale = 0.9;
  config.sizes = {101, 201};
  config.u = 0.25;
  config.out = "results/run.csv";
  config.format = "json";
  config.threads = 4;
  CHECK(ExperimentConfig::from_text(config.to_text()) == config);
  CHECK(ExperimentConfig::from_text(ExperimentConfig{}.to_text()) == ExperimentConfig{});
}

TEST_CASE("config parsing and validation") {
  const auto values = parse_key_values("# comment\n n = 12 \n\nprofile = exp # trailing\n");
  CHECK(values.at("n") == "12");
  CHECK(values.at("profile") == "exp");
  CHECK_THROWS(parse_key_values("n 12\n"));

  ExperimentConfig config;
  CHECK_THROWS(config.apply({{"bogus", "1"}}));
  CHECK_THROWS(config.apply({{"n", "twelve"}}));
  config.apply({{"n", "12"}, {"a", "0.25"}});
  CHECK(config.n == 12);
  CHECK(config.a == 0.25);
  CHECK_NOTHROW(config.validate());

  for (auto broken : {std::pair<std::string, std::string>{"n", "0"},
                      {"R", "0.5"},
                      {"a", "1"},
                      {"a", "0"},
                      {"trials", "0"},
                      {"format", "xml"},
                      {"sizes", "100"}}) {
    ExperimentConfig c;
    c.apply({broken});
    CAPTURE(broken.first);
    CHECK_THROWS(c.validate());
  }
}

TEST_CASE("sweep radius") {
  CHECK(sweep_radius(2001, 0.5, 0.9) == std::ceil(0.9 * std::sqrt(2001.0)));
  CHECK(sweep_radius(4001, 0.5, 1.0) == 64.0);
  CHECK_THROWS_WITH(sweep_radius(101, 1.0, 1.0), doctest::Contains("violates R = o(N)"));
  CHECK_THROWS(sweep_radius(101, 0.0, 1.0));
}

TEST_CASE("trials are deterministic and independent of the thread count") {
  ExperimentConfig config;
  config.n = 40;
  config.R = 4.0;
  config.trials = 5;
  config.seed = 77;
  const auto serial = run_trials(config);
  config.threads = 3;
  const auto parallel = run_trials(config);
  REQUIRE(serial.size() == 5);
  for (std::size_t t = 0; t < serial.size(); ++t) {
    CHECK(serial[t].seed == 77 + t);
    CHECK(serial[t].spectrum.eigenvalues == parallel[t].spectrum.eigenvalues);
    CHECK(serial[t].upsilon == parallel[t].upsilon);
  }
}

TEST_CASE("converge sweep") {
  ExperimentConfig config;
  config.sizes = {51, 101};
  config.trials = 6;
  config.k_max = 3;
  config.v = 1.0;
  const auto rows = converge_sweep(config);
  CHECK(rows.size() == 8);
  for (const auto& row : rows) {
    if (row.k == 0) {
      CHECK(row.gap == 0.0);
      CHECK(row.std_error == 0.0);
    }
    CHECK(row.R == sweep_radius(row.N, 0.5, 1.0));
  }
  config.gamma = 1.0;
  CHECK_THROWS(converge_sweep(config));

  std::vector<ConvergeRow> falling{{101, 1, 2, 0, 0.01, 0, 0.3}, {201, 1, 2, 0, 0.01, 0, 0.2}, {401, 1, 2, 0, 0.01, 0, 0.1}};
  CHECK(gap_trend_decreasing(falling, 2));
  falling[2].gap = 0.5;
  CHECK_FALSE(gap_trend_decreasing(falling, 2));
}

TEST_CASE("tables format with 15 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(2.0) == "2");
  Table table;
  table.columns = {"k", "value", "label"};
  table.add_row({1LL, 0.5, std::string("a")});
  CHECK_THROWS(table.add_row({1LL}));
  std::ostringstream csv, json;
  write_csv(csv, table);
  write_json(json, table);
  CHECK(csv.str() == "k,value,label\n1,0.5,a\n");
  CHECK(json.str() == "[\n {\"k\": 1, \"value\": 0.5, \"label\": \"a\"}\n]\n");
}

TEST_CASE("validation report and injected faults") {
  const ValidationReport clean = run_validation();
  CHECK(clean.passed());
  for (const auto& check : clean.checks) {
    CAPTURE(check.name);
    CHECK(check.passed);
  }

  ValidationOptions star;
  star.faults = parse_faults("star");
  const auto broken = run_validation(star);
  CHECK_FALSE(broken.passed());
  const auto names = broken.failed_names();
  CHECK(std::find(names.begin(), names.end(), "walk_oracle_vs_theta_recurrence") != names.end());

  ValidationOptions tailless;
  tailless.faults = parse_faults("tailless");
  const auto loose = run_validation(tailless);
  CHECK(loose.failed_names() == std::vector<std::string>{"zeta_series_vs_determinant"});

  CHECK_THROWS(parse_faults("gamma"));
  std::ostringstream json;
  write_report_json(json, clean);
  CHECK(json.str().find("\"passed\": true") != std::string::npos);
}
