#include <doctest.h>

#include <cmath>

#include "gavsa/experiment.hpp"

using namespace gavsa;

namespace {

ExperimentConfig small_recognize() {
  ExperimentConfig config;
  config.kind = ExperimentKind::Recognize;
  config.questions = {"PSmith#name"};
  config.constructions = {Construction::AgentObject};
  config.n_min = 8;
  config.n_max = 10;
  config.n_step = 2;
  config.trials = 64;
  config.seed = 7;
  return config;
}

}  // namespace

TEST_CASE("csv is identical across serial and parallel runs") {
  ExperimentConfig config = small_recognize();
  config.parallel = false;
  const std::string serial = to_csv(run_experiment(config));
  config.parallel = true;
  const std::string parallel = to_csv(run_experiment(config));
  CHECK(serial == parallel);
  CHECK(serial == to_csv(run_experiment(config)));  // rerun, same seed
}

TEST_CASE("csv format and ordering") {
  ExperimentConfig config = small_recognize();
  config.measures = {Measure::Hamming, Measure::InnerOnly};
  config.constructions = {Construction::AgentObjectOdd, Construction::AgentObject};
  const auto rows = run_experiment(config);
  CHECK(rows.size() == 2 * 2 * 2);  // two N, two constructions, two measures
  const std::string csv = to_csv(rows);
  CHECK(csv.rfind("experiment,model,question,construction,mode,measure,N,trials,seed,value\n",
                  0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const CsvRow& r) {
      return std::tuple(r.experiment, r.model, r.question, r.n, r.construction, r.mode,
                        r.measure);
    };
    CHECK(key(rows[i - 1]) <= key(rows[i]));
  }
}

TEST_CASE("recognition saturates at large N") {
  ExperimentConfig config = small_recognize();
  config.n_min = 24;
  config.n_max = 24;
  config.trials = 128;
  const auto rows = run_experiment(config);
  REQUIRE(rows.size() == 1);
  CHECK(rows.front().value == 100.0);
}

TEST_CASE("potential emits the matching formula series") {
  ExperimentConfig config;
  config.kind = ExperimentKind::Potential;
  config.questions = {"(1b)#bite_agt"};
  config.n_min = 20;
  config.n_max = 20;
  config.trials = 200;
  config.seed = 3;
  const auto rows = run_experiment(config);
  REQUIRE(rows.size() == 2);
  const CsvRow& formula = rows.front().model == "formula" ? rows.front() : rows.back();
  const CsvRow& empirical = rows.front().model == "formula" ? rows.back() : rows.front();
  CHECK(formula.model == "formula");
  CHECK(formula.value == doctest::Approx(1.00061).epsilon(1e-4));
  CHECK(empirical.model == "ga");
  CHECK(std::abs(empirical.value - formula.value) < 0.2);
  CHECK(empirical.mode == "reversed");
}

TEST_CASE("cancel emits the asymptote series") {
  ExperimentConfig config;
  config.kind = ExperimentKind::Cancel;
  config.questions = {"(5a)#see_obj"};
  config.n_min = 18;
  config.n_max = 18;
  config.trials = 400;
  config.seed = 5;
  const auto rows = run_experiment(config);
  REQUIRE(rows.size() == 2);
  double asymptote = 0.0, empirical = 0.0;
  for (const CsvRow& row : rows) {
    if (row.model == "asymptote") asymptote = row.value;
    if (row.model == "ga") empirical = row.value;
  }
  CHECK(asymptote == doctest::Approx(0.625));
  CHECK(std::abs(empirical - asymptote) < 0.1);

  // Reversed questions never cancel an odd-blade answer completely.
  config.mode = QuestionMode::AppropriateReversed;
  config.questions = {"(1b)#bite_obj"};
  const auto reversed_rows = run_experiment(config);
  for (const CsvRow& row : reversed_rows) CHECK(row.value == doctest::Approx(1.0));
}

TEST_CASE("compare covers both sizing regimes") {
  ExperimentConfig config;
  config.kind = ExperimentKind::Compare;
  config.questions = {"PSmith#name"};
  config.n_min = 12;
  config.n_max = 12;
  config.trials = 40;
  config.seed = 11;
  const auto rows = run_experiment(config);
  CHECK(rows.size() == 6);  // {equal,kn} x {ga,hrr,bsc}
  int equal_rows = 0, kn_rows = 0;
  double ga_equal = -1.0, ga_kn = -2.0;
  for (const CsvRow& row : rows) {
    if (row.experiment == "compare-equal") ++equal_rows;
    if (row.experiment == "compare-kn") ++kn_rows;
    if (row.model == "ga" && row.experiment == "compare-equal") ga_equal = row.value;
    if (row.model == "ga" && row.experiment == "compare-kn") ga_kn = row.value;
    if (row.model == "ga") CHECK(row.construction == "ao-odd");
    if (row.model != "ga") CHECK(row.construction == "ao");
  }
  CHECK(equal_rows == 3);
  CHECK(kn_rows == 3);
  CHECK(ga_equal == ga_kn);  // GA always runs at N blades
}

TEST_CASE("estimate needs no trials") {
  ExperimentConfig config;
  config.kind = ExperimentKind::Estimate;
  config.questions = {"(4a)#cause_obj"};
  config.n_min = 10;
  config.n_max = 20;
  config.n_step = 10;
  config.trials = 0;
  const auto rows = run_experiment(config);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].value == doctest::Approx(3.56505).epsilon(1e-4));
  CHECK(rows[1].value == doctest::Approx(3.00056).epsilon(1e-4));
}

TEST_CASE("config validation") {
  ExperimentConfig config = small_recognize();
  config.questions = {"nosuch#question"};
  CHECK_THROWS(run_experiment(config));

  config = small_recognize();
  config.n_min = 12;
  config.n_max = 8;
  CHECK_THROWS(run_experiment(config));

  config = small_recognize();
  config.models = {Model::HRR};
  CHECK_THROWS(run_experiment(config));  // baselines only compare

  config = small_recognize();
  config.kind = ExperimentKind::Potential;
  config.questions = {"(5b)#see_obj"};  // no estimator profile
  CHECK_THROWS(run_experiment(config));

  config = small_recognize();
  config.trials = 0;
  CHECK_THROWS(run_experiment(config));
}
