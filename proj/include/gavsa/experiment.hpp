#pragma once

// Monte Carlo experiment runner: recognition curves, potential-answer
// averages, cancellation frequencies, the GA/HRR/BSC comparison, and pure
// estimator dumps. Trials are independent and draw their randomness from
// per-trial substreams, so the parallel (OpenMP) and serial paths produce
// identical CSV output; the serial path is kept as a reference and for
// benchmarking.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gavsa/corpus.hpp"
#include "gavsa/encoding.hpp"

namespace gavsa {

enum class ExperimentKind { Recognize, Potential, Cancel, Compare, Estimate };

enum class Model { GA, HRR, BSC };

std::string_view to_string(ExperimentKind k);
std::string_view to_string(Model m);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Recognize;
  std::vector<std::string> questions;
  std::vector<Construction> constructions;  // empty -> per-kind default
  std::optional<QuestionMode> mode;         // empty -> per-kind default
  std::vector<Measure> measures;            // empty -> per-kind default
  int n_min = 4;
  int n_max = 20;
  int n_step = 1;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::vector<Model> models;      // compare only; empty -> ga,hrr,bsc
  int baseline_multiplier = 0;    // 0 -> corpus max blade count (the K of KN)
  bool parallel = true;
};

struct CsvRow {
  std::string experiment;
  std::string model;
  std::string question;
  std::string construction;
  std::string mode;
  std::string measure;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
};

/// Validates the configuration; throws std::invalid_argument with a
/// diagnostic on bad or inconsistent settings.
void validate_config(const ExperimentConfig& config);

/// Runs the configured experiment and returns rows sorted by
/// (experiment, model, question, N, construction, mode, measure).
std::vector<CsvRow> run_experiment(const ExperimentConfig& config);

/// Header plus one line per row, 4 decimal places for values.
std::string to_csv(const std::vector<CsvRow>& rows);

/// The N values of a config's sweep.
std::vector<int> n_values(const ExperimentConfig& config);

}  // namespace gavsa
