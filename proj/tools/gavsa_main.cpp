// Benchmark CLI. Subcommands mirror the experiment kinds; CSV goes to
// stdout or --out, logging to stderr. A flat key=value config file can seed
// any flag; command-line flags (and the GAVSA_SEED environment variable)
// take precedence over file values.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gavsa/experiment.hpp"

namespace {

using gavsa::Construction;
using gavsa::ExperimentConfig;
using gavsa::ExperimentKind;
using gavsa::Measure;
using gavsa::Model;
using gavsa::QuestionMode;

struct CliOptions {
  ExperimentConfig config;
  std::string out_path;
  std::string config_path;
  std::vector<std::string> constructions;
  std::string mode;
  std::vector<std::string> measures;
  std::vector<std::string> models;
  int threads = 0;
  bool serial = false;
};

Construction parse_construction(const std::string& text) {
  if (text == "plate") return Construction::Plate;
  if (text == "ao") return Construction::AgentObject;
  if (text == "ao-odd") return Construction::AgentObjectOdd;
  throw std::invalid_argument("construction: expected plate, ao or ao-odd, got " + text);
}

Measure parse_measure(const std::string& text) {
  if (text == "inner") return Measure::InnerOnly;
  if (text == "hamming") return Measure::Hamming;
  if (text == "euclid") return Measure::Euclidean;
  throw std::invalid_argument("measure: expected inner, hamming or euclid, got " + text);
}

Model parse_model(const std::string& text) {
  if (text == "ga") return Model::GA;
  if (text == "hrr") return Model::HRR;
  if (text == "bsc") return Model::BSC;
  throw std::invalid_argument("models: expected ga, hrr or bsc, got " + text);
}

void add_common_options(CLI::App* cmd, CliOptions& options) {
  cmd->add_option("--question", options.config.questions,
                  "Question id, repeatable (e.g. \"PSmith#name\")")
      ->delimiter(',');
  cmd->add_option("--n-min", options.config.n_min, "Smallest N of the sweep");
  cmd->add_option("--n-max", options.config.n_max, "Largest N of the sweep");
  cmd->add_option("--n-step", options.config.n_step, "N increment");
  cmd->add_option("--trials", options.config.trials, "Monte Carlo trials per N");
  cmd->add_option("--seed", options.config.seed, "Master seed")->envname("GAVSA_SEED");
  cmd->add_option("--construction", options.constructions,
                  "Sentence construction: plate, ao, ao-odd (repeatable for recognize)")
      ->delimiter(',');
  cmd->add_option("--mode", options.mode, "Question mode: rhs or reversed");
  cmd->add_option("--measure", options.measures,
                  "Similarity measure: inner, hamming, euclid (repeatable for recognize)")
      ->delimiter(',');
  cmd->add_option("--models", options.models, "Models for compare: ga, hrr, bsc")
      ->delimiter(',');
  cmd->add_option("--baseline-multiplier", options.config.baseline_multiplier,
                  "K in the KN sizing regime (0 = corpus maximum blade count)");
  cmd->add_option("--out", options.out_path, "Write CSV here instead of stdout");
  cmd->add_option("--threads", options.threads, "OpenMP thread count (0 = runtime default)");
  cmd->add_flag("--serial", options.serial, "Run trials on the serial reference path");
  cmd->add_option("--config", options.config_path,
                  "Flat key=value file (keys match long flags); flags take precedence");
}

// Flat key=value file: blank lines and lines starting with '#' are skipped;
// repeated keys extend list-valued settings. Values are applied only for
// flags absent from the command line.
std::map<std::string, std::vector<std::string>> load_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  std::map<std::string, std::vector<std::string>> values;
  std::string line;
  int line_number = 0;
  auto trim = [](std::string text) {
    const char* ws = " \t\r";
    const auto begin = text.find_first_not_of(ws);
    if (begin == std::string::npos) return std::string();
    const auto end = text.find_last_not_of(ws);
    return text.substr(begin, end - begin + 1);
  };
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_number) +
                                  " is not key=value");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    std::string value = trim(trimmed.substr(eq + 1));
    std::stringstream parts(value);
    std::string part;
    while (std::getline(parts, part, ',')) {
      part = trim(part);
      if (!part.empty()) values[key].push_back(part);
    }
  }
  return values;
}

void apply_config_file(const CLI::App* cmd, CliOptions& options) {
  const auto values = load_flat_config(options.config_path);
  auto absent = [&](const char* flag) { return cmd->count(flag) == 0; };
  auto single = [&](const std::string& key) -> const std::string& {
    const auto& list = values.at(key);
    if (list.size() != 1) {
      throw std::invalid_argument("config: key " + key + " expects a single value");
    }
    return list.front();
  };
  for (const auto& [key, list] : values) {
    if (key == "question") {
      if (absent("--question")) options.config.questions = list;
    } else if (key == "n-min") {
      if (absent("--n-min")) options.config.n_min = std::stoi(single(key));
    } else if (key == "n-max") {
      if (absent("--n-max")) options.config.n_max = std::stoi(single(key));
    } else if (key == "n-step") {
      if (absent("--n-step")) options.config.n_step = std::stoi(single(key));
    } else if (key == "trials") {
      if (absent("--trials")) options.config.trials = std::stoi(single(key));
    } else if (key == "seed") {
      if (absent("--seed")) options.config.seed = std::stoull(single(key));
    } else if (key == "construction") {
      if (absent("--construction")) options.constructions = list;
    } else if (key == "mode") {
      if (absent("--mode")) options.mode = single(key);
    } else if (key == "measure") {
      if (absent("--measure")) options.measures = list;
    } else if (key == "models") {
      if (absent("--models")) options.models = list;
    } else if (key == "baseline-multiplier") {
      if (absent("--baseline-multiplier")) {
        options.config.baseline_multiplier = std::stoi(single(key));
      }
    } else if (key == "out") {
      if (absent("--out")) options.out_path = single(key);
    } else if (key == "threads") {
      if (absent("--threads")) options.threads = std::stoi(single(key));
    } else if (key == "serial") {
      if (absent("--serial")) options.serial = (single(key) == "true" || single(key) == "1");
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
}

int run(const CLI::App* cmd, CliOptions& options) {
  if (!options.config_path.empty()) apply_config_file(cmd, options);
  if (options.config.questions.empty()) {
    throw std::invalid_argument("--question is required (flag or config file)");
  }
  for (const std::string& text : options.constructions) {
    options.config.constructions.push_back(parse_construction(text));
  }
  if (!options.mode.empty()) {
    if (options.mode == "rhs") {
      options.config.mode = QuestionMode::RightHandSide;
    } else if (options.mode == "reversed") {
      options.config.mode = QuestionMode::AppropriateReversed;
    } else {
      throw std::invalid_argument("mode: expected rhs or reversed, got " + options.mode);
    }
  }
  for (const std::string& text : options.measures) {
    options.config.measures.push_back(parse_measure(text));
  }
  for (const std::string& text : options.models) {
    options.config.models.push_back(parse_model(text));
  }
  options.config.parallel = !options.serial;
#ifdef _OPENMP
  if (options.threads > 0) omp_set_num_threads(options.threads);
#endif

  const std::vector<gavsa::CsvRow> rows = gavsa::run_experiment(options.config);
  const std::string csv = gavsa::to_csv(rows);
  if (options.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot open " + options.out_path + " for writing");
    }
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo benchmarks for blade-based distributed representations"};
  app.require_subcommand(1);

  const std::map<std::string, ExperimentKind> kinds = {
      {"recognize", ExperimentKind::Recognize}, {"potential", ExperimentKind::Potential},
      {"cancel", ExperimentKind::Cancel},       {"compare", ExperimentKind::Compare},
      {"estimate", ExperimentKind::Estimate},
  };
  std::map<std::string, CliOptions> options;
  app.add_subcommand("recognize", "Recognition percentage curves");
  app.add_subcommand("potential", "Average number of potential answers vs the estimator");
  app.add_subcommand("cancel", "Correct-answer-in-potential-set frequency");
  app.add_subcommand("compare", "GA vs HRR vs BSC recognition, N and KN sizing");
  app.add_subcommand("estimate", "Closed-form estimator values only, no trials");
  for (const auto& [name, kind] : kinds) {
    options[name].config.kind = kind;
    add_common_options(app.get_subcommand(name), options[name]);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, kind] : kinds) {
      const CLI::App* cmd = app.get_subcommand(name);
      if (cmd->parsed()) return run(cmd, options[name]);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
