#include "gavsa/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "gavsa/baselines.hpp"

namespace gavsa {

namespace {

// ---------------------------------------------------------------------------
// Trial loop: the only parallel region in the project. Each trial writes to
// its own slot, so scheduling order cannot affect the aggregate.
// ---------------------------------------------------------------------------

template <typename PerTrial>
void for_each_trial(int trials, bool parallel, const PerTrial& body) {
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int t = 0; t < trials; ++t) body(t);
  } else {
    for (int t = 0; t < trials; ++t) body(t);
  }
}

// ---------------------------------------------------------------------------
// Config defaults and validation
// ---------------------------------------------------------------------------

std::vector<Construction> effective_constructions(const ExperimentConfig& config) {
  if (!config.constructions.empty()) return config.constructions;
  if (config.kind == ExperimentKind::Compare) return {Construction::AgentObjectOdd};
  return {Construction::AgentObject};
}

QuestionMode effective_mode(const ExperimentConfig& config, const QuestionCase& question) {
  if (config.mode.has_value()) return *config.mode;
  switch (config.kind) {
    case ExperimentKind::Potential:
    case ExperimentKind::Estimate:
      return QuestionMode::AppropriateReversed;
    case ExperimentKind::Cancel:
    case ExperimentKind::Compare:
      return QuestionMode::RightHandSide;
    case ExperimentKind::Recognize:
      return question.default_mode;
  }
  return QuestionMode::RightHandSide;
}

std::vector<Measure> effective_measures(const ExperimentConfig& config) {
  if (!config.measures.empty()) return config.measures;
  if (config.kind == ExperimentKind::Compare) return {Measure::Hamming};
  return {Measure::InnerOnly};
}

std::vector<Model> effective_models(const ExperimentConfig& config) {
  if (!config.models.empty()) return config.models;
  return {Model::GA, Model::HRR, Model::BSC};
}

Construction baseline_construction(Construction ga) {
  // Odding has no analogue outside GA.
  return ga == Construction::AgentObjectOdd ? Construction::AgentObject : ga;
}

// ---------------------------------------------------------------------------
// GA trial kernels
// ---------------------------------------------------------------------------

std::string ga_experiment_id(const std::string& question_id) { return "ga/" + question_id; }

struct GaTrialSetup {
  const QuestionCase* question = nullptr;
  Construction construction = Construction::AgentObject;
  QuestionMode mode = QuestionMode::RightHandSide;
};

// Vocabulary shared per trial; encoding randomness drawn from a child stream
// keyed by the construction so requesting more constructions never disturbs
// the others' draws.
CleanupMemory trial_memory(const Vocabulary& vocabulary, std::uint64_t trial_seed,
                           Construction construction) {
  Rng encode_rng(child_seed(trial_seed, to_string(construction)));
  return encode_table1(vocabulary, construction, encode_rng);
}

Vocabulary trial_vocabulary(std::uint64_t trial_seed, int n) {
  Rng rng(trial_seed);
  return draw_vocabulary(table1_atom_spec(), n, rng);
}

TrialOutcome ga_trial(const GaTrialSetup& setup, std::uint64_t trial_seed, int n,
                      Measure measure) {
  const Vocabulary vocabulary = trial_vocabulary(trial_seed, n);
  const CleanupMemory memory = trial_memory(vocabulary, trial_seed, setup.construction);
  return recognize(memory, memory.at(setup.question->item), memory.at(setup.question->question),
                   setup.question->expected, setup.mode, measure);
}

// ---------------------------------------------------------------------------
// Baseline memories
// ---------------------------------------------------------------------------

template <typename Lexicon>
struct BaselineMemory {
  Lexicon lexicon;
  std::vector<std::string> order;  // atoms first, then sentences
};

BaselineMemory<HrrLexicon> hrr_corpus(int length, Construction construction, Rng& rng) {
  BaselineMemory<HrrLexicon> memory;
  for (const auto& [name, kind] : table1_atom_spec()) {
    memory.lexicon.emplace(name, hrr_random_atom(length, rng));
    memory.order.push_back(name);
  }
  for (const SentenceSpec& spec : table1_sentence_specs()) {
    memory.lexicon.emplace(spec.name, hrr_encode(spec, memory.lexicon, construction));
    memory.order.push_back(spec.name);
  }
  return memory;
}

BaselineMemory<BscLexicon> bsc_corpus(int length, Construction construction, Rng& rng) {
  BaselineMemory<BscLexicon> memory;
  for (const auto& [name, kind] : table1_atom_spec()) {
    memory.lexicon.emplace(name, bsc_random(length, rng));
    memory.order.push_back(name);
  }
  for (const SentenceSpec& spec : table1_sentence_specs()) {
    memory.lexicon.emplace(spec.name, bsc_encode(spec, memory.lexicon, construction, rng));
    memory.order.push_back(spec.name);
  }
  return memory;
}

// Argmax clean-up with the set-membership tie rule shared by every model.
template <typename Memory, typename Vector, typename Similarity>
bool baseline_correct(const Memory& memory, const Vector& noisy, const std::string& expected,
                      const Similarity& similarity) {
  double best = 0.0;
  std::vector<const std::string*> winners;
  for (const std::string& name : memory.order) {
    const double score = similarity(noisy, memory.lexicon.at(name));
    if (winners.empty() || score > best) {
      winners.assign(1, &name);
      best = score;
    } else if (score == best) {
      winners.push_back(&name);
    }
  }
  for (const std::string* name : winners) {
    if (*name == expected) return true;
  }
  return false;
}

bool hrr_trial(const QuestionCase& question, Construction construction, int length,
               std::uint64_t seed) {
  Rng rng(seed);
  const auto memory = hrr_corpus(length, construction, rng);
  const RealVector noisy =
      hrr_unbind(memory.lexicon.at(question.item), memory.lexicon.at(question.question));
  return baseline_correct(memory, noisy, question.expected,
                          [](const RealVector& a, const RealVector& b) {
                            return hrr_similarity(a, b);
                          });
}

bool bsc_trial(const QuestionCase& question, Construction construction, int length,
               std::uint64_t seed) {
  Rng rng(seed);
  const auto memory = bsc_corpus(length, construction, rng);
  const BitVector noisy =
      bsc_bind(memory.lexicon.at(question.question), memory.lexicon.at(question.item));
  return baseline_correct(memory, noisy, question.expected,
                          [](const BitVector& a, const BitVector& b) {
                            return bsc_similarity(a, b);
                          });
}

// ---------------------------------------------------------------------------
// Experiment bodies
// ---------------------------------------------------------------------------

void log_progress(const std::string& what, int n) {
  std::fprintf(stderr, "[gavsa] %s N=%d\n", what.c_str(), n);
}

std::vector<CsvRow> run_recognition(const ExperimentConfig& config) {
  std::vector<CsvRow> rows;
  const auto constructions = effective_constructions(config);
  const auto measures = effective_measures(config);
  for (const std::string& question_id : config.questions) {
    const QuestionCase& question = find_question(question_id);
    const QuestionMode mode = effective_mode(config, question);
    const std::string id = ga_experiment_id(question_id);
    for (int n : n_values(config)) {
      log_progress("recognize " + question_id, n);
      const std::size_t cells = constructions.size() * measures.size();
      std::vector<std::uint8_t> correct(static_cast<std::size_t>(config.trials) * cells, 0);
      for_each_trial(config.trials, config.parallel, [&](int t) {
        const std::uint64_t trial_seed = substream_seed(config.seed, id, n, t);
        const Vocabulary vocabulary = trial_vocabulary(trial_seed, n);
        std::size_t cell = 0;
        for (Construction construction : constructions) {
          const CleanupMemory memory = trial_memory(vocabulary, trial_seed, construction);
          const EncodedItem& item = memory.at(question.item);
          const EncodedItem& probe = memory.at(question.question);
          for (Measure measure : measures) {
            const TrialOutcome outcome =
                recognize(memory, item, probe, question.expected, mode, measure);
            correct[static_cast<std::size_t>(t) * cells + cell] = outcome.correct ? 1 : 0;
            ++cell;
          }
        }
      });
      std::size_t cell = 0;
      for (Construction construction : constructions) {
        for (Measure measure : measures) {
          std::int64_t hits = 0;
          for (int t = 0; t < config.trials; ++t) {
            hits += correct[static_cast<std::size_t>(t) * cells + cell];
          }
          rows.push_back(CsvRow{"recognize", "ga", question_id,
                                std::string(to_string(construction)),
                                std::string(to_string(mode)), std::string(to_string(measure)), n,
                                config.trials, config.seed,
                                100.0 * static_cast<double>(hits) / config.trials});
          ++cell;
        }
      }
    }
  }
  return rows;
}

std::vector<CsvRow> run_potential_answers(const ExperimentConfig& config) {
  std::vector<CsvRow> rows;
  const Construction construction = effective_constructions(config).front();
  for (const std::string& question_id : config.questions) {
    const QuestionCase& question = find_question(question_id);
    if (!question.estimator.has_value()) {
      throw std::invalid_argument("potential: no estimator profile for " + question_id);
    }
    const QuestionMode mode = effective_mode(config, question);
    const std::string id = ga_experiment_id(question_id);
    for (int n : n_values(config)) {
      log_progress("potential " + question_id, n);
      std::vector<std::int64_t> sizes(config.trials, 0);
      for_each_trial(config.trials, config.parallel, [&](int t) {
        const std::uint64_t trial_seed = substream_seed(config.seed, id, n, t);
        const Vocabulary vocabulary = trial_vocabulary(trial_seed, n);
        const CleanupMemory memory = trial_memory(vocabulary, trial_seed, construction);
        const Multivector noisy =
            ask(memory.at(question.item), memory.at(question.question), mode);
        sizes[t] = static_cast<std::int64_t>(cleanup_query(memory, noisy).potential.size());
      });
      std::int64_t total = 0;
      for (std::int64_t s : sizes) total += s;
      rows.push_back(CsvRow{"potential", "ga", question_id,
                            std::string(to_string(construction)), std::string(to_string(mode)),
                            "-", n, config.trials, config.seed,
                            static_cast<double>(total) / config.trials});
      MemoryProfile profile = table1_profile(construction, n);
      rows.push_back(CsvRow{"potential", "formula", question_id,
                            std::string(to_string(construction)), std::string(to_string(mode)),
                            "-", n, config.trials, config.seed,
                            expected_potential_answers_general(profile, *question.estimator)});
    }
  }
  return rows;
}

std::vector<CsvRow> run_cancellation(const ExperimentConfig& config) {
  std::vector<CsvRow> rows;
  const Construction construction = effective_constructions(config).front();
  for (const std::string& question_id : config.questions) {
    const QuestionCase& question = find_question(question_id);
    const QuestionMode mode = effective_mode(config, question);
    const std::string id = ga_experiment_id(question_id);

    // Asymptotic rate: an answer of 2K blades asked on a fixed side escapes
    // complete cancellation with probability 1 - C(2K,K)/4^K; odd counts and
    // reversed questions never cancel completely.
    Rng structure_rng(0);
    const Table1 structure = build_table1(structure_rng, 1, construction);
    const int answer_blades = structure.memory.at(question.expected).blade_count;
    double asymptote = 1.0;
    if (mode == QuestionMode::RightHandSide && answer_blades % 2 == 0) {
      asymptote = 1.0 - cancellation_probability(answer_blades / 2).value();
    }

    for (int n : n_values(config)) {
      log_progress("cancel " + question_id, n);
      std::vector<std::uint8_t> in_potential(config.trials, 0);
      for_each_trial(config.trials, config.parallel, [&](int t) {
        const std::uint64_t trial_seed = substream_seed(config.seed, id, n, t);
        const Vocabulary vocabulary = trial_vocabulary(trial_seed, n);
        const CleanupMemory memory = trial_memory(vocabulary, trial_seed, construction);
        const TrialOutcome outcome =
            recognize(memory, memory.at(question.item), memory.at(question.question),
                      question.expected, mode, Measure::InnerOnly);
        in_potential[t] = outcome.correct_in_potential ? 1 : 0;
      });
      std::int64_t hits = 0;
      for (std::uint8_t b : in_potential) hits += b;
      rows.push_back(CsvRow{"cancel", "ga", question_id, std::string(to_string(construction)),
                            std::string(to_string(mode)), "-", n, config.trials, config.seed,
                            static_cast<double>(hits) / config.trials});
      rows.push_back(CsvRow{"cancel", "asymptote", question_id,
                            std::string(to_string(construction)), std::string(to_string(mode)),
                            "-", n, config.trials, config.seed, asymptote});
    }
  }
  return rows;
}

std::vector<CsvRow> run_comparison(const ExperimentConfig& config) {
  std::vector<CsvRow> rows;
  const Construction ga_construction = effective_constructions(config).front();
  const Construction mirrored = baseline_construction(ga_construction);
  const Measure ga_measure = effective_measures(config).front();
  const auto models = effective_models(config);
  const int k_multiplier = config.baseline_multiplier > 0
                               ? config.baseline_multiplier
                               : table1_max_blade_count(ga_construction);

  const bool want_ga = std::count(models.begin(), models.end(), Model::GA) > 0;
  const bool want_hrr = std::count(models.begin(), models.end(), Model::HRR) > 0;
  const bool want_bsc = std::count(models.begin(), models.end(), Model::BSC) > 0;

  for (const std::string& question_id : config.questions) {
    const QuestionCase& question = find_question(question_id);
    const QuestionMode mode = effective_mode(config, question);
    const std::string id = "compare/" + question_id;
    GaTrialSetup setup{&question, ga_construction, mode};
    for (int n : n_values(config)) {
      log_progress("compare " + question_id, n);
      // Slots per trial: ga, hrr@N, hrr@KN, bsc@N, bsc@KN.
      std::vector<std::uint8_t> hits(static_cast<std::size_t>(config.trials) * 5, 0);
      for_each_trial(config.trials, config.parallel, [&](int t) {
        const std::uint64_t root = substream_seed(config.seed, id, n, t);
        std::uint8_t* slot = hits.data() + static_cast<std::size_t>(t) * 5;
        if (want_ga) {
          slot[0] = ga_trial(setup, child_seed(root, "ga"), n, ga_measure).correct ? 1 : 0;
        }
        if (want_hrr) {
          slot[1] = hrr_trial(question, mirrored, n, child_seed(root, "hrr-equal")) ? 1 : 0;
          slot[2] =
              hrr_trial(question, mirrored, k_multiplier * n, child_seed(root, "hrr-kn")) ? 1 : 0;
        }
        if (want_bsc) {
          slot[3] = bsc_trial(question, mirrored, n, child_seed(root, "bsc-equal")) ? 1 : 0;
          slot[4] =
              bsc_trial(question, mirrored, k_multiplier * n, child_seed(root, "bsc-kn")) ? 1 : 0;
        }
      });
      auto percentage = [&](int slot_index) {
        std::int64_t total = 0;
        for (int t = 0; t < config.trials; ++t) {
          total += hits[static_cast<std::size_t>(t) * 5 + slot_index];
        }
        return 100.0 * static_cast<double>(total) / config.trials;
      };
      auto emit = [&](const char* experiment, const char* model, Construction construction,
                      std::string measure, double value) {
        rows.push_back(CsvRow{experiment, model, question_id,
                              std::string(to_string(construction)),
                              std::string(to_string(mode)), std::move(measure), n, config.trials,
                              config.seed, value});
      };
      if (want_ga) {
        // GA always runs at N blades; the same series belongs to both sizing
        // regimes.
        const double ga_value = percentage(0);
        emit("compare-equal", "ga", ga_construction, std::string(to_string(ga_measure)), ga_value);
        emit("compare-kn", "ga", ga_construction, std::string(to_string(ga_measure)), ga_value);
      }
      if (want_hrr) {
        emit("compare-equal", "hrr", mirrored, "-", percentage(1));
        emit("compare-kn", "hrr", mirrored, "-", percentage(2));
      }
      if (want_bsc) {
        emit("compare-equal", "bsc", mirrored, "-", percentage(3));
        emit("compare-kn", "bsc", mirrored, "-", percentage(4));
      }
    }
  }
  return rows;
}

std::vector<CsvRow> run_estimate(const ExperimentConfig& config) {
  std::vector<CsvRow> rows;
  const Construction construction = effective_constructions(config).front();
  for (const std::string& question_id : config.questions) {
    const QuestionCase& question = find_question(question_id);
    if (!question.estimator.has_value()) {
      throw std::invalid_argument("estimate: no estimator profile for " + question_id);
    }
    for (int n : n_values(config)) {
      MemoryProfile profile = table1_profile(construction, n);
      rows.push_back(CsvRow{"estimate", "formula", question_id,
                            std::string(to_string(construction)), "-", "-", n, 0, config.seed,
                            expected_potential_answers_general(profile, *question.estimator)});
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Recognize: return "recognize";
    case ExperimentKind::Potential: return "potential";
    case ExperimentKind::Cancel: return "cancel";
    case ExperimentKind::Compare: return "compare";
    case ExperimentKind::Estimate: return "estimate";
  }
  return "?";
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::GA: return "ga";
    case Model::HRR: return "hrr";
    case Model::BSC: return "bsc";
  }
  return "?";
}

std::vector<int> n_values(const ExperimentConfig& config) {
  std::vector<int> values;
  for (int n = config.n_min; n <= config.n_max; n += config.n_step) values.push_back(n);
  return values;
}

void validate_config(const ExperimentConfig& config) {
  if (config.questions.empty()) {
    throw std::invalid_argument("config: at least one question required");
  }
  for (const std::string& id : config.questions) find_question(id);
  if (config.trials < 1 && config.kind != ExperimentKind::Estimate) {
    throw std::invalid_argument("config: trials must be >= 1");
  }
  if (config.n_min < 1 || config.n_max > kMaxDimension || config.n_min > config.n_max ||
      config.n_step < 1) {
    throw std::invalid_argument("config: empty or out-of-range N range");
  }
  if (config.kind != ExperimentKind::Compare) {
    for (Model m : config.models) {
      if (m != Model::GA) {
        throw std::invalid_argument(
            "config: baseline models are only valid for the compare experiment");
      }
    }
  }
  if (config.kind == ExperimentKind::Cancel || config.kind == ExperimentKind::Potential ||
      config.kind == ExperimentKind::Estimate || config.kind == ExperimentKind::Compare) {
    if (effective_constructions(config).size() != 1) {
      throw std::invalid_argument("config: this experiment takes a single construction");
    }
  }
  if (config.baseline_multiplier < 0) {
    throw std::invalid_argument("config: baseline multiplier must be positive");
  }
}

std::vector<CsvRow> run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<CsvRow> rows;
  switch (config.kind) {
    case ExperimentKind::Recognize: rows = run_recognition(config); break;
    case ExperimentKind::Potential: rows = run_potential_answers(config); break;
    case ExperimentKind::Cancel: rows = run_cancellation(config); break;
    case ExperimentKind::Compare: rows = run_comparison(config); break;
    case ExperimentKind::Estimate: rows = run_estimate(config); break;
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    auto key = [](const CsvRow& r) {
      return std::tie(r.experiment, r.model, r.question, r.n, r.construction, r.mode, r.measure);
    };
    return key(a) < key(b);
  });
  return rows;
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::string out = "experiment,model,question,construction,mode,measure,N,trials,seed,value\n";
  char buffer[64];
  for (const CsvRow& row : rows) {
    out += row.experiment;
    out += ',';
    out += row.model;
    out += ',';
    out += row.question;
    out += ',';
    out += row.construction;
    out += ',';
    out += row.mode;
    out += ',';
    out += row.measure;
    std::snprintf(buffer, sizeof(buffer), ",%d,%d,%llu,%.4f\n", row.n, row.trials,
                  static_cast<unsigned long long>(row.seed), row.value);
    out += buffer;
  }
  return out;
}

}  // namespace gavsa
