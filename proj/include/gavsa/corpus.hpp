#pragma once

// The fixed test corpus: 42 atoms and 19 sentences, built deterministically
// in dependency order, plus the catalog of benchmark questions with their
// expected answers and estimator profiles.

#include <optional>
#include <string>
#include <vector>

#include "gavsa/analysis.hpp"
#include "gavsa/encoding.hpp"

namespace gavsa {

/// The 42 atoms: 7 single-feature roles, 8 double-feature roles, 10 named
/// fillers, 9 padding fillers, and 8 reserve atoms. Four of the reserves are
/// the verbs (bite, flee, see, cause) that the Plate construction adds to
/// the action sentences; no reserve appears in any sentence under the
/// agent-object constructions, and the records PSmith and DogFido are
/// construction-invariant.
const AtomSpec& table1_atom_spec();

/// Sentence definitions in dependency order (each nested reference names an
/// earlier entry).
const std::vector<SentenceSpec>& table1_sentence_specs();

struct Table1 {
  Vocabulary vocabulary;
  CleanupMemory memory;
};

/// Encodes the full sentence set against an existing vocabulary; the RNG
/// feeds odding draws only.
CleanupMemory encode_table1(const Vocabulary& vocabulary, Construction construction, Rng& rng);

/// Draws a fresh vocabulary and encodes the corpus with it.
Table1 build_table1(Rng& rng, int dimension, Construction construction);

/// Structural blade-count census of the corpus under a construction; this
/// depends only on the sentence structure, never on drawn masks.
MemoryProfile table1_profile(Construction construction, int dimension);

/// Maximum structural blade count under a construction (13 for the corpus
/// under AgentObjectOdd).
int table1_max_blade_count(Construction construction);

struct QuestionCase {
  std::string id;        // e.g. "PSmith#name"
  std::string item;      // sentence asked
  std::string question;  // atom asked with
  std::string expected;  // correct answer item
  QuestionMode default_mode = QuestionMode::RightHandSide;
  int meaningful_blades = 0;
  int noisy_blades = 0;
  // Construction under which meaningful+noisy equals the decoded answer's
  // structural blade count.
  Construction ratio_construction = Construction::AgentObject;
  // Estimator input where the benchmark reproduces a closed-form curve.
  std::optional<AnswerProfile> estimator;
};

const std::vector<QuestionCase>& question_catalog();

const QuestionCase& find_question(std::string_view id);  // throws if unknown

/// Text dump of atoms (name, kind, blade) and sentence expansions, for
/// fixture diffing.
std::string corpus_dump(const Table1& corpus);

}  // namespace gavsa
