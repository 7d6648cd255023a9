#pragma once

// Vocabulary drawing, sentence encoding under the three constructions,
// question asking, clean-up memory and single-trial recognition. Vocabulary
// and CleanupMemory are immutable once built and safe to share; recognition
// is a pure function of its inputs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gavsa/analysis.hpp"
#include "gavsa/cartan.hpp"
#include "gavsa/multivector.hpp"
#include "gavsa/rng.hpp"

namespace gavsa {

enum class AtomKind { Role, Filler };

enum class Construction { Plate, AgentObject, AgentObjectOdd };

enum class QuestionMode { RightHandSide, AppropriateReversed };

enum class Measure { InnerOnly, Hamming, Euclidean };

std::string_view to_string(Construction c);
std::string_view to_string(QuestionMode m);
std::string_view to_string(Measure m);

struct Atom {
  std::string name;
  AtomKind kind = AtomKind::Filler;
  BladeMask mask = 0;
};

struct Vocabulary {
  int dimension = 0;
  std::vector<Atom> atoms;

  const Atom* find(std::string_view name) const;
  const Atom& at(std::string_view name) const;  // throws if absent
};

using AtomSpec = std::vector<std::pair<std::string, AtomKind>>;

/// Assembles a vocabulary from already-chosen masks (one per spec entry).
Vocabulary vocabulary_from_masks(const AtomSpec& spec, int dimension,
                                 const std::vector<BladeMask>& masks);

/// Draws each atom's blade independently and uniformly over all 2^n masks,
/// in spec order. Throws on duplicate names.
Vocabulary draw_vocabulary(const AtomSpec& spec, int dimension, Rng& rng);

/// A sentence as named role/filler pairs; fillers may reference atoms or
/// previously encoded items. The verb atom is used by the Plate construction
/// only.
struct SentenceSpec {
  std::string name;
  std::optional<std::string> verb;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct EncodedItem {
  std::string name;
  Multivector value;
  int blade_count = 0;  // structural count, collisions notwithstanding
  std::optional<BladeMask> odding_mask;
  std::optional<AtomKind> kind;  // set for atoms, empty for sentences
};

class CleanupMemory {
 public:
  explicit CleanupMemory(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }

  void add_atom(const Atom& atom);
  const EncodedItem& add(EncodedItem item);

  const EncodedItem* find(std::string_view name) const;
  const EncodedItem& at(std::string_view name) const;  // throws if absent
  std::size_t index_of(std::string_view name) const;   // throws if absent

  const std::vector<EncodedItem>& items() const { return items_; }

  /// Largest structural blade count over all items.
  int max_blade_count() const;

  /// Census |S_k| with the profile dimension set to this memory's dimension.
  MemoryProfile profile() const;

 private:
  int dimension_;
  std::vector<EncodedItem> items_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Encodes one sentence against the vocabulary and the memory built so far.
/// The RNG is consumed only by the odding draw of AgentObjectOdd.
EncodedItem encode(const SentenceSpec& spec, const CleanupMemory& so_far,
                   const Vocabulary& vocabulary, Construction construction, Rng& rng);

/// Decodes item # question. RightHandSide computes S * Q; AppropriateReversed
/// computes Q+ * S for role questions and S * Q+ otherwise (sentence-valued
/// questions count as fillers).
Multivector ask(const EncodedItem& item, const EncodedItem& question, QuestionMode mode);

struct QueryResult {
  std::vector<std::int64_t> scores;    // |<noisy|item>| per memory index
  std::vector<std::size_t> potential;  // indices with score != 0 (the set A)
  std::int64_t max_score = 0;          // m, 0 when A is empty
  std::vector<std::size_t> top;        // indices with score == m (the set T)
};

QueryResult cleanup_query(const CleanupMemory& memory, const Multivector& noisy);

struct TrialOutcome {
  bool correct = false;
  std::size_t potential_count = 0;
  std::size_t top_set_size = 0;
  Measure measure_used = Measure::InnerOnly;
  bool correct_in_potential = false;
};

/// Two-stage recognition. InnerOnly: correct iff the expected item belongs
/// to the top tie set T. Hamming/Euclidean: with |A| > 1, ranks all of A by
/// the chosen signature measure against the noisy answer (infinite values
/// above every finite one) and checks membership in that argmax set;
/// otherwise falls back to InnerOnly semantics.
TrialOutcome recognize(const CleanupMemory& memory, const EncodedItem& item,
                       const EncodedItem& question, std::string_view expected,
                       QuestionMode mode, Measure measure);

}  // namespace gavsa
