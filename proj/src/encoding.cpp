#include "gavsa/encoding.hpp"

#include <set>
#include <stdexcept>

namespace gavsa {

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::Plate: return "plate";
    case Construction::AgentObject: return "ao";
    case Construction::AgentObjectOdd: return "ao-odd";
  }
  return "?";
}

std::string_view to_string(QuestionMode m) {
  return m == QuestionMode::RightHandSide ? "rhs" : "reversed";
}

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::InnerOnly: return "inner";
    case Measure::Hamming: return "hamming";
    case Measure::Euclidean: return "euclid";
  }
  return "?";
}

const Atom* Vocabulary::find(std::string_view name) const {
  for (const Atom& atom : atoms) {
    if (atom.name == name) return &atom;
  }
  return nullptr;
}

const Atom& Vocabulary::at(std::string_view name) const {
  const Atom* atom = find(name);
  if (atom == nullptr) {
    throw std::invalid_argument("Vocabulary: unknown atom " + std::string(name));
  }
  return *atom;
}

Vocabulary vocabulary_from_masks(const AtomSpec& spec, int dimension,
                                 const std::vector<BladeMask>& masks) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw std::invalid_argument("vocabulary_from_masks: dimension out of range");
  }
  if (masks.size() != spec.size()) {
    throw std::invalid_argument("vocabulary_from_masks: one mask per atom required");
  }
  Vocabulary vocabulary;
  vocabulary.dimension = dimension;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!seen.insert(spec[i].first).second) {
      throw std::invalid_argument("vocabulary: duplicate atom name " + spec[i].first);
    }
    vocabulary.atoms.push_back(Atom{spec[i].first, spec[i].second, masks[i]});
  }
  return vocabulary;
}

Vocabulary draw_vocabulary(const AtomSpec& spec, int dimension, Rng& rng) {
  std::vector<BladeMask> masks;
  masks.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) masks.push_back(rng.uniform_mask(dimension));
  return vocabulary_from_masks(spec, dimension, masks);
}

void CleanupMemory::add_atom(const Atom& atom) {
  add(EncodedItem{atom.name, Multivector::blade(dimension_, atom.mask, 1), 1, std::nullopt,
                  atom.kind});
}

const EncodedItem& CleanupMemory::add(EncodedItem item) {
  if (item.value.dimension() != dimension_) {
    throw std::invalid_argument("CleanupMemory::add: dimension mismatch");
  }
  auto [it, inserted] = index_.emplace(item.name, items_.size());
  if (!inserted) {
    throw std::invalid_argument("CleanupMemory::add: duplicate name " + item.name);
  }
  items_.push_back(std::move(item));
  return items_.back();
}

const EncodedItem* CleanupMemory::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &items_[it->second];
}

const EncodedItem& CleanupMemory::at(std::string_view name) const {
  const EncodedItem* item = find(name);
  if (item == nullptr) {
    throw std::invalid_argument("CleanupMemory: unknown item " + std::string(name));
  }
  return *item;
}

std::size_t CleanupMemory::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::invalid_argument("CleanupMemory: unknown item " + std::string(name));
  }
  return it->second;
}

int CleanupMemory::max_blade_count() const {
  int best = 0;
  for (const EncodedItem& item : items_) best = std::max(best, item.blade_count);
  return best;
}

MemoryProfile CleanupMemory::profile() const {
  MemoryProfile profile;
  profile.dimension = dimension_;
  for (const EncodedItem& item : items_) ++profile.counts[item.blade_count];
  return profile;
}

EncodedItem encode(const SentenceSpec& spec, const CleanupMemory& so_far,
                   const Vocabulary& vocabulary, Construction construction, Rng& rng) {
  if (spec.pairs.empty()) {
    throw std::invalid_argument("encode: sentence needs at least one pair");
  }
  const int n = vocabulary.dimension;
  Multivector value(n);
  int blade_count = 0;

  if (construction == Construction::Plate && spec.verb.has_value()) {
    value.add_term(vocabulary.at(*spec.verb).mask, 1);
    blade_count += 1;
  }

  for (const auto& [role_name, filler_name] : spec.pairs) {
    const Atom& role = vocabulary.at(role_name);
    if (role.kind != AtomKind::Role) {
      throw std::invalid_argument("encode: " + role_name + " is not a role");
    }
    const Multivector role_value = Multivector::blade(n, role.mask, 1);
    // Fillers resolve to encoded items first so nested sentences reuse the
    // multivector stored in the memory being built.
    const EncodedItem* nested = so_far.find(filler_name);
    if (nested != nullptr) {
      if (nested->kind == AtomKind::Role) {
        throw std::invalid_argument("encode: role atom " + filler_name + " used as filler");
      }
      value = value + geometric_product(role_value, nested->value);
      blade_count += nested->blade_count;
    } else {
      const Atom& filler = vocabulary.at(filler_name);
      if (filler.kind == AtomKind::Role) {
        throw std::invalid_argument("encode: role atom " + filler_name + " used as filler");
      }
      value = value + geometric_product(role_value, Multivector::blade(n, filler.mask, 1));
      blade_count += 1;
    }
  }

  std::optional<BladeMask> odding_mask;
  if (construction == Construction::AgentObjectOdd && blade_count % 2 == 0) {
    const BladeMask odd = rng.uniform_mask(n);
    value.add_term(odd, 1);
    blade_count += 1;
    odding_mask = odd;
  }
  return EncodedItem{spec.name, std::move(value), blade_count, odding_mask, std::nullopt};
}

Multivector ask(const EncodedItem& item, const EncodedItem& question, QuestionMode mode) {
  if (item.value.dimension() != question.value.dimension()) {
    throw std::invalid_argument("ask: dimension mismatch");
  }
  if (mode == QuestionMode::RightHandSide) {
    return geometric_product(item.value, question.value);
  }
  if (question.kind.has_value() && *question.kind == AtomKind::Role) {
    return geometric_product(reversion(question.value), item.value);
  }
  return geometric_product(item.value, reversion(question.value));
}

QueryResult cleanup_query(const CleanupMemory& memory, const Multivector& noisy) {
  if (noisy.dimension() != memory.dimension()) {
    throw std::invalid_argument("cleanup_query: dimension mismatch");
  }
  QueryResult result;
  result.scores.reserve(memory.items().size());
  for (std::size_t i = 0; i < memory.items().size(); ++i) {
    std::int64_t score = inner_product(noisy, memory.items()[i].value);
    if (score < 0) score = -score;
    result.scores.push_back(score);
    if (score == 0) continue;
    result.potential.push_back(i);
    if (score > result.max_score) result.max_score = score;
  }
  for (std::size_t i : result.potential) {
    if (result.scores[i] == result.max_score) result.top.push_back(i);
  }
  return result;
}

namespace {

// Argmax set of A under the chosen signature measure; infinities outrank
// every finite value and tie with each other.
template <typename Value>
std::vector<std::size_t> measure_argmax(const CleanupMemory& memory,
                                        const Multivector& noisy,
                                        const std::vector<std::size_t>& candidates,
                                        Value (*measure_fn)(const Signature&, const Signature&)) {
  const Signature noisy_sig = signature(noisy, memory.dimension());
  std::vector<std::size_t> best;
  Value best_value{};
  for (std::size_t index : candidates) {
    const Signature candidate_sig = signature(memory.items()[index].value, memory.dimension());
    const Value v = measure_fn(noisy_sig, candidate_sig);
    if (best.empty() || best_value < v) {
      best.assign(1, index);
      best_value = v;
    } else if (v == best_value) {
      best.push_back(index);
    }
  }
  return best;
}

bool contains(const std::vector<std::size_t>& indices, std::size_t wanted) {
  for (std::size_t i : indices) {
    if (i == wanted) return true;
  }
  return false;
}

}  // namespace

TrialOutcome recognize(const CleanupMemory& memory, const EncodedItem& item,
                       const EncodedItem& question, std::string_view expected,
                       QuestionMode mode, Measure measure) {
  const std::size_t expected_index = memory.index_of(expected);
  const Multivector noisy = ask(item, question, mode);
  const QueryResult query = cleanup_query(memory, noisy);

  TrialOutcome outcome;
  outcome.potential_count = query.potential.size();
  outcome.top_set_size = query.top.size();
  outcome.measure_used = measure;
  outcome.correct_in_potential = contains(query.potential, expected_index);

  if (measure == Measure::InnerOnly || query.potential.size() <= 1) {
    outcome.correct = contains(query.top, expected_index);
    return outcome;
  }
  const std::vector<std::size_t> winners =
      measure == Measure::Hamming
          ? measure_argmax<HammingValue>(memory, noisy, query.potential, &hamming_measure)
          : measure_argmax<EuclideanValue>(memory, noisy, query.potential, &euclidean_measure);
  outcome.correct = contains(winners, expected_index);
  return outcome;
}

}  // namespace gavsa
