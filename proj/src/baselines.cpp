#include "gavsa/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace gavsa {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace

RealVector hrr_random_atom(int length, Rng& rng) {
  if (length < 1) throw std::invalid_argument("hrr_random_atom: length must be positive");
  const double stddev = 1.0 / std::sqrt(static_cast<double>(length));
  RealVector v(length);
  for (double& x : v) x = rng.normal(stddev);
  return v;
}

RealVector hrr_bind(const RealVector& a, const RealVector& b) {
  require_same_length(a.size(), b.size(), "hrr_bind");
  const std::size_t d = a.size();
  RealVector out(d, 0.0);
  // out[(k + j) mod d] += a[k] * b[j], split so the inner loops stay
  // contiguous and vectorisable.
  for (std::size_t k = 0; k < d; ++k) {
    const double ak = a[k];
    if (ak == 0.0) continue;
    double* head = out.data() + k;
    const std::size_t first = d - k;
    for (std::size_t j = 0; j < first; ++j) head[j] += ak * b[j];
    double* wrap = out.data();
    for (std::size_t j = first; j < d; ++j) wrap[j - first] += ak * b[j];
  }
  return out;
}

RealVector hrr_involution(const RealVector& q) {
  const std::size_t d = q.size();
  RealVector out(d);
  out[0] = q[0];
  for (std::size_t j = 1; j < d; ++j) out[j] = q[d - j];
  return out;
}

RealVector hrr_unbind(const RealVector& s, const RealVector& q) {
  require_same_length(s.size(), q.size(), "hrr_unbind");
  return hrr_bind(s, hrr_involution(q));
}

double hrr_similarity(const RealVector& a, const RealVector& b) {
  require_same_length(a.size(), b.size(), "hrr_similarity");
  double dot = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) dot += a[j] * b[j];
  return dot;
}

BitVector bsc_random(int length, Rng& rng) {
  if (length < 1) throw std::invalid_argument("bsc_random: length must be positive");
  BitVector v(length);
  for (auto& bit : v) bit = rng.coin() ? 1 : 0;
  return v;
}

BitVector bsc_bind(const BitVector& a, const BitVector& b) {
  require_same_length(a.size(), b.size(), "bsc_bind");
  BitVector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] ^ b[j];
  return out;
}

BitVector bsc_bundle(const std::vector<BitVector>& chunks, Rng& rng) {
  if (chunks.empty()) throw std::invalid_argument("bsc_bundle: empty input");
  const std::size_t d = chunks.front().size();
  for (const BitVector& chunk : chunks) require_same_length(chunk.size(), d, "bsc_bundle");

  std::vector<int> ones(d, 0);
  for (const BitVector& chunk : chunks) {
    for (std::size_t j = 0; j < d; ++j) ones[j] += chunk[j];
  }
  std::size_t count = chunks.size();
  if (count % 2 == 0) {
    // Tie-break vector; the augmented count is odd so strict majority always
    // decides.
    const BitVector tiebreak = bsc_random(static_cast<int>(d), rng);
    for (std::size_t j = 0; j < d; ++j) ones[j] += tiebreak[j];
    ++count;
  }
  BitVector out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = (2 * ones[j] > static_cast<int>(count)) ? 1 : 0;
  return out;
}

double bsc_similarity(const BitVector& a, const BitVector& b) {
  require_same_length(a.size(), b.size(), "bsc_similarity");
  std::size_t agree = 0;
  for (std::size_t j = 0; j < a.size(); ++j) agree += (a[j] == b[j]);
  return static_cast<double>(agree) / static_cast<double>(a.size());
}

namespace {

template <typename Lexicon>
const typename Lexicon::mapped_type& lookup(const Lexicon& lexicon, const std::string& name) {
  auto it = lexicon.find(name);
  if (it == lexicon.end()) {
    throw std::invalid_argument("baseline encode: unresolved reference " + name);
  }
  return it->second;
}

}  // namespace

RealVector hrr_encode(const SentenceSpec& spec, const HrrLexicon& lexicon,
                      Construction construction) {
  if (spec.pairs.empty()) {
    throw std::invalid_argument("hrr_encode: sentence needs at least one pair");
  }
  RealVector sum;
  int chunk_count = 0;
  auto accumulate = [&](const RealVector& chunk) {
    if (sum.empty()) sum.assign(chunk.size(), 0.0);
    require_same_length(sum.size(), chunk.size(), "hrr_encode");
    for (std::size_t j = 0; j < chunk.size(); ++j) sum[j] += chunk[j];
    ++chunk_count;
  };
  if (construction == Construction::Plate && spec.verb.has_value()) {
    accumulate(lookup(lexicon, *spec.verb));
  }
  for (const auto& [role, filler] : spec.pairs) {
    accumulate(hrr_bind(lookup(lexicon, role), lookup(lexicon, filler)));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(chunk_count));
  for (double& x : sum) x *= scale;
  return sum;
}

BitVector bsc_encode(const SentenceSpec& spec, const BscLexicon& lexicon,
                     Construction construction, Rng& rng) {
  if (spec.pairs.empty()) {
    throw std::invalid_argument("bsc_encode: sentence needs at least one pair");
  }
  std::vector<BitVector> chunks;
  if (construction == Construction::Plate && spec.verb.has_value()) {
    chunks.push_back(lookup(lexicon, *spec.verb));
  }
  for (const auto& [role, filler] : spec.pairs) {
    chunks.push_back(bsc_bind(lookup(lexicon, role), lookup(lexicon, filler)));
  }
  return bsc_bundle(chunks, rng);
}

}  // namespace gavsa
