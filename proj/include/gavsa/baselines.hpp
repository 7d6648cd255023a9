#pragma once

// Minimal HRR and BSC implementations for the model comparison: random
// atoms, binding, bundling, decoding, and dot/agreement clean-up. Direct
// O(d^2) circular convolution; vector lengths in these experiments stay
// well below a thousand.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gavsa/encoding.hpp"
#include "gavsa/rng.hpp"

namespace gavsa {

using RealVector = std::vector<double>;
using BitVector = std::vector<std::uint8_t>;

/// HRR atom: entries i.i.d. normal with mean 0 and variance 1/d.
RealVector hrr_random_atom(int length, Rng& rng);

/// Circular convolution (a (*) b)_j = sum_k a_k b_{(j-k) mod d}.
RealVector hrr_bind(const RealVector& a, const RealVector& b);

/// Involution q*_j = q_{(-j) mod d}.
RealVector hrr_involution(const RealVector& q);

/// Approximate unbinding s (*) q*.
RealVector hrr_unbind(const RealVector& s, const RealVector& q);

/// Dot product.
double hrr_similarity(const RealVector& a, const RealVector& b);

BitVector bsc_random(int length, Rng& rng);

/// Componentwise addition mod 2.
BitVector bsc_bind(const BitVector& a, const BitVector& b);

/// Thresholded sum: a position is set when its count of ones exceeds half
/// the chunk count; an extra random vector breaks ties when the chunk count
/// is even.
BitVector bsc_bundle(const std::vector<BitVector>& chunks, Rng& rng);

/// Fraction of agreeing positions.
double bsc_similarity(const BitVector& a, const BitVector& b);

/// Name-indexed stores mirroring CleanupMemory for the baseline models; they
/// hold atoms and previously encoded sentences alike.
using HrrLexicon = std::map<std::string, RealVector, std::less<>>;
using BscLexicon = std::map<std::string, BitVector, std::less<>>;

/// Sentence encoding with circular convolution for the binding and an
/// entrywise sum scaled by 1/sqrt(#chunks); the Plate construction prepends
/// the verb vector as a chunk of its own. Odding has no analogue here, so
/// AgentObjectOdd encodes like AgentObject.
RealVector hrr_encode(const SentenceSpec& spec, const HrrLexicon& lexicon,
                      Construction construction);

/// Sentence encoding with XOR binding and thresholded-majority bundling; the
/// RNG feeds the tie-break vector for even chunk counts.
BitVector bsc_encode(const SentenceSpec& spec, const BscLexicon& lexicon,
                     Construction construction, Rng& rng);

}  // namespace gavsa
