#pragma once

// Closed-form estimates for clean-up recognition under ideal conditions:
// the probability that an even-blade answer cancels completely, and the
// expected number of potential answers for a noisy decoded statement.

#include <cstdint>
#include <map>

namespace gavsa {

/// Exact rational with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Blade-count census of a clean-up memory: k -> |S_k|, plus the vector
/// dimension N the estimates are evaluated at.
struct MemoryProfile {
  std::map<int, std::int64_t> counts;
  int dimension = 0;

  std::int64_t count(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  /// Largest k with |S_k| > 0.
  int omega() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

/// A-priori potential answers per subset, and the noisy answer's blade count.
struct AnswerProfile {
  std::map<int, std::int64_t> p;  // k -> p_k
  std::int64_t noisy_blade_count = 0;  // L

  std::int64_t p_at(int k) const {
    auto it = p.find(k);
    return it == p.end() ? 0 : it->second;
  }
  std::int64_t total() const;
};

/// Probability that an answer of 2K blades cancels completely: C(2K,K)/4^K.
Rational cancellation_probability(int k);

/// Expected |A| for one meaningful blade and `l_noise` noisy blades:
/// 1 + (|S_1|-1)(L+1)/2^N + sum_{k>=2} |S_k| (1 - (1 - (L+1)/2^N)^k).
double expected_potential_answers_simple(const MemoryProfile& profile, std::int64_t l_noise);

/// General form: p + (|S_1|-p_1) L / 2^N
///             + sum_{k>=2} (|S_k|-p_k)(1 - (1 - L/2^N)^k).
double expected_potential_answers_general(const MemoryProfile& profile,
                                          const AnswerProfile& answer);

}  // namespace gavsa
