#include "gavsa/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gavsa {

std::int64_t AnswerProfile::total() const {
  std::int64_t sum = 0;
  for (const auto& [k, pk] : p) sum += pk;
  return sum;
}

Rational cancellation_probability(int k) {
  // The intermediate product C(2K-1, K-1) * 2K must stay below 2^63, which
  // holds up to K = 30.
  if (k < 1 || k > 30) {
    throw std::invalid_argument("cancellation_probability: K out of range");
  }
  std::int64_t binom = 1;
  for (int j = 1; j <= k; ++j) {
    binom = binom * (k + j) / j;
  }
  const std::int64_t denom = std::int64_t{1} << (2 * k);
  const std::int64_t g = std::gcd(binom, denom);
  return Rational{binom / g, denom / g};
}

namespace {

double hit_probability(std::int64_t blades_l, int dimension) {
  return static_cast<double>(blades_l) * std::pow(2.0, -dimension);
}

}  // namespace

double expected_potential_answers_simple(const MemoryProfile& profile, std::int64_t l_noise) {
  if (profile.count(1) < 1) {
    throw std::invalid_argument("expected_potential_answers_simple: |S_1| must be >= 1");
  }
  if (l_noise < 1) {
    throw std::invalid_argument("expected_potential_answers_simple: L must be positive");
  }
  const double q = hit_probability(l_noise + 1, profile.dimension);
  double total = 1.0 + static_cast<double>(profile.count(1) - 1) * q;
  for (const auto& [k, size] : profile.counts) {
    if (k < 2) continue;
    total += static_cast<double>(size) * (1.0 - std::pow(1.0 - q, k));
  }
  return total;
}

double expected_potential_answers_general(const MemoryProfile& profile,
                                          const AnswerProfile& answer) {
  for (const auto& [k, pk] : answer.p) {
    if (pk < 0 || pk > profile.count(k)) {
      throw std::invalid_argument("expected_potential_answers_general: p_k exceeds |S_k|");
    }
  }
  const double q = hit_probability(answer.noisy_blade_count, profile.dimension);
  double total = static_cast<double>(answer.total());
  total += static_cast<double>(profile.count(1) - answer.p_at(1)) * q;
  for (const auto& [k, size] : profile.counts) {
    if (k < 2) continue;
    total += static_cast<double>(size - answer.p_at(k)) * (1.0 - std::pow(1.0 - q, k));
  }
  return total;
}

}  // namespace gavsa
