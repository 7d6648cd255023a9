#include "gavsa/dense_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace gavsa {

namespace {

// Generator indices (1-based, ascending) of a blade mask.
std::vector<int> generator_sequence(BladeMask mask, int dimension) {
  std::vector<int> gens;
  for (int i = 1; i <= dimension; ++i) {
    if ((mask >> (dimension - i)) & 1u) gens.push_back(i);
  }
  return gens;
}

BladeMask mask_from_generators(const std::vector<int>& gens, int dimension) {
  BladeMask mask = 0;
  for (int g : gens) mask |= BladeMask{1} << (dimension - g);
  return mask;
}

// Sorts a generator word with adjacent swaps (each flips the sign), then
// cancels equal neighbours (b_i b_i = 1).
SignedBlade rewrite(std::vector<int> word, int dimension) {
  int sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
        swapped = true;
      }
    }
  }
  std::vector<int> reduced;
  for (std::size_t j = 0; j < word.size();) {
    if (j + 1 < word.size() && word[j] == word[j + 1]) {
      j += 2;  // b_i b_i = 1
    } else {
      reduced.push_back(word[j]);
      ++j;
    }
  }
  return SignedBlade{sign, mask_from_generators(reduced, dimension)};
}

}  // namespace

Multivector dense_oracle_product(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("dense_oracle_product: dimension mismatch");
  }
  const int n = a.dimension();
  if (n > 10) {
    throw std::invalid_argument("dense_oracle_product: dimension too large (max 10)");
  }
  Multivector result(n);
  for (const auto& [mask_a, coeff_a] : a.terms()) {
    const std::vector<int> gens_a = generator_sequence(mask_a, n);
    for (const auto& [mask_b, coeff_b] : b.terms()) {
      std::vector<int> word = gens_a;
      for (int g : generator_sequence(mask_b, n)) word.push_back(g);
      const SignedBlade reduced = rewrite(std::move(word), n);
      result.add_term(reduced.mask, reduced.sign * coeff_a * coeff_b);
    }
  }
  return result;
}

}  // namespace gavsa
