#pragma once

// Brute-force reference for the geometric product. Works by literal symbol
// rewriting on generator sequences instead of XOR/sign bookkeeping, so it is
// an independent check of the fast path. Serial and deliberately naive.

#include "gavsa/multivector.hpp"

namespace gavsa {

/// Product by rewriting: concatenate the generator sequences of each blade
/// pair, bubble neighbouring generators into ascending order (each swap flips
/// the sign), cancel b_i b_i -> 1, and rebuild. Requires dimension <= 10.
Multivector dense_oracle_product(const Multivector& a, const Multivector& b);

}  // namespace gavsa
