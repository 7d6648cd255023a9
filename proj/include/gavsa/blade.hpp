#pragma once

// Basis blades of Cl_n as bitmasks. In the literal form c_{x_1...x_n} the
// generator b_i sits at machine bit (n - i), so "c_01101" reads left to
// right from the most significant used bit. All arithmetic below is
// position-relative and therefore independent of n; only parsing and
// formatting need the width.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace gavsa {

using BladeMask = std::uint64_t;

/// Maximum supported dimension; a mask must fit one machine word.
inline constexpr int kMaxDimension = 63;

struct SignedBlade {
  int sign = 1;  // +1 or -1
  BladeMask mask = 0;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

inline int blade_grade(BladeMask mask) { return std::popcount(mask); }

/// Sign exponent D for the product c_x * c_y (x the left operand):
/// D = sum over generator pairs k < l of y_k * x_l.
inline int sign_exponent_d(BladeMask x, BladeMask y) {
  // Generator index k maps to machine bit n-k, so "y's generator left of
  // x's generator" becomes "y's bit strictly above x's bit".
  int d = 0;
  BladeMask rest = x;
  while (rest != 0) {
    const int p = std::countr_zero(rest);
    rest &= rest - 1;
    d += std::popcount(y >> (p + 1));
  }
  return d;
}

/// Geometric product of two basis blades: ((-1)^D, x XOR y).
inline SignedBlade blade_product(BladeMask x, BladeMask y) {
  return SignedBlade{(sign_exponent_d(x, y) & 1) ? -1 : +1, x ^ y};
}

/// Reversion sign (-1)^{g(g-1)/2} for a blade of grade g.
inline int reversion_sign(int grade) {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : +1;
}

/// Squared-blade sign under the inner product, equal to reversion_sign(g).
inline int self_inner_sign(BladeMask mask) { return reversion_sign(blade_grade(mask)); }

/// "c_01101" for n = 5. The scalar unit renders as "c_00000".
std::string format_blade(BladeMask mask, int dimension);

/// Parses "c_XXXX" (optionally signed, e.g. "-c_0110"); width is taken from
/// the digit count. Throws std::invalid_argument on malformed input.
SignedBlade parse_blade(std::string_view text, int* width_out = nullptr);

}  // namespace gavsa
