#pragma once

// Sparse multivectors over Cl_n with exact integer coefficients. Every value
// is immutable in spirit: operations return fresh objects and nothing here
// shares mutable state, so instances may be used freely across threads.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "gavsa/blade.hpp"

namespace gavsa {

class Multivector {
 public:
  using TermMap = std::map<BladeMask, std::int64_t>;

  explicit Multivector(int dimension);

  static Multivector zero(int dimension) { return Multivector(dimension); }
  static Multivector scalar_unit(int dimension);
  static Multivector blade(int dimension, BladeMask mask, std::int64_t coefficient = 1);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }

  /// Number of stored (nonzero) terms.
  std::size_t blade_count() const { return terms_.size(); }

  std::int64_t coefficient(BladeMask mask) const;
  const TermMap& terms() const { return terms_; }

  /// Accumulates `coefficient` onto the term for `mask`, erasing it when the
  /// sum reaches zero.
  void add_term(BladeMask mask, std::int64_t coefficient);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  int dimension_;
  TermMap terms_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator*(std::int64_t scale, const Multivector& a);

/// Bilinear extension of blade_product. Throws on dimension mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Per-term sign (-1)^{g(g-1)/2}; masks unchanged.
Multivector reversion(const Multivector& a);

/// Inner product of Eqs. (1)-(2) restricted to orthonormal basis blades:
/// equal masks contribute coeff_a * coeff_b * (-1)^{g(g-1)/2}, distinct
/// masks contribute nothing.
std::int64_t inner_product(const Multivector& a, const Multivector& b);

/// "c_00111 - c_10001"; the zero multivector prints as "0".
std::string to_string(const Multivector& a);

/// Inverse of to_string. Throws std::invalid_argument on malformed input or
/// on blade literals whose width differs from `dimension`.
Multivector parse_multivector(std::string_view text, int dimension);

}  // namespace gavsa
