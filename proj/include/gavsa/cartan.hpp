#pragma once

// Cartan matrix representation of Cl_n: generators as Kronecker products of
// Pauli matrices, in the full form (2^n x 2^n) and the reduced form
// (2^{ceil(n/2)+1} square). All entries are Gaussian integers and every
// computation below is exact; the similarity measures divide only at the end.
//
// A single generator matrix has exactly one nonzero per row, at column
// row XOR A for a fixed antidiagonal mask A, so blades and signatures are
// built in closed form without materialising Kronecker products.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gavsa/multivector.hpp"

namespace gavsa {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  std::int64_t norm2() const { return re * re + im * im; }

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator*(std::int64_t s, GaussianInt a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

enum class CartanForm { Full, Reduced };

/// Exact sparse complex-integer matrix; zero entries are never stored.
class ComplexMatrix {
 public:
  using Index = std::uint64_t;
  using EntryMap = std::map<std::pair<Index, Index>, GaussianInt>;

  explicit ComplexMatrix(Index side) : side_(side) {}

  static ComplexMatrix identity(Index side);

  Index side() const { return side_; }
  const EntryMap& entries() const { return entries_; }
  GaussianInt at(Index row, Index col) const;
  void add(Index row, Index col, GaussianInt value);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  Index side_;
  EntryMap entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(GaussianInt s, const ComplexMatrix& a);

/// Sparse triplet dump "row col re im" per line, row-major order.
std::string dump_sparse(const ComplexMatrix& m);

/// Matrix of generator b_i (1 <= i <= n) in the requested form.
ComplexMatrix generator_matrix(int i, int n, CartanForm form);

/// Ordered product of generator matrices for the set bits of `b.mask`
/// (ascending generator index), scaled by `b.sign`.
ComplexMatrix blade_matrix(const SignedBlade& b, int n, CartanForm form);

/// Coefficient-weighted sum of blade matrices.
ComplexMatrix multivector_matrix(const Multivector& a, CartanForm form);

/// Signature: the top 2^{ceil(n/2)} rows of the reduced matrix, holding one
/// box from each diagonal. Stored as per-diagonal slices: the entries of
/// slice A live at (r, r XOR A) for r in [0, rows).
class Signature {
 public:
  Signature(int rows_log2, int cols_log2);

  /// Builds a dense-specified signature; for fixtures and small tests.
  static Signature from_dense(const std::vector<std::vector<GaussianInt>>& cells);

  std::uint64_t rows() const { return std::uint64_t{1} << rows_log2_; }
  std::uint64_t cols() const { return std::uint64_t{1} << cols_log2_; }
  std::uint64_t total_entries() const { return rows() * cols(); }

  GaussianInt at(std::uint64_t row, std::uint64_t col) const;
  void add(std::uint64_t row, std::uint64_t col, GaussianInt value);

  const std::map<std::uint64_t, std::vector<GaussianInt>>& slices() const { return slices_; }

  /// Number of nonzero entries.
  std::uint64_t support_size() const;

  std::string dump_sparse() const;

  friend bool operator==(const Signature& a, const Signature& b);

 private:
  int rows_log2_;
  int cols_log2_;
  // Diagonal mask A -> column of values indexed by row; slices whose values
  // are all zero may be present, zero cells count as zero either way.
  std::map<std::uint64_t, std::vector<GaussianInt>> slices_;
};

Signature signature(const Multivector& a, int n);

/// Hamming measure H = C/U on signature supports; U counts every position
/// where the entries are not both nonzero, including both-zero positions.
/// Infinite when U = 0. Comparisons are exact (integer cross products).
struct HammingValue {
  std::int64_t common = 0;
  std::int64_t uncommon = 0;

  bool infinite() const { return uncommon == 0; }
  double value() const;
};

bool operator<(const HammingValue& a, const HammingValue& b);
bool operator==(const HammingValue& a, const HammingValue& b);

/// Euclidean measure E = 1 / sum_ij sqrt(| |x_ij|^2 - |y_ij|^2 |), infinite
/// when the sum vanishes (which is exact: each summand is sqrt of a
/// nonnegative integer).
struct EuclideanValue {
  double denominator_sum = 0.0;

  bool infinite() const { return denominator_sum == 0.0; }
  double value() const;
};

bool operator<(const EuclideanValue& a, const EuclideanValue& b);
bool operator==(const EuclideanValue& a, const EuclideanValue& b);

HammingValue hamming_measure(const Signature& x, const Signature& y);
EuclideanValue euclidean_measure(const Signature& x, const Signature& y);

}  // namespace gavsa
