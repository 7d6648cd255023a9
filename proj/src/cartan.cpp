#include "gavsa/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gavsa {

namespace {

// Tensor-factor description of one generator: `total` 2x2 factors, the
// sigma_2/sigma_3 factor at position `sigma_pos` (0-based from the left),
// sigma_1 at every position before it, identity after it.
struct GeneratorFactors {
  int total = 0;
  int sigma_pos = 0;
  bool uses_sigma2 = false;  // even generator index
};

// The full form grows as 2^n x 2^n and exists for cross-checks; the
// recognition pipeline always uses the reduced form.
constexpr int kMaxFullFormDimension = 12;

GeneratorFactors cartan_factors(int i, int n, CartanForm form) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("cartan_factors: dimension out of range");
  }
  if (form == CartanForm::Full && n > kMaxFullFormDimension) {
    throw std::invalid_argument("cartan_factors: full form is limited to n <= 12");
  }
  if (i < 1 || i > n) {
    throw std::out_of_range("cartan_factors: generator index out of range");
  }
  const int k = (i + 1) / 2;
  const int half = (n + 1) / 2;  // ceil(n/2)
  GeneratorFactors f;
  f.uses_sigma2 = (i % 2 == 0);
  f.total = (form == CartanForm::Full) ? n : half + 1;
  f.sigma_pos = (form == CartanForm::Full) ? (n - k) : (half - k + 1);
  return f;
}

// Row bit of tensor factor position j (factor 0 is the leftmost and owns the
// most significant row bit).
inline std::uint64_t factor_bit(std::uint64_t row, int total, int j) {
  return (row >> (total - 1 - j)) & 1u;
}

// Antidiagonal mask: the sigma_1 prefix always swaps its bits, sigma_2 swaps
// as well, sigma_3 and the identity suffix do not.
std::uint64_t antidiag_mask(const GeneratorFactors& f) {
  std::uint64_t mask = 0;
  for (int j = 0; j < f.sigma_pos; ++j) mask |= std::uint64_t{1} << (f.total - 1 - j);
  if (f.uses_sigma2) mask |= std::uint64_t{1} << (f.total - 1 - f.sigma_pos);
  return mask;
}

// Entry value of the generator at a given row: sigma_3 contributes +/-1,
// sigma_2 contributes -i on row bit 0 and +i on row bit 1.
GaussianInt generator_value(const GeneratorFactors& f, std::uint64_t row) {
  const std::uint64_t bit = factor_bit(row, f.total, f.sigma_pos);
  if (f.uses_sigma2) return bit ? GaussianInt{0, 1} : GaussianInt{0, -1};
  return bit ? GaussianInt{-1, 0} : GaussianInt{1, 0};
}

std::vector<GeneratorFactors> blade_factor_chain(BladeMask mask, int n, CartanForm form) {
  std::vector<GeneratorFactors> chain;
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (n - i)) & 1u) chain.push_back(cartan_factors(i, n, form));
  }
  return chain;
}

// Walks the one-nonzero-per-row chain for `row`, returning the final column
// and the accumulated entry value.
std::pair<std::uint64_t, GaussianInt> blade_row_entry(
    const std::vector<GeneratorFactors>& chain, std::uint64_t row) {
  GaussianInt value{1, 0};
  std::uint64_t current = row;
  for (const GeneratorFactors& f : chain) {
    value = value * generator_value(f, current);
    current ^= antidiag_mask(f);
  }
  return {current, value};
}

void require_same_shape(const Signature& x, const Signature& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(Index side) {
  ComplexMatrix m(side);
  for (Index r = 0; r < side; ++r) m.add(r, r, GaussianInt{1, 0});
  return m;
}

GaussianInt ComplexMatrix::at(Index row, Index col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? GaussianInt{} : it->second;
}

void ComplexMatrix::add(Index row, Index col, GaussianInt value) {
  if (value.is_zero()) return;
  if (row >= side_ || col >= side_) {
    throw std::out_of_range("ComplexMatrix::add: index out of range");
  }
  auto [it, inserted] = entries_.emplace(std::make_pair(row, col), value);
  if (!inserted) {
    it->second = it->second + value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.side() != b.side()) {
    throw std::invalid_argument("ComplexMatrix product: side mismatch");
  }
  // Row index of b -> its nonzero entries, for sparse row lookup.
  std::map<ComplexMatrix::Index,
           std::vector<std::pair<ComplexMatrix::Index, GaussianInt>>>
      rows_of_b;
  for (const auto& [pos, value] : b.entries()) {
    rows_of_b[pos.first].emplace_back(pos.second, value);
  }
  ComplexMatrix result(a.side());
  for (const auto& [pos, value] : a.entries()) {
    auto it = rows_of_b.find(pos.second);
    if (it == rows_of_b.end()) continue;
    for (const auto& [col, bval] : it->second) {
      result.add(pos.first, col, value * bval);
    }
  }
  return result;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.side() != b.side()) {
    throw std::invalid_argument("ComplexMatrix sum: side mismatch");
  }
  ComplexMatrix result = a;
  for (const auto& [pos, value] : b.entries()) result.add(pos.first, pos.second, value);
  return result;
}

ComplexMatrix scale(GaussianInt s, const ComplexMatrix& a) {
  ComplexMatrix result(a.side());
  for (const auto& [pos, value] : a.entries()) result.add(pos.first, pos.second, s * value);
  return result;
}

std::string dump_sparse(const ComplexMatrix& m) {
  std::ostringstream out;
  for (const auto& [pos, value] : m.entries()) {
    out << pos.first << ' ' << pos.second << ' ' << value.re << ' ' << value.im << '\n';
  }
  return out.str();
}

ComplexMatrix generator_matrix(int i, int n, CartanForm form) {
  const GeneratorFactors f = cartan_factors(i, n, form);
  const std::uint64_t side = std::uint64_t{1} << f.total;
  const std::uint64_t a = antidiag_mask(f);
  ComplexMatrix m(side);
  for (std::uint64_t row = 0; row < side; ++row) {
    m.add(row, row ^ a, generator_value(f, row));
  }
  return m;
}

namespace {

int matrix_factor_count(int n, CartanForm form) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("cartan: dimension out of range");
  }
  if (form == CartanForm::Full && n > kMaxFullFormDimension) {
    throw std::invalid_argument("cartan: full form is limited to n <= 12");
  }
  return (form == CartanForm::Full) ? n : (n + 1) / 2 + 1;
}

}  // namespace

ComplexMatrix blade_matrix(const SignedBlade& b, int n, CartanForm form) {
  const int total = matrix_factor_count(n, form);
  const std::uint64_t side = std::uint64_t{1} << total;
  const auto chain = blade_factor_chain(b.mask, n, form);
  ComplexMatrix m(side);
  for (std::uint64_t row = 0; row < side; ++row) {
    auto [col, value] = blade_row_entry(chain, row);
    m.add(row, col, b.sign * value);
  }
  return m;
}

ComplexMatrix multivector_matrix(const Multivector& a, CartanForm form) {
  const int n = a.dimension();
  const int total = matrix_factor_count(n, form);
  ComplexMatrix m(std::uint64_t{1} << total);
  for (const auto& [mask, coeff] : a.terms()) {
    const auto chain = blade_factor_chain(mask, n, form);
    for (std::uint64_t row = 0; row < m.side(); ++row) {
      auto [col, value] = blade_row_entry(chain, row);
      m.add(row, col, coeff * value);
    }
  }
  return m;
}

Signature::Signature(int rows_log2, int cols_log2)
    : rows_log2_(rows_log2), cols_log2_(cols_log2) {
  if (rows_log2 < 0 || cols_log2 < rows_log2 || cols_log2 > 62) {
    throw std::invalid_argument("Signature: bad shape");
  }
}

Signature Signature::from_dense(const std::vector<std::vector<GaussianInt>>& cells) {
  const std::uint64_t nrows = cells.size();
  if (nrows == 0 || (nrows & (nrows - 1)) != 0) {
    throw std::invalid_argument("Signature::from_dense: rows must be a power of two");
  }
  const std::uint64_t ncols = cells.front().size();
  if (ncols < nrows || (ncols & (ncols - 1)) != 0) {
    throw std::invalid_argument("Signature::from_dense: cols must be a power of two >= rows");
  }
  int rlog = 0, clog = 0;
  while ((std::uint64_t{1} << rlog) < nrows) ++rlog;
  while ((std::uint64_t{1} << clog) < ncols) ++clog;
  Signature s(rlog, clog);
  for (std::uint64_t r = 0; r < nrows; ++r) {
    if (cells[r].size() != ncols) {
      throw std::invalid_argument("Signature::from_dense: ragged rows");
    }
    for (std::uint64_t c = 0; c < ncols; ++c) s.add(r, c, cells[r][c]);
  }
  return s;
}

GaussianInt Signature::at(std::uint64_t row, std::uint64_t col) const {
  auto it = slices_.find(row ^ col);
  if (it == slices_.end()) return {};
  return it->second[row];
}

void Signature::add(std::uint64_t row, std::uint64_t col, GaussianInt value) {
  if (value.is_zero()) return;
  if (row >= rows() || col >= cols()) {
    throw std::out_of_range("Signature::add: index out of range");
  }
  auto [it, inserted] = slices_.emplace(row ^ col, std::vector<GaussianInt>());
  if (inserted) it->second.assign(rows(), GaussianInt{});
  it->second[row] = it->second[row] + value;
}

std::uint64_t Signature::support_size() const {
  std::uint64_t count = 0;
  for (const auto& [a, values] : slices_) {
    for (const GaussianInt& v : values) count += !v.is_zero();
  }
  return count;
}

std::string Signature::dump_sparse() const {
  std::ostringstream out;
  for (std::uint64_t r = 0; r < rows(); ++r) {
    for (const auto& [a, values] : slices_) {
      if (!values[r].is_zero()) {
        out << r << ' ' << (r ^ a) << ' ' << values[r].re << ' ' << values[r].im << '\n';
      }
    }
  }
  return out.str();
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Compare supports cell by cell; all-zero slices are equivalent to absent.
  for (const auto& [mask, values] : a.slices_) {
    for (std::uint64_t r = 0; r < a.rows(); ++r) {
      if (!(values[r] == b.at(r, r ^ mask))) return false;
    }
  }
  for (const auto& [mask, values] : b.slices_) {
    for (std::uint64_t r = 0; r < b.rows(); ++r) {
      if (!(values[r] == a.at(r, r ^ mask))) return false;
    }
  }
  return true;
}

Signature signature(const Multivector& a, int n) {
  const int half = (n + 1) / 2;
  Signature s(half, half + 1);
  const std::uint64_t rows = std::uint64_t{1} << half;
  for (const auto& [mask, coeff] : a.terms()) {
    const auto chain = blade_factor_chain(mask, n, CartanForm::Reduced);
    for (std::uint64_t row = 0; row < rows; ++row) {
      auto [col, value] = blade_row_entry(chain, row);
      s.add(row, col, coeff * value);
    }
  }
  return s;
}

double HammingValue::value() const {
  return static_cast<double>(common) / static_cast<double>(uncommon);
}

bool operator<(const HammingValue& a, const HammingValue& b) {
  if (a.infinite()) return false;
  if (b.infinite()) return true;
  // C_a/U_a < C_b/U_b with positive denominators.
  return static_cast<__int128>(a.common) * b.uncommon <
         static_cast<__int128>(b.common) * a.uncommon;
}

bool operator==(const HammingValue& a, const HammingValue& b) {
  if (a.infinite() || b.infinite()) return a.infinite() == b.infinite();
  return static_cast<__int128>(a.common) * b.uncommon ==
         static_cast<__int128>(b.common) * a.uncommon;
}

double EuclideanValue::value() const { return 1.0 / denominator_sum; }

bool operator<(const EuclideanValue& a, const EuclideanValue& b) {
  // Larger measure means smaller denominator sum.
  return a.denominator_sum > b.denominator_sum;
}

bool operator==(const EuclideanValue& a, const EuclideanValue& b) {
  return a.denominator_sum == b.denominator_sum;
}

HammingValue hamming_measure(const Signature& x, const Signature& y) {
  require_same_shape(x, y, "hamming_measure");
  std::int64_t common = 0;
  for (const auto& [mask, xvalues] : x.slices()) {
    auto it = y.slices().find(mask);
    if (it == y.slices().end()) continue;
    const auto& yvalues = it->second;
    for (std::uint64_t r = 0; r < x.rows(); ++r) {
      common += !xvalues[r].is_zero() && !yvalues[r].is_zero();
    }
  }
  const std::int64_t total = static_cast<std::int64_t>(x.total_entries());
  return HammingValue{common, total - common};
}

EuclideanValue euclidean_measure(const Signature& x, const Signature& y) {
  require_same_shape(x, y, "euclidean_measure");
  double sum = 0.0;
  // Union of slices; both-zero cells contribute nothing.
  auto xi = x.slices().begin();
  auto yi = y.slices().begin();
  auto accumulate = [&](const std::vector<GaussianInt>* xv,
                        const std::vector<GaussianInt>* yv) {
    const std::uint64_t rows = x.rows();
    for (std::uint64_t r = 0; r < rows; ++r) {
      const std::int64_t nx = xv ? (*xv)[r].norm2() : 0;
      const std::int64_t ny = yv ? (*yv)[r].norm2() : 0;
      const std::int64_t diff = nx > ny ? nx - ny : ny - nx;
      if (diff != 0) sum += std::sqrt(static_cast<double>(diff));
    }
  };
  while (xi != x.slices().end() || yi != y.slices().end()) {
    if (yi == y.slices().end() || (xi != x.slices().end() && xi->first < yi->first)) {
      accumulate(&xi->second, nullptr);
      ++xi;
    } else if (xi == x.slices().end() || yi->first < xi->first) {
      accumulate(nullptr, &yi->second);
      ++yi;
    } else {
      accumulate(&xi->second, &yi->second);
      ++xi;
      ++yi;
    }
  }
  return EuclideanValue{sum};
}

}  // namespace gavsa
