#include "gavsa/multivector.hpp"

#include <stdexcept>

namespace gavsa {

namespace {

void require_same_dimension(const Multivector& a, const Multivector& b, const char* op) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

Multivector::Multivector(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw std::invalid_argument("Multivector: dimension out of range");
  }
}

Multivector Multivector::scalar_unit(int dimension) {
  return blade(dimension, 0, 1);
}

Multivector Multivector::blade(int dimension, BladeMask mask, std::int64_t coefficient) {
  Multivector result(dimension);
  result.add_term(mask, coefficient);
  return result;
}

std::int64_t Multivector::coefficient(BladeMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0 : it->second;
}

void Multivector::add_term(BladeMask mask, std::int64_t coefficient) {
  if (coefficient == 0) return;
  if (dimension_ < 64 && (mask >> dimension_) != 0) {
    throw std::invalid_argument("Multivector::add_term: mask wider than dimension");
  }
  auto [it, inserted] = terms_.emplace(mask, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "operator+");
  Multivector result = a;
  for (const auto& [mask, coeff] : b.terms()) result.add_term(mask, coeff);
  return result;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "operator-");
  Multivector result = a;
  for (const auto& [mask, coeff] : b.terms()) result.add_term(mask, -coeff);
  return result;
}

Multivector operator*(std::int64_t scale, const Multivector& a) {
  Multivector result(a.dimension());
  if (scale == 0) return result;
  for (const auto& [mask, coeff] : a.terms()) result.add_term(mask, scale * coeff);
  return result;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "geometric_product");
  Multivector result(a.dimension());
  for (const auto& [mask_a, coeff_a] : a.terms()) {
    for (const auto& [mask_b, coeff_b] : b.terms()) {
      const SignedBlade product = blade_product(mask_a, mask_b);
      result.add_term(product.mask, product.sign * coeff_a * coeff_b);
    }
  }
  return result;
}

Multivector reversion(const Multivector& a) {
  Multivector result(a.dimension());
  for (const auto& [mask, coeff] : a.terms()) {
    result.add_term(mask, reversion_sign(blade_grade(mask)) * coeff);
  }
  return result;
}

std::int64_t inner_product(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b, "inner_product");
  // Walk the smaller term map.
  const Multivector& small = a.blade_count() <= b.blade_count() ? a : b;
  const Multivector& large = a.blade_count() <= b.blade_count() ? b : a;
  std::int64_t total = 0;
  for (const auto& [mask, coeff] : small.terms()) {
    const std::int64_t other = large.coefficient(mask);
    if (other != 0) total += coeff * other * self_inner_sign(mask);
  }
  return total;
}

std::string to_string(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, coeff] : a.terms()) {
    std::int64_t magnitude = coeff;
    if (coeff < 0) {
      out += first ? "- " : " - ";
      magnitude = -coeff;
    } else if (!first) {
      out += " + ";
    }
    if (magnitude != 1) {
      out += std::to_string(magnitude);
      out += ' ';
    }
    out += format_blade(mask, a.dimension());
    first = false;
  }
  return out;
}

Multivector parse_multivector(std::string_view text, int dimension) {
  Multivector result(dimension);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return result;
  bool first = true;
  while (pos < text.size()) {
    std::int64_t sign = 1;
    skip_space();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = (text[pos] == '-') ? -1 : +1;
      ++pos;
      skip_space();
    } else if (!first) {
      throw std::invalid_argument("parse_multivector: missing +/- between terms");
    }
    std::int64_t magnitude = 1;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      magnitude = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        magnitude = magnitude * 10 + (text[pos] - '0');
        ++pos;
      }
      skip_space();
    }
    if (text.size() - pos < 3 || text[pos] != 'c' || text[pos + 1] != '_') {
      throw std::invalid_argument("parse_multivector: expected blade literal");
    }
    const std::size_t start = pos;
    pos += 2;
    while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
    int width = 0;
    const SignedBlade blade = parse_blade(text.substr(start, pos - start), &width);
    if (width != dimension) {
      throw std::invalid_argument("parse_multivector: blade width differs from dimension");
    }
    result.add_term(blade.mask, sign * blade.sign * magnitude);
    first = false;
    skip_space();
  }
  return result;
}

}  // namespace gavsa
