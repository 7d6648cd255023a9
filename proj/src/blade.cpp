#include "gavsa/blade.hpp"

#include <stdexcept>

namespace gavsa {

std::string format_blade(BladeMask mask, int dimension) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw std::invalid_argument("format_blade: dimension out of range");
  }
  if (dimension < 64 && (mask >> dimension) != 0) {
    throw std::invalid_argument("format_blade: mask wider than dimension");
  }
  std::string out = "c_";
  for (int i = dimension - 1; i >= 0; --i) {
    out.push_back(((mask >> i) & 1u) ? '1' : '0');
  }
  return out;
}

SignedBlade parse_blade(std::string_view text, int* width_out) {
  int sign = 1;
  std::size_t pos = 0;
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = (text[pos] == '-') ? -1 : +1;
    ++pos;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  if (text.size() - pos < 3 || text[pos] != 'c' || text[pos + 1] != '_') {
    throw std::invalid_argument("parse_blade: expected c_ prefix");
  }
  pos += 2;
  BladeMask mask = 0;
  int width = 0;
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
    mask = (mask << 1) | static_cast<BladeMask>(text[pos] == '1');
    ++width;
    ++pos;
  }
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (width == 0 || width > kMaxDimension || pos != text.size()) {
    throw std::invalid_argument("parse_blade: malformed blade literal");
  }
  if (width_out != nullptr) *width_out = width;
  return SignedBlade{sign, mask};
}

}  // namespace gavsa
