#include <doctest.h>

#include "gavsa/blade.hpp"
#include "gavsa/rng.hpp"

using namespace gavsa;

namespace {

BladeMask b(const char* literal) { return parse_blade(literal).mask; }

}  // namespace

TEST_CASE("sign exponent on worked products") {
  // b_1 * b_1b_2 = b_2
  CHECK(sign_exponent_d(b("c_100"), b("c_110")) == 0);
  // b_1b_2 * b_1 = -b_2
  CHECK(sign_exponent_d(b("c_110"), b("c_100")) == 1);
  // scalar left operand
  CHECK(sign_exponent_d(b("c_00000"), b("c_10110")) == 0);
}

TEST_CASE("blade products from the worked record") {
  CHECK(blade_product(b("c_10000"), b("c_10000")) == SignedBlade{+1, b("c_00000")});
  CHECK(blade_product(b("c_11000"), b("c_10000")) == SignedBlade{-1, b("c_01000")});
  CHECK(blade_product(b("c_00010"), b("c_00100")) == SignedBlade{-1, b("c_00110")});
  CHECK(blade_product(b("c_10001"), b("c_11000")) == SignedBlade{+1, b("c_01001")});
}

TEST_CASE("projective XOR law, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const BladeMask limit = BladeMask{1} << n;
    for (BladeMask x = 0; x < limit; ++x) {
      for (BladeMask y = 0; y < limit; ++y) {
        CHECK(blade_product(x, y).mask == (x ^ y));
      }
    }
  }
}

TEST_CASE("squared blades follow the reversion sign, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const BladeMask limit = BladeMask{1} << n;
    for (BladeMask x = 0; x < limit; ++x) {
      const SignedBlade square = blade_product(x, x);
      CHECK(square.mask == 0);
      CHECK(square.sign == reversion_sign(blade_grade(x)));
    }
  }
}

TEST_CASE("blade literal round trip") {
  CHECK(format_blade(b("c_01101"), 5) == "c_01101");
  CHECK(parse_blade("- c_0110").sign == -1);
  CHECK(parse_blade("+c_1").mask == 1);
  CHECK_THROWS(parse_blade("c_"));
  CHECK_THROWS(parse_blade("d_0101"));

  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng.uniform_below(20));
    const BladeMask mask = rng.uniform_mask(n);
    int width = 0;
    CHECK(parse_blade(format_blade(mask, n), &width).mask == mask);
    CHECK(width == n);
  }
}
