#include "gavsa/rng.hpp"

#include <cmath>

namespace gavsa {

double Rng::normal(double stddev) {
  // Box-Muller; two words per draw, no cached spare so the stream position
  // is a pure function of the call count.
  double u1 = unit_double();
  const double u2 = unit_double();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  return stddev * radius * std::cos(kTwoPi * u2);
}

}  // namespace gavsa
