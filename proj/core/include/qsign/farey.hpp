#pragma once

#include <vector>

#include "qsign/rational.hpp"

namespace qsign {

/// Arc [h/k - theta1, h/k + theta2] of the Farey dissection of order N.
struct FareyArc {
  long h;
  long k;
  Rational theta1;  // distance to the left mediant
  Rational theta2;  // distance to the right mediant
  long order;
};

/// All arcs for 0 <= h < k <= N, gcd(h,k) = 1, in increasing h/k. The arc at 0/1 wraps
/// around through the neighbour (N-1)/N - 1. Requires N >= 1.
std::vector<FareyArc> farey_arcs(long N);

}  // namespace qsign
