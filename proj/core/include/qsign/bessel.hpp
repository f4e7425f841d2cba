#pragma once

#include <cstddef>

#include "qsign/enclosure.hpp"
#include "qsign/errors.hpp"

namespace qsign {

struct BesselStats {
  std::size_t terms = 0;
  bool tail_certified = false;
};

/// I_{-1}(x) = sum_{m>=1} (x/2)^{2m-1} / (m! (m-1)!), which equals I_1(x) because the m = 0 term
/// carries 1/Gamma(0) = 0. The remainder after M terms is bounded by a geometric series once
/// (x/2)^2 / ((M+1)(M+2)) < 1/2. Requires x >= 0.
Enclosure bessel_Im1(const Enclosure& x, long prec, BesselStats* stats = nullptr);

/// Lemma-style bracket e^x/(10 sqrt x) < I_{-1}(x) < sqrt(pi/8) e^x / sqrt x for x >= 3.
/// True when the enclosure of I_{-1}(x) lies strictly inside, False when it lies strictly
/// outside, Unknown on overlap.
Verdict wang_bounds_hold(const Enclosure& x);

/// The lower bracket e^x/(10 sqrt x), enclosed.
Enclosure wang_lower(const Enclosure& x);
Enclosure wang_upper(const Enclosure& x);

}  // namespace qsign
