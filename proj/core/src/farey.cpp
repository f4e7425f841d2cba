#include "qsign/farey.hpp"

#include "qsign/errors.hpp"

namespace qsign {

std::vector<FareyArc> farey_arcs(long N) {
  if (N < 1) throw usage_error("farey_arcs needs N >= 1");
  // Farey sequence 0/1, 1/N, ..., 1/1 by the next-term recurrence.
  std::vector<std::pair<long, long>> seq;
  long a = 0, b = 1, c = 1, d = N;
  seq.emplace_back(a, b);
  while (c <= N) {
    const long kq = (N + b) / d;
    const long e = kq * c - a, f = kq * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
    seq.emplace_back(a, b);
    if (a == 1 && b == 1) break;
  }
  std::vector<FareyArc> arcs;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const auto [h, k] = seq[i];
    // Left neighbour denominator: for 0/1 the wrapped neighbour (N-1)/N - 1 = -1/N.
    const long k_prev = i == 0 ? N : seq[i - 1].second;
    const long k_next = seq[i + 1].second;
    arcs.push_back({h, k, Rational(1, k * (k + k_prev)), Rational(1, k * (k + k_next)), N});
  }
  return arcs;
}

}  // namespace qsign
