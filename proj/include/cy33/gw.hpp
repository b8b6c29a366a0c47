#pragma once

#include <vector>

#include "cy33/series.hpp"

namespace cy33 {

// Genus-one invariants read off from the B-model generating series: the
// log Q coefficient n1_0 plus the Q^d coefficients for d = 1..order.
struct GenusOneSeries {
  Rat n1_0;
  std::vector<Rat> n1;   // n1[d-1] is the coefficient of Q^d
  Rat constant;          // Q^0 term, reported separately
  int order = 0;
};

// -(1/24) c2.H for the stored intersection data c2.H = 54 (H^3 = 9): -9/4.
Rat n1_zero(long c2_dot_h = 54);

// The genus-one series in the z coordinate:
// -(9/4) L - (7/12) log(1 - 3^6 z) - 6 log I~0
//   - (1/2)(6 log I~0 + 3 log I_{1,1} + log I_{2,2}).
LogSeries f1a_in_z(int order);

// Cancels the L term against (9/4) log Q, substitutes z = z(Q), and reads
// off coefficients. Aborts if L fails to cancel exactly.
GenusOneSeries n1_invariants(int order);

}  // namespace cy33
