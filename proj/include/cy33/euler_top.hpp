#pragma once

#include <map>
#include <vector>

#include "cy33/cox_geometry.hpp"
#include "cy33/lattice_fan.hpp"

namespace cy33 {

struct StratumChiRecord {
  Cone sigma;
  Cone delta;
  int surviving_equations;
  int stratum_dim;  // k = 5 - dim sigma
  long chi;
};

// chi of the vanishing locus of the given Laurent equations inside a k-torus,
// by the BKK mixed-volume formula: with m nonzero equations (nonzero
// constants force an empty locus), chi = (-1)^(k-m) * sum over size-(k-m)
// multisets drawn from the equations of mixed_volume_ie(equations+multiset,k).
// Overdetermined systems (m > k) give 0. Throws on the k = 0, m = 0 case,
// where the mixed-volume convention (0) and the true chi of a point (1)
// disagree; it must not occur for this geometry.
long chi_by_equations(const std::vector<ChartPoly>& equations, int k);

// chi of the special fiber's intersection with the orbit stratum of sigma.
long stratum_chi(const Fan& pi, const Cone& sigma);
long stratum_chi_in_chart(const Fan& pi, const Cone& sigma, const Cone& delta);

struct ChiTopResult {
  long total = 0;
  std::map<int, long> by_dimension;  // stratum dim k -> partial sum
  std::vector<StratumChiRecord> records;
};

// Full stratum-by-stratum Euler characteristic of the special fiber; checks
// saturation of every stratum and aborts on a violation.
ChiTopResult total_chi_Y0(const Fan& pi, int threads = 1);

}  // namespace cy33
