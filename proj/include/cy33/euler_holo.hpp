#pragma once

#include <vector>

#include "cy33/cox_geometry.hpp"
#include "cy33/lattice_fan.hpp"
#include "cy33/rational.hpp"

namespace cy33 {

// Truncated Laurent series in the localization variable t. Exponents below
// `lo` are exactly zero; coefficients are tracked for lo .. lo+c.size()-1;
// everything above is unknown (never fabricated). Arithmetic propagates the
// known window soundly.
struct TruncatedLaurent {
  long lo = 0;
  std::vector<Rat> c;

  long hi() const { return lo + static_cast<long>(c.size()); }
  Rat at(long e) const;  // exact coefficient; throws beyond the known window
};

TruncatedLaurent tl_add(const TruncatedLaurent& a, const TruncatedLaurent& b);
TruncatedLaurent tl_sub(const TruncatedLaurent& a, const TruncatedLaurent& b);
TruncatedLaurent tl_mul(const TruncatedLaurent& a, const TruncatedLaurent& b);
// Multiplicative inverse; requires a nonzero tracked coefficient (otherwise
// the valuation is not determined at this precision) -- throws.
TruncatedLaurent tl_inverse(const TruncatedLaurent& a);

// prod_i (1 + t^i)^(m_{i-1}) via generalized binomial series, window [0, G).
TruncatedLaurent monomial_by_vector(const std::vector<long>& m, int guard);

// One localization summand for the chart of a maximal unimodular cone:
// x^{m_sigma} / prod_j (1 - x^{w_j}), with m_sigma = -A^{-1} b (b = divisor
// coefficients on the cone's generators) and w_j the dual basis (columns of
// A^{-1}), everything under the substitution x_i = 1 + t^i.
TruncatedLaurent chi_piece(const Fan& fan, const Cone& delta,
                           const ToricDivisor& d, int guard);

// Full localization sum: the poles of the summands must cancel exactly
// (checked: every tracked negative-exponent coefficient vanishes); the t^0
// coefficient is the integral answer.
long chi_of_divisor(const Fan& fan, const ToricDivisor& d, int guard = 64,
                    int threads = 1);

struct HoloChiResult {
  long chi_O = 0;
  long chi_mL1 = 0;
  long chi_mL2 = 0;
  long chi_mL1mL2 = 0;
  long chi_W0 = 0;
  int guard = 0;
};

// chi(O_{W0}) through the Koszul identity
// chi(O) - chi(O(-Y1)) - chi(O(-Y2)) + chi(O(-Y1-Y2)) = 1 - 0 - 0 + 1 = 2.
HoloChiResult koszul_chi_W0(const Fan& pi, int guard = 64, int threads = 1);

}  // namespace cy33
