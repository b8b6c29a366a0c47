#pragma once

#include <map>
#include <vector>

#include "cy33/lattice_fan.hpp"
#include "cy33/rational.hpp"

namespace cy33 {

// Monomial in the Cox ring of the subdividing fan: sparse exponent map over
// the 110 ray variables.
struct CoxMonomial {
  std::map<int, int> exponents;  // ray index -> exponent > 0
};

struct CoxPolynomial {
  std::vector<std::pair<Rat, CoxMonomial>> terms;
};

// Integer toric divisor, one coefficient per fan ray.
struct ToricDivisor {
  std::vector<long> coeffs;
};

// Laurent polynomial on a maximal-cone chart: exponent vector (one entry per
// chart generator, in generator order) -> coefficient.
using ChartPoly = std::map<std::vector<long>, Rat>;

// b_t: the Cox monomial whose exponent on the generator with index triple
// (i,j,k) is the number of occurrences of t in the triple.
CoxMonomial monomial_b(const Fan& pi, int t);

// Defining equations of the special fiber: h1 = -(b1+b2+b3),
// h2 = -(b4+b5+b6) (the psi-term vanishes at psi = 0).
CoxPolynomial h1_at_psi0(const Fan& pi);
CoxPolynomial h2_at_psi0(const Fan& pi);

// Restriction of a Cox polynomial to the torus-orbit stratum of sigma inside
// the chart of delta: variables outside delta are set to 1, monomials with a
// positive exponent on a sigma generator are deleted, like terms combine.
// Requires sigma to be a face of delta.
ChartPoly restrict_to_stratum(const Fan& pi, const CoxPolynomial& p,
                              const Cone& sigma, const Cone& delta);

// The divisor classes cutting out the two hypersurface components:
// L1 = -D_{v123} + sum of the 55 u-ray divisors; L2 symmetric.
ToricDivisor divisor_L1(const Fan& pi);
ToricDivisor divisor_L2(const Fan& pi);

// A nonzero Laurent polynomial is saturated when its Newton polytope has no
// lattice points besides the polynomial's own monomials.
bool saturated(const ChartPoly& p);

// Saturation of both restricted defining equations on a stratum (the BKK
// genericity input).
bool verify_saturation(const Fan& pi, const Cone& sigma, const Cone& delta);

// Same class-group degree: the exponent difference is a principal divisor,
// i.e. r -> a_r - b_r is linear in the ray generators.
bool same_divisor_class(const Fan& pi, const CoxMonomial& a, const CoxMonomial& b);

}  // namespace cy33
