#pragma once

#include <array>
#include <vector>

#include "cy33/rational.hpp"

namespace cy33 {

// Power series in z over Q, truncated at a fixed order: c[k] is the z^k
// coefficient, 0 <= k <= order(). Arithmetic truncates to the shorter
// operand and never fabricates coefficients beyond it.
struct PowerSeriesQ {
  std::vector<Rat> c;

  int order() const { return static_cast<int>(c.size()) - 1; }
  Rat at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Rat(0); }

  static PowerSeriesQ constant(const Rat& v, int order);
  static PowerSeriesQ zero(int order) { return constant(Rat(0), order); }
  static PowerSeriesQ one(int order) { return constant(Rat(1), order); }
};

PowerSeriesQ ps_add(const PowerSeriesQ& a, const PowerSeriesQ& b);
PowerSeriesQ ps_sub(const PowerSeriesQ& a, const PowerSeriesQ& b);
PowerSeriesQ ps_mul(const PowerSeriesQ& a, const PowerSeriesQ& b);
PowerSeriesQ ps_scale(const Rat& s, const PowerSeriesQ& a);
PowerSeriesQ ps_inverse(const PowerSeriesQ& a);           // unit constant term
PowerSeriesQ ps_log(const PowerSeriesQ& a);               // a(0) = 1
PowerSeriesQ ps_exp(const PowerSeriesQ& a);               // a(0) = 0
PowerSeriesQ ps_compose(const PowerSeriesQ& f, const PowerSeriesQ& g);  // g(0)=0
PowerSeriesQ ps_ztimes_ddz(const PowerSeriesQ& a);        // z d/dz

// Polynomial in the formal symbol L (= t = log z) with power-series
// coefficients; lc[k] multiplies L^k. Degree never exceeds 4 (the w^4 term of
// the generating series is needed to close the I_{p,q} recursion at p = 4).
struct LogSeries {
  std::vector<PowerSeriesQ> lc;

  int ldeg() const { return static_cast<int>(lc.size()) - 1; }
  bool pure() const;  // no L-dependence beyond degree 0
};

LogSeries ls_add(const LogSeries& a, const LogSeries& b);
LogSeries ls_scale(const Rat& s, const LogSeries& a);
LogSeries ls_mul_ps(const LogSeries& a, const PowerSeriesQ& f);
// d/dt with t = log z: theta(z^n L^k) = n z^n L^k + k z^n L^{k-1}.
LogSeries ls_theta(const LogSeries& a);
bool ls_is_zero(const LogSeries& a);

// The Picard-Fuchs operator theta^4 - 3^6 z (theta+1/3)^2 (theta+2/3)^2,
// stored expanded as sum_k a_k(z) theta^k.
struct PFOperator {
  std::array<PowerSeriesQ, 5> a;
};

PFOperator make_pf_operator(int order);
LogSeries pf_apply(const PFOperator& op, const LogSeries& s);

// Solutions I_{0,q}, q = 0..4: coefficients of w^q in
// e^{wt} sum_d z^d prod_{r<=3d}(3w+r)^2 / prod_{r<=d}(w+r)^6, modulo w^5.
std::array<LogSeries, 5> i0_series(int order);

// The full I_{p,q} recursion I_{p,q} = theta(I_{p-1,q} / I_{p-1,p-1}); the
// diagonal entries are pure power series with constant term 1.
struct IpqTable {
  std::array<std::array<LogSeries, 5>, 5> i;  // i[p][q]
  std::array<PowerSeriesQ, 5> diagonal;       // I_{p,p} as pure series
};

IpqTable ipq_table(int order);

// Mirror map: log Q = I_{0,1}/I_{0,0} = L + J(z), Q = z exp(J), J(0) = 0.
struct MirrorMap {
  PowerSeriesQ j;         // the pure part J
  PowerSeriesQ q_over_z;  // exp(J)
};

MirrorMap mirror_map(int order);

// Compositional inverse of Q(z) (input and output normalized as series with
// zero constant term and unit linear term).
PowerSeriesQ invert_mirror(const PowerSeriesQ& q, int order);

// Solves (z d/dz) Y = -(1/2) (a3/a4) Y, Y(0) = 1.
PowerSeriesQ yukawa_from_pf(const PFOperator& op, int order);

}  // namespace cy33
