#include "cy33/gw.hpp"

#include <stdexcept>

namespace cy33 {

Rat n1_zero(long c2_dot_h) { return rat(-c2_dot_h, 24); }

LogSeries f1a_in_z(int order) {
  IpqTable t = ipq_table(order);
  const PowerSeriesQ& i0 = t.diagonal[0];  // I~0 = I_{0,0}, unit series

  PowerSeriesQ one_minus = PowerSeriesQ::one(order);
  one_minus.c[1] = -729;

  PowerSeriesQ pure = ps_scale(rat(-7, 12), ps_log(one_minus));
  // -6 log I~0 - (1/2)(6 log I~0 + ...) = -9 log I~0 - (3/2) log I11 - (1/2) log I22
  pure = ps_add(pure, ps_scale(Rat(-9), ps_log(i0)));
  pure = ps_add(pure, ps_scale(rat(-3, 2), ps_log(t.diagonal[1])));
  pure = ps_add(pure, ps_scale(rat(-1, 2), ps_log(t.diagonal[2])));

  LogSeries f;
  f.lc.resize(2);
  f.lc[0] = pure;
  f.lc[1] = PowerSeriesQ::constant(rat(-9, 4), order);
  return f;
}

GenusOneSeries n1_invariants(int order) {
  LogSeries f = f1a_in_z(order);
  MirrorMap m = mirror_map(order);

  // log Q = L + J; add (9/4) log Q and demand the L part cancels.
  LogSeries logq;
  logq.lc.resize(2);
  logq.lc[0] = m.j;
  logq.lc[1] = PowerSeriesQ::constant(Rat(1), order);
  LogSeries g = ls_add(f, ls_scale(rat(9, 4), logq));
  for (size_t k = 1; k < g.lc.size(); ++k)
    for (const auto& x : g.lc[k].c)
      if (!is_zero(x)) throw std::logic_error("n1_invariants: L term fails to cancel");

  // Substitute z = z(Q).
  PowerSeriesQ q = PowerSeriesQ::zero(order);
  for (int k = 1; k <= order; ++k) q.c[k] = m.q_over_z.at(k - 1);
  PowerSeriesQ zq = invert_mirror(q, order);
  PowerSeriesQ in_q = ps_compose(g.lc[0], zq);

  GenusOneSeries r;
  r.n1_0 = n1_zero();
  r.constant = in_q.at(0);
  r.order = order;
  r.n1.reserve(order);
  for (int d = 1; d <= order; ++d) r.n1.push_back(in_q.at(d));
  return r;
}

}  // namespace cy33
