#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cy33/series.hpp"

using namespace cy33;

namespace {

PowerSeriesQ geometric(const Rat& r, int order) {
  PowerSeriesQ p = PowerSeriesQ::zero(order);
  Rat x(1);
  for (int k = 0; k <= order; ++k) {
    p.c[k] = x;
    x *= r;
  }
  return p;
}

}  // namespace

TEST_CASE("power series arithmetic") {
  const int D = 10;
  PowerSeriesQ one = PowerSeriesQ::one(D);
  PowerSeriesQ z = PowerSeriesQ::zero(D);
  z.c[1] = 1;

  // (1 - 3z)^-1 is the geometric series in 3z.
  PowerSeriesQ f = ps_sub(one, ps_scale(Rat(3), z));
  PowerSeriesQ g = ps_inverse(f);
  CHECK(g.c == geometric(Rat(3), D).c);
  PowerSeriesQ prod = ps_mul(f, g);
  CHECK(prod.c == one.c);

  // exp and log are mutually inverse.
  PowerSeriesQ a = PowerSeriesQ::zero(D);
  a.c[1] = rat(2, 3);
  a.c[2] = rat(-1, 5);
  a.c[3] = 7;
  CHECK(ps_log(ps_exp(a)).c == a.c);
  CHECK(ps_exp(ps_log(ps_add(one, a))).c == ps_add(one, a).c);

  // Composition: (1-w)^-1 composed with w = z + z^2 as a sanity check.
  PowerSeriesQ w = z;
  w.c[2] = 1;
  PowerSeriesQ geo = geometric(Rat(1), D);
  PowerSeriesQ comp = ps_compose(geo, w);
  // Direct evaluation: sum_k (z + z^2)^k.
  PowerSeriesQ direct = PowerSeriesQ::one(D), pw = PowerSeriesQ::one(D);
  for (int k = 1; k <= D; ++k) {
    pw = ps_mul(pw, w);
    direct = ps_add(direct, pw);
  }
  CHECK(comp.c == direct.c);

  // theta = z d/dz.
  PowerSeriesQ th = ps_ztimes_ddz(w);
  CHECK(th.at(1) == Rat(1));
  CHECK(th.at(2) == Rat(2));

  CHECK_THROWS(ps_inverse(z));
  CHECK_THROWS(ps_exp(one));
  CHECK_THROWS(ps_log(z));
}

TEST_CASE("log series theta rule") {
  const int D = 6;
  // f = z L^2: theta f = z L^2 + 2 z L.
  LogSeries f;
  f.lc.assign(3, PowerSeriesQ::zero(D));
  f.lc[2].c[1] = 1;
  LogSeries tf = ls_theta(f);
  CHECK(tf.lc[2].at(1) == Rat(1));
  CHECK(tf.lc[1].at(1) == Rat(2));
  CHECK(tf.lc[0].at(1) == Rat(0));

  // theta L = 1.
  LogSeries l;
  l.lc.assign(2, PowerSeriesQ::zero(D));
  l.lc[1].c[0] = 1;
  LogSeries tl = ls_theta(l);
  CHECK(tl.lc[0].at(0) == Rat(1));
  CHECK(tl.lc[1].at(0) == Rat(0));
  CHECK_FALSE(l.pure());
  CHECK(f.lc[0].order() == D);
}

TEST_CASE("picard-fuchs operator") {
  const int D = 8;
  PFOperator op = make_pf_operator(D);
  CHECK(op.a[4].at(0) == Rat(1));
  CHECK(op.a[4].at(1) == Rat(-729));
  CHECK(op.a[3].at(1) == Rat(-1458));
  CHECK(op.a[2].at(1) == Rat(-1053));
  CHECK(op.a[1].at(1) == Rat(-324));
  CHECK(op.a[0].at(1) == Rat(-36));

  // P(1) = -36 z + higher order (theta kills constants).
  LogSeries one;
  one.lc = {PowerSeriesQ::one(D)};
  LogSeries p1 = pf_apply(op, one);
  CHECK(p1.lc[0].at(0) == Rat(0));
  CHECK(p1.lc[0].at(1) == Rat(-36));

  // Linearity.
  auto i0 = i0_series(D);
  LogSeries sum = ls_add(i0[0], ls_scale(Rat(5), i0[1]));
  LogSeries lhs = pf_apply(op, sum);
  LogSeries rhs = ls_add(pf_apply(op, i0[0]), ls_scale(Rat(5), pf_apply(op, i0[1])));
  CHECK(ls_is_zero(ls_add(lhs, ls_scale(Rat(-1), rhs))));
}

TEST_CASE("frobenius basis") {
  const int D = 12;
  auto i0 = i0_series(D);
  PFOperator op = make_pf_operator(D);

  // I_{0,0} = 1 + 36 z + 8100 z^2 + ...
  CHECK(i0[0].ldeg() == 0);
  CHECK(i0[0].lc[0].at(0) == Rat(1));
  CHECK(i0[0].lc[0].at(1) == Rat(36));
  CHECK(i0[0].lc[0].at(2) == Rat(8100));

  // L-degree of I_{0,q} is q, with leading coefficient I_{0,0}/q!.
  Rat fact(1);
  for (int q = 0; q < 5; ++q) {
    if (q > 0) fact *= q;
    CHECK(i0[q].ldeg() == q);
    CHECK(i0[q].lc[q].at(0) == Rat(1) / fact);
  }

  // I_{0,1} - L I_{0,0} has z-coefficient 180.
  CHECK(i0[1].lc[1].c == i0[0].lc[0].c);
  CHECK(i0[1].lc[0].at(0) == Rat(0));
  CHECK(i0[1].lc[0].at(1) == Rat(180));

  // The operator is fourth order: it annihilates q = 0..3 exactly, and the
  // auxiliary q = 4 series satisfies P(I_{0,4}) = 1.
  for (int q = 0; q < 4; ++q) CHECK(ls_is_zero(pf_apply(op, i0[q])));
  LogSeries rem = pf_apply(op, i0[4]);
  CHECK(rem.lc[0].at(0) == Rat(1));
  LogSeries one;
  one.lc = {PowerSeriesQ::one(D)};
  CHECK(ls_is_zero(ls_add(rem, ls_scale(Rat(-1), one))));
}

TEST_CASE("ipq table") {
  const int D = 12;
  IpqTable t = ipq_table(D);

  // I_{1,1} = 1 + 180 z + O(z^2).
  CHECK(t.diagonal[1].at(0) == Rat(1));
  CHECK(t.diagonal[1].at(1) == Rat(180));

  // Vanishing below the diagonal.
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < p; ++q) CHECK(ls_is_zero(t.i[p][q]));

  // Diagonals are pure with constant term 1, and symmetric.
  for (int p = 0; p < 5; ++p) {
    CHECK(t.i[p][p].pure());
    CHECK(t.diagonal[p].at(0) == Rat(1));
    CHECK(t.diagonal[p].c == t.diagonal[4 - p].c);
  }

  // Product identity: prod_p I_{p,p} = (1 - 3^6 z)^-1.
  PowerSeriesQ prod = PowerSeriesQ::one(D);
  for (int p = 0; p < 5; ++p) prod = ps_mul(prod, t.diagonal[p]);
  CHECK(prod.c == geometric(Rat(729), D).c);
}

TEST_CASE("mirror map") {
  const int D = 12;
  MirrorMap m = mirror_map(D);
  CHECK(m.j.at(0) == Rat(0));
  CHECK(m.q_over_z.at(0) == Rat(1));

  // Q(z) = z + 180 z^2 + ...
  PowerSeriesQ q = PowerSeriesQ::zero(D);
  for (int k = 1; k <= D; ++k) q.c[k] = m.q_over_z.at(k - 1);
  CHECK(q.at(1) == Rat(1));
  CHECK(q.at(2) == Rat(180));

  // exp/log round trip on q_over_z.
  CHECK(ps_log(m.q_over_z).c == m.j.c);

  // z(Q) = Q - 180 Q^2 + ...; compositional round trips both ways.
  PowerSeriesQ zq = invert_mirror(q, D);
  CHECK(zq.at(1) == Rat(1));
  CHECK(zq.at(2) == Rat(-180));
  PowerSeriesQ id = PowerSeriesQ::zero(D);
  id.c[1] = 1;
  CHECK(ps_compose(q, zq).c == id.c);
  CHECK(ps_compose(zq, q).c == id.c);

  // Truncation stability: lower order is a prefix of higher order.
  MirrorMap m2 = mirror_map(D + 4);
  for (int k = 0; k <= D; ++k) CHECK(m2.q_over_z.at(k) == m.q_over_z.at(k));
}

TEST_CASE("yukawa coupling") {
  const int D = 12;
  PFOperator op = make_pf_operator(D);
  PowerSeriesQ y = yukawa_from_pf(op, D);
  CHECK(y.c == geometric(Rat(729), D).c);

  // Y (1 - 3^6 z) = 1.
  PowerSeriesQ f = PowerSeriesQ::one(D);
  f.c[1] = -729;
  CHECK(ps_mul(y, f).c == PowerSeriesQ::one(D).c);

  // A vanishing a3 gives Y = 1.
  PFOperator trivial = op;
  trivial.a[3] = PowerSeriesQ::zero(D);
  CHECK(yukawa_from_pf(trivial, D).c == PowerSeriesQ::one(D).c);
}
