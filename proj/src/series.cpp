#include "cy33/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy33 {

PowerSeriesQ PowerSeriesQ::constant(const Rat& v, int order) {
  PowerSeriesQ p;
  p.c.assign(order + 1, Rat(0));
  p.c[0] = v;
  return p;
}

PowerSeriesQ ps_add(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r;
  r.c.assign(std::min(a.c.size(), b.c.size()), Rat(0));
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

PowerSeriesQ ps_sub(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r;
  r.c.assign(std::min(a.c.size(), b.c.size()), Rat(0));
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

PowerSeriesQ ps_mul(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r;
  r.c.assign(std::min(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size() && i < r.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size() && i + j < r.c.size(); ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

PowerSeriesQ ps_scale(const Rat& s, const PowerSeriesQ& a) {
  PowerSeriesQ r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

PowerSeriesQ ps_inverse(const PowerSeriesQ& a) {
  if (is_zero(a.c[0])) throw std::invalid_argument("ps_inverse: non-unit constant term");
  PowerSeriesQ r;
  r.c.assign(a.c.size(), Rat(0));
  r.c[0] = Rat(1) / a.c[0];
  for (size_t k = 1; k < r.c.size(); ++k) {
    Rat s(0);
    for (size_t j = 1; j <= k; ++j) s += a.c[j] * r.c[k - j];
    r.c[k] = -s / a.c[0];
  }
  return r;
}

PowerSeriesQ ps_log(const PowerSeriesQ& a) {
  if (cmp(a.c[0], Rat(1)) != 0) throw std::invalid_argument("ps_log: constant term must be 1");
  // log(a) via integration of a'/a in the z d/dz sense:
  // (z d/dz) log a = (z a') / a; then divide coefficient k by k.
  PowerSeriesQ za;  // z * a'
  za.c.assign(a.c.size(), Rat(0));
  for (size_t k = 1; k < a.c.size(); ++k) za.c[k] = Rat(static_cast<long>(k)) * a.c[k];
  PowerSeriesQ q = ps_mul(za, ps_inverse(a));
  PowerSeriesQ r;
  r.c.assign(a.c.size(), Rat(0));
  for (size_t k = 1; k < r.c.size(); ++k) r.c[k] = q.c[k] / Rat(static_cast<long>(k));
  return r;
}

PowerSeriesQ ps_exp(const PowerSeriesQ& a) {
  if (!is_zero(a.c[0])) throw std::invalid_argument("ps_exp: constant term must be 0");
  // exp(a) by the ODE r' = a' r: k r_k = sum_{j=1..k} j a_j r_{k-j}.
  PowerSeriesQ r;
  r.c.assign(a.c.size(), Rat(0));
  r.c[0] = 1;
  for (size_t k = 1; k < r.c.size(); ++k) {
    Rat s(0);
    for (size_t j = 1; j <= k; ++j) s += Rat(static_cast<long>(j)) * a.c[j] * r.c[k - j];
    r.c[k] = s / Rat(static_cast<long>(k));
  }
  return r;
}

PowerSeriesQ ps_compose(const PowerSeriesQ& f, const PowerSeriesQ& g) {
  if (!is_zero(g.c[0])) throw std::invalid_argument("ps_compose: inner series must vanish at 0");
  // Horner from the top coefficient down.
  const size_t n = std::min(f.c.size(), g.c.size());
  PowerSeriesQ r = PowerSeriesQ::constant(f.c[n - 1], static_cast<int>(n) - 1);
  for (size_t k = n - 1; k-- > 0;) {
    r = ps_mul(r, g);
    r.c[0] += f.c[k];
  }
  return r;
}

PowerSeriesQ ps_ztimes_ddz(const PowerSeriesQ& a) {
  PowerSeriesQ r;
  r.c.assign(a.c.size(), Rat(0));
  for (size_t k = 1; k < a.c.size(); ++k) r.c[k] = Rat(static_cast<long>(k)) * a.c[k];
  return r;
}

bool LogSeries::pure() const {
  for (size_t k = 1; k < lc.size(); ++k)
    for (const auto& x : lc[k].c)
      if (!is_zero(x)) return false;
  return true;
}

LogSeries ls_add(const LogSeries& a, const LogSeries& b) {
  LogSeries r;
  r.lc.resize(std::max(a.lc.size(), b.lc.size()));
  for (size_t k = 0; k < r.lc.size(); ++k) {
    if (k < a.lc.size() && k < b.lc.size())
      r.lc[k] = ps_add(a.lc[k], b.lc[k]);
    else if (k < a.lc.size())
      r.lc[k] = a.lc[k];
    else
      r.lc[k] = b.lc[k];
  }
  return r;
}

LogSeries ls_scale(const Rat& s, const LogSeries& a) {
  LogSeries r = a;
  for (auto& f : r.lc) f = ps_scale(s, f);
  return r;
}

LogSeries ls_mul_ps(const LogSeries& a, const PowerSeriesQ& f) {
  LogSeries r = a;
  for (auto& g : r.lc) g = ps_mul(g, f);
  return r;
}

LogSeries ls_theta(const LogSeries& a) {
  LogSeries r;
  r.lc.resize(a.lc.size());
  for (size_t k = 0; k < a.lc.size(); ++k) {
    r.lc[k] = ps_ztimes_ddz(a.lc[k]);
    if (k + 1 < a.lc.size())
      r.lc[k] = ps_add(r.lc[k], ps_scale(Rat(static_cast<long>(k + 1)), a.lc[k + 1]));
  }
  return r;
}

bool ls_is_zero(const LogSeries& a) {
  for (const auto& f : a.lc)
    for (const auto& x : f.c)
      if (!is_zero(x)) return false;
  return true;
}

PFOperator make_pf_operator(int order) {
  // theta^4 - 729 z (theta + 1/3)^2 (theta + 2/3)^2 expanded:
  // (1 - 729 z) theta^4 - 1458 z theta^3 - 1053 z theta^2 - 324 z theta - 36 z.
  auto lin = [order](long c0, long c1) {
    PowerSeriesQ p = PowerSeriesQ::zero(order);
    p.c[0] = c0;
    if (order >= 1) p.c[1] = c1;
    return p;
  };
  PFOperator op;
  op.a[4] = lin(1, -729);
  op.a[3] = lin(0, -1458);
  op.a[2] = lin(0, -1053);
  op.a[1] = lin(0, -324);
  op.a[0] = lin(0, -36);
  // Construction invariants.
  if (cmp(op.a[4].at(1), Rat(-729)) != 0 || cmp(op.a[3].at(1), Rat(-2 * 729)) != 0)
    throw std::logic_error("make_pf_operator: expansion check failed");
  return op;
}

LogSeries pf_apply(const PFOperator& op, const LogSeries& s) {
  LogSeries power = s;  // theta^k applied incrementally
  LogSeries acc = ls_mul_ps(s, op.a[0]);
  for (int k = 1; k <= 4; ++k) {
    power = ls_theta(power);
    acc = ls_add(acc, ls_mul_ps(power, op.a[k]));
  }
  return acc;
}

namespace {

// Dense polynomials in w modulo w^5, coefficients exact rationals.
using WPoly = std::array<Rat, 5>;

WPoly w_mul(const WPoly& a, const WPoly& b) {
  WPoly r{};
  for (int i = 0; i < 5; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; i + j < 5; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

WPoly w_inverse(const WPoly& a) {
  if (is_zero(a[0])) throw std::invalid_argument("w_inverse: non-unit");
  WPoly r{};
  r[0] = Rat(1) / a[0];
  for (int k = 1; k < 5; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

}  // namespace

std::array<LogSeries, 5> i0_series(int order) {
  if (order < 1) throw std::invalid_argument("i0_series: order must be >= 1");
  // s_q(z): w^q coefficients of the hypergeometric sum.
  std::array<PowerSeriesQ, 5> s;
  for (auto& f : s) f = PowerSeriesQ::zero(order);
  for (long d = 0; d <= order; ++d) {
    WPoly num{};
    num[0] = 1;
    for (long r = 1; r <= 3 * d; ++r) {
      WPoly f{};
      f[0] = Rat(r);
      f[1] = Rat(3);
      num = w_mul(num, w_mul(f, f));
    }
    WPoly den{};
    den[0] = 1;
    for (long r = 1; r <= d; ++r) {
      WPoly f{};
      f[0] = Rat(r);
      f[1] = Rat(1);
      WPoly f2 = w_mul(f, f);
      den = w_mul(den, w_mul(f2, w_mul(f2, f2)));
    }
    WPoly term = w_mul(num, w_inverse(den));
    for (int q = 0; q < 5; ++q) s[q].c[d] = term[q];
  }

  // I_{0,q} = sum_{j=0..q} (L^j / j!) s_{q-j}(z).
  std::array<LogSeries, 5> out;
  Rat fact(1);
  std::array<Rat, 5> inv_fact;
  for (int j = 0; j < 5; ++j) {
    if (j > 0) fact *= j;
    inv_fact[j] = Rat(1) / fact;
  }
  for (int q = 0; q < 5; ++q) {
    out[q].lc.resize(q + 1);
    for (int j = 0; j <= q; ++j) out[q].lc[j] = ps_scale(inv_fact[j], s[q - j]);
  }
  return out;
}

IpqTable ipq_table(int order) {
  IpqTable t;
  auto i0 = i0_series(order);
  const LogSeries zero{{PowerSeriesQ::zero(order)}};
  for (int q = 0; q < 5; ++q) t.i[0][q] = i0[q];
  for (int p = 1; p < 5; ++p) {
    // Diagonal divisor of the previous level.
    const LogSeries& prev_diag = t.i[p - 1][p - 1];
    if (!prev_diag.pure())
      throw std::runtime_error("ipq_table: diagonal entry is not a pure series");
    PowerSeriesQ diag = prev_diag.lc[0];
    if (cmp(diag.c[0], Rat(1)) != 0)
      throw std::runtime_error("ipq_table: diagonal constant term is not 1");
    PowerSeriesQ inv = ps_inverse(diag);
    for (int q = 0; q < 5; ++q) {
      if (q < p) {
        t.i[p][q] = zero;
        continue;
      }
      t.i[p][q] = ls_theta(ls_mul_ps(t.i[p - 1][q], inv));
    }
  }
  for (int p = 0; p < 5; ++p) {
    if (!t.i[p][p].pure())
      throw std::runtime_error("ipq_table: I_{p,p} is not pure");
    t.diagonal[p] = t.i[p][p].lc[0];
  }
  return t;
}

MirrorMap mirror_map(int order) {
  auto i0 = i0_series(order);
  // I_{0,1}/I_{0,0} = L + J with J = (tilde I_1) / (tilde I_0) pure:
  // I_{0,1} = tilde I_1 + L tilde I_0, I_{0,0} = tilde I_0.
  const PowerSeriesQ& tilde0 = i0[0].lc[0];
  const PowerSeriesQ& tilde1 = i0[1].lc[0];
  if (cmp(i0[1].lc[1].c[0], Rat(1)) != 0)
    throw std::logic_error("mirror_map: unexpected L-part of I_{0,1}");
  MirrorMap m;
  m.j = ps_mul(tilde1, ps_inverse(tilde0));
  if (!is_zero(m.j.c[0])) throw std::logic_error("mirror_map: J has a constant term");
  m.q_over_z = ps_exp(m.j);
  return m;
}

PowerSeriesQ invert_mirror(const PowerSeriesQ& q, int order) {
  if (!is_zero(q.c[0]) || cmp(q.at(1), Rat(1)) != 0)
    throw std::invalid_argument("invert_mirror: series must be z + O(z^2)");
  PowerSeriesQ id = PowerSeriesQ::zero(order);
  if (order >= 1) id.c[1] = 1;
  PowerSeriesQ w = id;
  for (int it = 0; it <= order; ++it) {
    PowerSeriesQ err = ps_sub(ps_compose(q, w), id);
    w = ps_sub(w, err);
  }
  return w;
}

PowerSeriesQ yukawa_from_pf(const PFOperator& op, int order) {
  if (is_zero(op.a[4].c[0])) throw std::invalid_argument("yukawa_from_pf: a4(0) = 0");
  // (z d/dz) Y = g Y with g = -(1/2) a3 / a4; coefficientwise:
  // k Y_k = sum_{j=1..k} g_j Y_{k-j} (g has no constant term here).
  PowerSeriesQ g = ps_scale(rat(-1, 2), ps_mul(op.a[3], ps_inverse(op.a[4])));
  if (!is_zero(g.c[0]))
    throw std::invalid_argument("yukawa_from_pf: indicial shift unsupported (g(0) != 0)");
  PowerSeriesQ y = PowerSeriesQ::zero(order);
  y.c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += g.at(j) * y.c[k - j];
    y.c[k] = s / Rat(k);
  }
  return y;
}

}  // namespace cy33
