#include "cy33/euler_holo.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cy33/linalg.hpp"

namespace cy33 {

namespace {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void normalize(TruncatedLaurent& a) {
  // Drop exactly-zero leading coefficients; they only shrink the window from
  // below, which is harmless (everything below lo is zero anyway).
  size_t k = 0;
  while (k < a.c.size() && is_zero(a.c[k])) ++k;
  if (k > 0) {
    a.c.erase(a.c.begin(), a.c.begin() + k);
    a.lo += static_cast<long>(k);
  }
}

}  // namespace

Rat TruncatedLaurent::at(long e) const {
  if (e < lo) return Rat(0);
  if (e >= hi()) throw PrecisionError("TruncatedLaurent::at: beyond known window");
  return c[e - lo];
}

TruncatedLaurent tl_add(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  TruncatedLaurent r;
  r.lo = std::min(a.lo, b.lo);
  long hi = std::min(a.hi(), b.hi());
  if (hi <= r.lo) throw PrecisionError("tl_add: empty window");
  r.c.assign(hi - r.lo, Rat(0));
  for (long e = r.lo; e < hi; ++e) {
    if (e >= a.lo && e < a.hi()) r.c[e - r.lo] += a.c[e - a.lo];
    if (e >= b.lo && e < b.hi()) r.c[e - r.lo] += b.c[e - b.lo];
  }
  return r;
}

TruncatedLaurent tl_sub(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  TruncatedLaurent nb = b;
  for (auto& x : nb.c) x = -x;
  return tl_add(a, nb);
}

TruncatedLaurent tl_mul(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  TruncatedLaurent r;
  r.lo = a.lo + b.lo;
  long hi = std::min(a.hi() + b.lo, b.hi() + a.lo);
  if (hi <= r.lo) throw PrecisionError("tl_mul: empty window");
  r.c.assign(hi - r.lo, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    long ea = a.lo + static_cast<long>(i);
    for (size_t j = 0; j < b.c.size(); ++j) {
      long e = ea + b.lo + static_cast<long>(j);
      if (e >= hi) break;
      if (!is_zero(b.c[j])) r.c[e - r.lo] += a.c[i] * b.c[j];
    }
  }
  return r;
}

TruncatedLaurent tl_inverse(const TruncatedLaurent& a) {
  TruncatedLaurent u = a;
  normalize(u);
  if (u.c.empty() || is_zero(u.c[0]))
    throw PrecisionError("tl_inverse: valuation not determined at this precision");
  // u = c0 * t^lo * (1 + v); invert the unit part by the standard recurrence.
  const size_t n = u.c.size();
  std::vector<Rat> inv(n, Rat(0));
  inv[0] = Rat(1) / u.c[0];
  for (size_t k = 1; k < n; ++k) {
    Rat s(0);
    for (size_t j = 1; j <= k; ++j) s += u.c[j] * inv[k - j];
    inv[k] = -s / u.c[0];
  }
  TruncatedLaurent r;
  r.lo = -u.lo;
  r.c = std::move(inv);
  return r;
}

TruncatedLaurent monomial_by_vector(const std::vector<long>& m, int guard) {
  TruncatedLaurent r;
  r.lo = 0;
  r.c.assign(guard, Rat(0));
  r.c[0] = 1;
  for (size_t vi = 0; vi < m.size(); ++vi) {
    const long i = static_cast<long>(vi) + 1;
    const long e = m[vi];
    if (e == 0) continue;
    // (1 + t^i)^e = sum_k binom(e, k) t^{ik}, generalized binomial.
    TruncatedLaurent f;
    f.lo = 0;
    f.c.assign(guard, Rat(0));
    Rat binom(1);
    for (long k = 0; i * k < guard; ++k) {
      f.c[i * k] = binom;
      binom *= Rat(e - k);
      binom /= Rat(k + 1);
    }
    r = tl_mul(r, f);
  }
  return r;
}

namespace {

std::mutex g_mono_mutex;
std::map<std::pair<std::vector<long>, int>, TruncatedLaurent> g_mono_cache;

TruncatedLaurent cached_monomial(const std::vector<long>& m, int guard) {
  auto key = std::make_pair(m, guard);
  {
    std::lock_guard<std::mutex> lock(g_mono_mutex);
    auto it = g_mono_cache.find(key);
    if (it != g_mono_cache.end()) return it->second;
  }
  TruncatedLaurent v = monomial_by_vector(m, guard);
  std::lock_guard<std::mutex> lock(g_mono_mutex);
  g_mono_cache[key] = v;
  return v;
}

std::mutex g_den_mutex;
std::map<std::pair<std::vector<std::vector<long>>, int>, TruncatedLaurent> g_den_cache;

TruncatedLaurent cached_inverse_denominator(std::vector<std::vector<long>> ws, int guard) {
  std::sort(ws.begin(), ws.end());
  auto key = std::make_pair(ws, guard);
  {
    std::lock_guard<std::mutex> lock(g_den_mutex);
    auto it = g_den_cache.find(key);
    if (it != g_den_cache.end()) return it->second;
  }
  TruncatedLaurent one;
  one.lo = 0;
  one.c.assign(guard, Rat(0));
  one.c[0] = 1;
  TruncatedLaurent den = one;
  for (const auto& w : ws) den = tl_mul(den, tl_sub(one, cached_monomial(w, guard)));
  TruncatedLaurent inv = tl_inverse(den);
  std::lock_guard<std::mutex> lock(g_den_mutex);
  g_den_cache[key] = inv;
  return inv;
}

long integral_entry(const Rat& r, const char* what) {
  if (!is_integer(r)) throw std::runtime_error(std::string(what) + ": not integral: " + r.get_str());
  return to_long(r);
}

}  // namespace

TruncatedLaurent chi_piece(const Fan& fan, const Cone& delta,
                           const ToricDivisor& d, int guard) {
  const int n = delta.dim();
  QMat a(n, QVec(n));
  QVec b(n);
  for (int r = 0; r < n; ++r) {
    const auto& ray = fan.rays[delta.generators[r]];
    for (int c = 0; c < n; ++c) a[r][c] = Rat(ray[c]);
    b[r] = Rat(d.coeffs[delta.generators[r]]);
  }
  if (cmp(abs(det(a)), Rat(1)) != 0)
    throw std::invalid_argument("chi_piece: cone is not unimodular");
  auto ainv = inverse(a);
  if (!ainv) throw std::logic_error("chi_piece: singular generator matrix");

  std::vector<long> m_sigma(n);
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < n; ++j) s -= (*ainv)[i][j] * b[j];
    m_sigma[i] = integral_entry(s, "chi_piece: m_sigma");
  }
  std::vector<std::vector<long>> duals(n, std::vector<long>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      duals[j][i] = integral_entry((*ainv)[i][j], "chi_piece: dual vector");

  return tl_mul(cached_monomial(m_sigma, guard),
                cached_inverse_denominator(duals, guard));
}

long chi_of_divisor(const Fan& fan, const ToricDivisor& d, int guard, int threads) {
  for (int g = guard; g <= 4096; g *= 2) {
    try {
      const size_t n = fan.maximal_cones.size();
      const int nthreads = std::max(1, threads);
      std::vector<TruncatedLaurent> partial(nthreads);
      std::atomic<size_t> next(0);
      std::vector<std::string> errors(nthreads);

      auto worker = [&](int tid) {
        try {
          TruncatedLaurent acc;
          bool has = false;
          while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            TruncatedLaurent piece = chi_piece(fan, fan.maximal_cones[i], d, g);
            acc = has ? tl_add(acc, piece) : piece;
            has = true;
          }
          if (has) partial[tid] = acc;
          else {
            partial[tid].lo = 0;
            partial[tid].c.assign(g, Rat(0));
          }
        } catch (const std::exception& e) {
          errors[tid] = e.what();
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
      worker(0);
      for (auto& t : pool) t.join();
      for (const auto& e : errors)
        if (!e.empty()) throw PrecisionError(e);

      TruncatedLaurent total = partial[0];
      for (int t = 1; t < nthreads; ++t) total = tl_add(total, partial[t]);

      if (total.hi() <= 0) throw PrecisionError("chi_of_divisor: window closed before t^0");
      // The summed substituted character series is an honest power series:
      // its principal part must cancel exactly. The t^0 coefficient is the
      // value at x = 1, i.e. the Euler characteristic.
      long max_pole = 0;
      for (long e = total.lo; e < 0; ++e)
        if (!is_zero(total.at(e))) max_pole = std::max(max_pole, -e);
      if (max_pole > 0) {
        std::ostringstream os;
        os << "chi_of_divisor: principal part survives (max pole order "
           << max_pole << ")";
        throw std::runtime_error(os.str());
      }
      return integral_entry(total.at(0), "chi_of_divisor: chi");
    } catch (const PrecisionError&) {
      if (2 * g > 4096) throw;
      // escalate the guard and retry
    }
  }
  throw std::runtime_error("chi_of_divisor: guard escalation exhausted");
}

HoloChiResult koszul_chi_W0(const Fan& pi, int guard, int threads) {
  ToricDivisor zero;
  zero.coeffs.assign(pi.rays.size(), 0);
  ToricDivisor l1 = divisor_L1(pi);
  ToricDivisor l2 = divisor_L2(pi);
  ToricDivisor ml1 = zero, ml2 = zero, ml12 = zero;
  for (size_t i = 0; i < pi.rays.size(); ++i) {
    ml1.coeffs[i] = -l1.coeffs[i];
    ml2.coeffs[i] = -l2.coeffs[i];
    ml12.coeffs[i] = -l1.coeffs[i] - l2.coeffs[i];
  }
  HoloChiResult r;
  r.guard = guard;
  r.chi_O = chi_of_divisor(pi, zero, guard, threads);
  r.chi_mL1 = chi_of_divisor(pi, ml1, guard, threads);
  r.chi_mL2 = chi_of_divisor(pi, ml2, guard, threads);
  r.chi_mL1mL2 = chi_of_divisor(pi, ml12, guard, threads);
  r.chi_W0 = r.chi_O - r.chi_mL1 - r.chi_mL2 + r.chi_mL1mL2;
  return r;
}

}  // namespace cy33
