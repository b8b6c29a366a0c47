#include "cy33/euler_top.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cy33/polytope.hpp"

namespace cy33 {

namespace {

bool is_nonzero_constant(const ChartPoly& p) {
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.begin();
  (void)c;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

Polytope newton_polytope(const ChartPoly& p) {
  QMat pts;
  for (const auto& [e, c] : p) {
    (void)c;
    QVec q;
    for (long x : e) q.emplace_back(x);
    pts.push_back(std::move(q));
  }
  return Polytope::hull(pts);
}

// Canonical key of an equation system under chart-coordinate permutation,
// equation reordering, and monomial reordering -- all of which leave the BKK
// value invariant (coordinate permutations are unimodular). Minimizes the
// serialized support over every coordinate permutation. Coefficients are
// dropped: mixed volumes see supports only, and the nonzero-constant case is
// resolved before the cache is consulted.
std::string canonical_system_key(const std::vector<ChartPoly>& eqs, int k) {
  if (eqs.empty()) return "k" + std::to_string(k) + "|";
  const size_t n = eqs[0].begin()->first.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::vector<std::vector<long>>> sys;
    for (const auto& eq : eqs) {
      std::vector<std::vector<long>> rows;
      for (const auto& [e, c] : eq) {
        (void)c;
        std::vector<long> r(n);
        for (size_t i = 0; i < n; ++i) r[i] = e[perm[i]];
        rows.push_back(std::move(r));
      }
      std::sort(rows.begin(), rows.end());
      sys.push_back(std::move(rows));
    }
    std::sort(sys.begin(), sys.end());
    std::ostringstream os;
    os << "k" << k << "|";
    for (const auto& eq : sys) {
      for (const auto& r : eq) {
        for (long x : r) os << x << ",";
        os << ";";
      }
      os << "|";
    }
    std::string s = os.str();
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::mutex g_chi_mutex;
std::map<std::string, long> g_chi_cache;

}  // namespace

long chi_by_equations(const std::vector<ChartPoly>& equations, int k) {
  std::vector<ChartPoly> eqs;
  for (const auto& e : equations)
    if (!e.empty()) eqs.push_back(e);
  for (const auto& e : eqs)
    if (is_nonzero_constant(e)) return 0;
  const int m = static_cast<int>(eqs.size());
  if (m == 0) {
    if (k == 0)
      throw std::runtime_error(
          "chi_by_equations: 0-dimensional stratum with no surviving "
          "equations; the mixed-volume convention (0) disagrees with the true "
          "chi of a point (1)");
    return 0;
  }
  if (m > k) return 0;  // empty generic intersection

  const std::string key = canonical_system_key(eqs, k);
  {
    std::lock_guard<std::mutex> lock(g_chi_mutex);
    auto it = g_chi_cache.find(key);
    if (it != g_chi_cache.end()) return it->second;
  }

  std::vector<Polytope> base;
  for (const auto& e : eqs) base.push_back(newton_polytope(e));

  // Multisets of size k - m over the m equations, lexicographic in index.
  Rat chi(0);
  std::vector<int> pick(k - m, 0);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k - m) {
      std::vector<Polytope> polys = base;
      for (int i : pick) polys.push_back(base[i]);
      chi += mixed_volume_ie(polys, k);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[pos] = i;
      self(self, pos + 1, i);
    }
  };
  rec(rec, 0, 0);

  if ((k - m) % 2 != 0) chi = -chi;
  long value = to_long(chi);
  std::lock_guard<std::mutex> lock(g_chi_mutex);
  g_chi_cache[key] = value;
  return value;
}

long stratum_chi_in_chart(const Fan& pi, const Cone& sigma, const Cone& delta) {
  std::vector<ChartPoly> eqs = {restrict_to_stratum(pi, h1_at_psi0(pi), sigma, delta),
                                restrict_to_stratum(pi, h2_at_psi0(pi), sigma, delta)};
  return chi_by_equations(eqs, 5 - sigma.dim());
}

long stratum_chi(const Fan& pi, const Cone& sigma) {
  return stratum_chi_in_chart(pi, sigma, containing_maximal_cone(pi, sigma));
}

ChiTopResult total_chi_Y0(const Fan& pi, int threads) {
  std::vector<Cone> all;
  for (int d = 0; d <= 5; ++d)
    for (auto& c : faces(pi, d)) all.push_back(std::move(c));

  ChiTopResult res;
  res.records.resize(all.size());
  std::atomic<size_t> next(0);
  std::atomic<bool> failed(false);
  std::string failure;
  std::mutex fail_mutex;

  auto worker = [&]() {
    while (!failed.load()) {
      size_t i = next.fetch_add(1);
      if (i >= all.size()) break;
      try {
        const Cone& sigma = all[i];
        const Cone& delta = containing_maximal_cone(pi, sigma);
        if (!verify_saturation(pi, sigma, delta)) {
          std::ostringstream os;
          os << "total_chi_Y0: saturation failure at stratum {";
          for (int g : sigma.generators) os << g << ",";
          os << "}";
          throw std::runtime_error(os.str());
        }
        long chi = stratum_chi_in_chart(pi, sigma, delta);
        int m = 0;
        for (const auto& h : {h1_at_psi0(pi), h2_at_psi0(pi)})
          if (!restrict_to_stratum(pi, h, sigma, delta).empty()) ++m;
        res.records[i] = {sigma, delta, m, 5 - sigma.dim(), chi};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        failure = e.what();
        failed.store(true);
      }
    }
  };

  const int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < n - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error(failure);

  for (const auto& r : res.records) {
    res.total += r.chi;
    res.by_dimension[r.stratum_dim] += r.chi;
  }
  return res;
}

}  // namespace cy33
