#include "cy33/cox_geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cy33/linalg.hpp"
#include "cy33/polytope.hpp"

namespace cy33 {

namespace {

std::map<LatticeVector, int> ray_index_map(const Fan& pi) {
  std::map<LatticeVector, int> m;
  for (size_t i = 0; i < pi.rays.size(); ++i) m[pi.rays[i]] = static_cast<int>(i);
  return m;
}

// Every admissible (triple, ray index) pair for both generator families.
struct TripleRay {
  int i, j, k;
  int ray;
  bool is_u;
};

std::vector<TripleRay> triple_rays(const Fan& pi) {
  auto index = ray_index_map(pi);
  std::vector<TripleRay> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j)
      for (int k = j; k <= 6; ++k) {
        if (!(i == 1 && j == 2 && k == 3)) {
          auto it = index.find(ray_u(i, j, k));
          if (it == index.end()) throw std::runtime_error("triple_rays: missing u ray");
          out.push_back({i, j, k, it->second, true});
        }
        if (!(i == 4 && j == 5 && k == 6)) {
          auto it = index.find(ray_v(i, j, k));
          if (it == index.end()) throw std::runtime_error("triple_rays: missing v ray");
          out.push_back({i, j, k, it->second, false});
        }
      }
  return out;
}

}  // namespace

CoxMonomial monomial_b(const Fan& pi, int t) {
  if (t < 1 || t > 6) throw std::invalid_argument("monomial_b: t must be 1..6");
  CoxMonomial m;
  for (const auto& tr : triple_rays(pi)) {
    int p = (tr.i == t) + (tr.j == t) + (tr.k == t);
    if (p > 0) m.exponents[tr.ray] += p;
  }
  return m;
}

CoxPolynomial h1_at_psi0(const Fan& pi) {
  CoxPolynomial h;
  for (int t = 1; t <= 3; ++t) h.terms.emplace_back(Rat(-1), monomial_b(pi, t));
  return h;
}

CoxPolynomial h2_at_psi0(const Fan& pi) {
  CoxPolynomial h;
  for (int t = 4; t <= 6; ++t) h.terms.emplace_back(Rat(-1), monomial_b(pi, t));
  return h;
}

ChartPoly restrict_to_stratum(const Fan& pi, const CoxPolynomial& p,
                              const Cone& sigma, const Cone& delta) {
  (void)pi;
  std::set<int> delta_set(delta.generators.begin(), delta.generators.end());
  for (int g : sigma.generators)
    if (!delta_set.count(g))
      throw std::invalid_argument("restrict_to_stratum: sigma is not a face of delta");
  // Positions of sigma generators inside delta's chart coordinates.
  std::vector<int> sigma_pos;
  for (size_t c = 0; c < delta.generators.size(); ++c)
    if (std::count(sigma.generators.begin(), sigma.generators.end(),
                   delta.generators[c]))
      sigma_pos.push_back(static_cast<int>(c));

  ChartPoly out;
  for (const auto& [coef, mono] : p.terms) {
    std::vector<long> e(delta.generators.size(), 0);
    for (size_t c = 0; c < delta.generators.size(); ++c) {
      auto it = mono.exponents.find(delta.generators[c]);
      if (it != mono.exponents.end()) e[c] = it->second;
    }
    bool killed = false;
    for (int c : sigma_pos)
      if (e[c] > 0) {
        killed = true;
        break;
      }
    if (killed) continue;
    out[e] += coef;
    if (is_zero(out[e])) out.erase(e);
  }
  return out;
}

namespace {

ToricDivisor divisor_from(const Fan& pi, const LatticeVector& minus_ray, bool plus_on_u) {
  auto trs = triple_rays(pi);
  ToricDivisor d;
  d.coeffs.assign(pi.rays.size(), 0);
  for (const auto& tr : trs)
    if (tr.is_u == plus_on_u) d.coeffs[tr.ray] += 1;
  auto index = ray_index_map(pi);
  auto it = index.find(minus_ray);
  if (it == index.end()) throw std::runtime_error("divisor: distinguished ray missing");
  d.coeffs[it->second] -= 1;
  return d;
}

}  // namespace

ToricDivisor divisor_L1(const Fan& pi) {
  // -D_{v123} + sum over u rays.
  return divisor_from(pi, ray_v(1, 2, 3), true);
}

ToricDivisor divisor_L2(const Fan& pi) {
  // -D_{u456} + sum over v rays.
  return divisor_from(pi, ray_u(4, 5, 6), false);
}

bool saturated(const ChartPoly& p) {
  if (p.empty()) throw std::invalid_argument("saturated: zero polynomial");
  QMat pts;
  for (const auto& [e, c] : p) {
    (void)c;
    QVec q;
    for (long x : e) q.emplace_back(x);
    pts.push_back(std::move(q));
  }
  return Polytope::hull(pts).integral_points().size() == p.size();
}

bool verify_saturation(const Fan& pi, const Cone& sigma, const Cone& delta) {
  for (const CoxPolynomial& h : {h1_at_psi0(pi), h2_at_psi0(pi)}) {
    ChartPoly r = restrict_to_stratum(pi, h, sigma, delta);
    if (r.empty()) continue;
    if (!saturated(r)) return false;
  }
  return true;
}

bool same_divisor_class(const Fan& pi, const CoxMonomial& a, const CoxMonomial& b) {
  auto exp_of = [](const CoxMonomial& m, int r) {
    auto it = m.exponents.find(r);
    return it == m.exponents.end() ? 0 : it->second;
  };
  // Find m in Q^5 with <m, proj5(ray_r)> = a_r - b_r for all rays: solve on a
  // rank-5 subset, then certify globally.
  QMat sys;
  QVec rhs;
  for (size_t r = 0; r < pi.rays.size() && sys.size() < 5; ++r) {
    QVec row;
    for (long x : project5(pi.rays[r])) row.emplace_back(x);
    QMat trial = sys;
    trial.push_back(row);
    if (rank(trial) > static_cast<int>(sys.size())) {
      sys = std::move(trial);
      rhs.emplace_back(exp_of(a, static_cast<int>(r)) - exp_of(b, static_cast<int>(r)));
    }
  }
  if (sys.size() != 5) throw std::runtime_error("same_divisor_class: rays do not span");
  auto m = solve(sys, rhs);
  if (!m) return false;
  for (size_t r = 0; r < pi.rays.size(); ++r) {
    QVec row;
    for (long x : project5(pi.rays[r])) row.emplace_back(x);
    if (cmp(dot(*m, row), Rat(exp_of(a, static_cast<int>(r)) -
                              exp_of(b, static_cast<int>(r)))) != 0)
      return false;
  }
  return true;
}

}  // namespace cy33
