#include "cy33/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cy33 {

namespace {

int cmp_vec(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

QMat dedup_sorted(QMat pts) {
  std::sort(pts.begin(), pts.end(),
            [](const QVec& a, const QVec& b) { return cmp_vec(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// ---------------------------------------------------------------------------
// Symbolic perturbation. Point i is displaced by eps^(2^i) * m_i where
// m_i = ((i+1), (i+1)^2, ..., (i+1)^k) lies on the moment curve. For a
// (k+1)-subset {j_0 < ... < j_k} of points the orientation determinant is a
// polynomial in eps whose term for a row subset S carries the coefficient
//   D_S = det of the matrix with rows (m_j, 0) for j in S, (p_j, 1) else,
// and a positive monomial in eps. The 2^i scales make all monomials distinct
// and ordered by the bitmask of global indices in S, so the sign at eps->0+
// is the sign of D_S for the smallest S (in that order) with D_S != 0. The
// subset with all rows but one replaced is a moment-curve determinant, which
// is nonzero for distinct indices, so a nonzero D_S always exists.
// ---------------------------------------------------------------------------

QVec moment_dir(long idx, int k) {
  QVec m(k);
  Rat b(idx + 1);
  Rat p = b;
  for (int c = 0; c < k; ++c) {
    m[c] = p;
    p *= b;
  }
  return m;
}

// Sign of the orientation of points pts[idx[0]], ..., pts[idx[k]] after
// perturbation; never 0.
int orient_sign(const QMat& pts, const std::vector<int>& idx) {
  const int k = static_cast<int>(pts[0].size());
  const int rows = k + 1;
  if (static_cast<int>(idx.size()) != rows)
    throw std::logic_error("orient_sign: wrong subset size");

  auto eval = [&](unsigned s) -> int {
    QMat m(rows, QVec(rows));
    for (int r = 0; r < rows; ++r) {
      if (s & (1u << r)) {
        QVec md = moment_dir(idx[r], k);
        for (int c = 0; c < k; ++c) m[r][c] = md[c];
        m[r][k] = 0;
      } else {
        for (int c = 0; c < k; ++c) m[r][c] = pts[idx[r]][c];
        m[r][k] = 1;
      }
    }
    return sgn(det(m));
  };

  // Fast path: the unperturbed determinant (S empty, the smallest monomial).
  int sg = eval(0);
  if (sg != 0) return sg;

  // Degenerate at eps = 0: enumerate the remaining subsets in increasing
  // eps-monomial order. The monomial of S is eps^(sum of 2^(2^idx[r])) up to
  // renaming, i.e. ordered by the bitmask over global indices; comparing
  // descending-sorted global index lists lexicographically realizes that
  // order.
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s < (1u << rows); ++s) subsets.push_back(s);
  std::vector<std::vector<int>> key(1u << rows);
  for (unsigned s : subsets) {
    for (int r = 0; r < rows; ++r)
      if (s & (1u << r)) key[s].push_back(idx[r]);
    std::sort(key[s].rbegin(), key[s].rend());
  }
  std::sort(subsets.begin(), subsets.end(),
            [&](unsigned a, unsigned b) { return key[a] < key[b]; });
  for (unsigned s : subsets) {
    sg = eval(s);
    if (sg != 0) return sg;
  }
  throw std::logic_error("orient_sign: identically zero (impossible)");
}

struct Facet {
  std::vector<int> verts;  // k indices, stored in orientation-consistent order
  int witness;             // a point strictly on the interior side
};

struct Triangulation {
  std::vector<std::vector<int>> simplices;         // (k+1)-index sets
  std::map<std::vector<int>, Facet> boundary;      // key: sorted vertex indices
};

// Placing (beneath-beyond) triangulation of the perturbed point set. Requires
// the points to affinely span the full k-dimensional space.
Triangulation triangulate(const QMat& pts) {
  const int k = static_cast<int>(pts[0].size());
  const int n = static_cast<int>(pts.size());
  if (n < k + 1) throw std::logic_error("triangulate: too few points");

  Triangulation tri;
  auto facet_key = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  // Seed simplex: the first k+1 perturbed points are affinely independent.
  std::vector<int> seed(k + 1);
  std::iota(seed.begin(), seed.end(), 0);
  tri.simplices.push_back(seed);
  for (int omit = 0; omit <= k; ++omit) {
    Facet f;
    for (int r = 0; r <= k; ++r)
      if (r != omit) f.verts.push_back(seed[r]);
    f.witness = seed[omit];
    tri.boundary[facet_key(f.verts)] = f;
  }

  auto visible = [&](const Facet& f, int p) {
    std::vector<int> a = f.verts, b = f.verts;
    a.push_back(p);
    b.push_back(f.witness);
    return orient_sign(pts, a) != orient_sign(pts, b);
  };

  for (int p = k + 1; p < n; ++p) {
    std::vector<std::pair<std::vector<int>, Facet>> vis;
    for (const auto& [key, f] : tri.boundary)
      if (visible(f, p)) vis.emplace_back(key, f);
    if (vis.empty()) continue;  // p inside the current hull

    // Ridges of visible facets: seen once => horizon, twice => interior.
    std::map<std::vector<int>, std::pair<int, int>> ridge;  // -> (count, apex)
    for (const auto& [key, f] : vis) {
      tri.simplices.push_back(f.verts);
      tri.simplices.back().push_back(p);
      for (size_t omit = 0; omit < key.size(); ++omit) {
        std::vector<int> r = key;
        int apex = r[omit];
        r.erase(r.begin() + omit);
        auto& e = ridge[r];
        ++e.first;
        e.second = apex;
      }
      tri.boundary.erase(key);
    }
    for (const auto& [r, e] : ridge) {
      if (e.first == 1) {
        Facet nf;
        nf.verts = r;
        nf.verts.push_back(p);
        nf.witness = e.second;
        tri.boundary[facet_key(nf.verts)] = nf;
      } else if (e.first != 2) {
        throw std::logic_error("triangulate: ridge multiplicity > 2");
      }
    }
  }

  // Sanity: every boundary ridge must lie in exactly two boundary facets.
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& [key, f] : tri.boundary) {
    (void)f;
    for (size_t omit = 0; omit < key.size(); ++omit) {
      std::vector<int> r = key;
      r.erase(r.begin() + omit);
      ++ridge_count[r];
    }
  }
  for (const auto& [r, c] : ridge_count) {
    (void)r;
    if (c != 2) throw std::logic_error("triangulate: boundary not closed");
  }
  return tri;
}

// Volume of a triangulated full-dimensional point set at eps = 0. Perturbed
// simplices degenerate in the limit contribute 0.
Rat triangulation_volume(const QMat& pts, const Triangulation& tri) {
  const int k = static_cast<int>(pts[0].size());
  Rat vol(0);
  Rat kfact(1);
  for (int i = 2; i <= k; ++i) kfact *= i;
  for (const auto& s : tri.simplices) {
    QMat m(k, QVec(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r][c] = pts[s[r + 1]][c] - pts[s[0]][c];
    Rat d = det(m);
    vol += abs(d) / kfact;
  }
  return vol;
}

// Affine-span description: pivot point, list of coordinates that vary
// (columns where some point differs from the pivot), and the rank of the
// difference matrix.
struct Span {
  QVec base;
  std::vector<int> varying;
  int dim;
};

Span affine_span(const QMat& pts) {
  Span s;
  s.base = pts[0];
  const size_t amb = pts[0].size();
  for (size_t c = 0; c < amb; ++c)
    for (const auto& p : pts)
      if (cmp(p[c], s.base[c]) != 0) {
        s.varying.push_back(static_cast<int>(c));
        break;
      }
  QMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (size_t c = 0; c < amb; ++c) d[c] = pts[i][c] - s.base[c];
    diffs.push_back(std::move(d));
  }
  s.dim = diffs.empty() ? 0 : rank(diffs);
  return s;
}

std::string point_set_key(const QMat& pts, int target_dim) {
  std::ostringstream os;
  os << target_dim << '#';
  for (const auto& p : pts) {
    for (const auto& x : p) os << x.get_str() << ',';
    os << ';';
  }
  return os.str();
}

std::mutex g_vol_mutex;
std::map<std::string, Rat> g_vol_cache;

}  // namespace

Rat volume_of_point_set(const QMat& raw, int target_dim) {
  QMat pts = dedup_sorted(raw);
  const std::string key = point_set_key(pts, target_dim);
  {
    std::lock_guard<std::mutex> lock(g_vol_mutex);
    auto it = g_vol_cache.find(key);
    if (it != g_vol_cache.end()) return it->second;
  }

  Span sp = affine_span(pts);
  Rat vol;
  if (sp.dim < target_dim) {
    vol = 0;
  } else if (sp.dim > target_dim) {
    throw std::runtime_error("volume_of_point_set: dimension exceeds target");
  } else {
    if (static_cast<int>(sp.varying.size()) != target_dim)
      throw std::runtime_error(
          "volume_of_point_set: affine span not coordinate-aligned");
    QMat proj;
    for (const auto& p : pts) {
      QVec q(target_dim);
      for (int c = 0; c < target_dim; ++c) q[c] = p[sp.varying[c]];
      proj.push_back(std::move(q));
    }
    if (target_dim == 0) {
      vol = 1;  // a point: by convention the 0-dimensional volume
    } else if (target_dim == 1) {
      Rat lo = proj[0][0], hi = proj[0][0];
      for (const auto& q : proj) {
        if (cmp(q[0], lo) < 0) lo = q[0];
        if (cmp(q[0], hi) > 0) hi = q[0];
      }
      vol = hi - lo;
    } else {
      vol = triangulation_volume(proj, triangulate(proj));
    }
  }
  std::lock_guard<std::mutex> lock(g_vol_mutex);
  g_vol_cache[key] = vol;
  return vol;
}

bool nonneg_combination_exists(const QMat& columns, const QVec& b) {
  // Phase-1 simplex for: exists lambda >= 0 with A*lambda = b.
  const int m = static_cast<int>(b.size());
  const int n = static_cast<int>(columns.size());
  if (n == 0) {
    for (const auto& v : b)
      if (!is_zero(v)) return false;
    return true;
  }

  // Tableau: columns [lambda (n) | artificials (m) | rhs].
  QMat tab(m, QVec(n + m + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = columns[j][i];
    tab[i][n + m] = b[i];
  }
  for (int i = 0; i < m; ++i) {
    if (sgn(tab[i][n + m]) < 0)
      for (auto& v : tab[i]) v = -v;
    tab[i][n + i] = 1;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced cost row for minimizing the artificial sum; artificials start
  // basic, so subtract every constraint row.
  QVec cost(n + m + 1, Rat(0));
  for (int j = n; j < n + m; ++j) cost[j] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j) cost[j] -= tab[i][j];

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;  // Bland's rule: smallest index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rat ratio = tab[i][n + m] / tab[i][enter];
      if (leave < 0 || cmp(ratio, best) < 0 ||
          (cmp(ratio, best) == 0 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("in_convex_hull: unbounded phase 1");
    Rat piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || is_zero(tab[i][enter])) continue;
      Rat f = tab[i][enter];
      for (int j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (!is_zero(cost[enter])) {
      Rat f = cost[enter];
      for (int j = 0; j <= n + m; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return is_zero(cost[n + m]);  // artificial objective == 0 <=> feasible
}

bool in_convex_hull(const QVec& x, const QMat& points) {
  QMat cols;
  for (const auto& p : points) {
    QVec c = p;
    c.push_back(Rat(1));
    cols.push_back(std::move(c));
  }
  QVec b = x;
  b.push_back(Rat(1));
  return nonneg_combination_exists(cols, b);
}

bool in_cone(const QVec& x, const QMat& generators) {
  return nonneg_combination_exists(generators, x);
}

Polytope Polytope::hull(const QMat& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point set");
  Polytope p;
  p.ambient_ = static_cast<int>(points[0].size());
  p.all_points_ = dedup_sorted(points);
  for (const auto& pt : p.all_points_)
    if (static_cast<int>(pt.size()) != p.ambient_)
      throw std::invalid_argument("hull: inconsistent dimensions");

  Span sp = affine_span(p.all_points_);
  p.dim_ = sp.dim;

  if (p.dim_ == 0) {
    p.vertices_ = p.all_points_;
    return p;
  }

  // Work in span coordinates: columns of an affine basis from the points.
  // Pick dim_ points whose differences from the base are independent, and use
  // their differences as a basis B; coordinates are recovered by solving.
  QMat diffs;
  for (const auto& pt : p.all_points_) {
    QVec d(p.ambient_);
    for (int c = 0; c < p.ambient_; ++c) d[c] = pt[c] - p.all_points_[0][c];
    diffs.push_back(std::move(d));
  }
  // Greedy basis selection.
  QMat basis;
  for (const auto& d : diffs) {
    QMat test = basis;
    test.push_back(d);
    if (rank(test) > static_cast<int>(basis.size())) basis.push_back(d);
    if (static_cast<int>(basis.size()) == p.dim_) break;
  }
  // Choose dim_ ambient coordinate rows where the basis has full rank, so
  // span coordinates are solvable from those rows alone.
  std::vector<int> rows;
  {
    QMat acc;
    for (int c = 0; c < p.ambient_ && static_cast<int>(rows.size()) < p.dim_; ++c) {
      QVec col(p.dim_);
      for (int r = 0; r < p.dim_; ++r) col[r] = basis[r][c];
      QMat test = acc;
      test.push_back(col);
      if (rank(test) > static_cast<int>(acc.size())) {
        acc = std::move(test);
        rows.push_back(c);
      }
    }
  }
  QMat bsel(p.dim_, QVec(p.dim_));  // bsel[i][j] = basis[j][rows[i]]
  for (int i = 0; i < p.dim_; ++i)
    for (int j = 0; j < p.dim_; ++j) bsel[i][j] = basis[j][rows[i]];
  auto span_coords = [&](const QVec& pt) -> std::optional<QVec> {
    QVec rhs(p.dim_);
    for (int i = 0; i < p.dim_; ++i)
      rhs[i] = pt[rows[i]] - p.all_points_[0][rows[i]];
    auto y = solve(bsel, rhs);
    if (!y) return std::nullopt;
    // Certify the point really lies in the affine span.
    for (int c = 0; c < p.ambient_; ++c) {
      Rat acc = p.all_points_[0][c];
      for (int j = 0; j < p.dim_; ++j) acc += (*y)[j] * basis[j][c];
      if (cmp(acc, pt[c]) != 0) return std::nullopt;
    }
    return y;
  };

  QMat proj;
  for (const auto& pt : p.all_points_) {
    auto y = span_coords(pt);
    if (!y) throw std::logic_error("hull: point outside computed span");
    proj.push_back(std::move(*y));
  }

  // Boundary structure of the projected set.
  std::set<int> candidate_idx;
  std::vector<std::vector<int>> facet_vertex_sets;
  if (p.dim_ == 1) {
    int lo = 0, hi = 0;
    for (size_t i = 1; i < proj.size(); ++i) {
      if (cmp(proj[i][0], proj[lo][0]) < 0) lo = static_cast<int>(i);
      if (cmp(proj[i][0], proj[hi][0]) > 0) hi = static_cast<int>(i);
    }
    candidate_idx = {lo, hi};
    facet_vertex_sets = {{lo}, {hi}};
  } else {
    Triangulation tri = triangulate(proj);
    for (const auto& [key, f] : tri.boundary) {
      (void)f;
      facet_vertex_sets.push_back(key);
      for (int v : key) candidate_idx.insert(v);
    }
  }

  // Extreme points: candidate v is a vertex iff it is not in the hull of the
  // other points.
  for (int v : candidate_idx) {
    QMat others;
    for (size_t i = 0; i < proj.size(); ++i)
      if (static_cast<int>(i) != v) others.push_back(proj[i]);
    if (!in_convex_hull(proj[v], others))
      p.vertices_.push_back(p.all_points_[v]);
  }
  p.vertices_ = dedup_sorted(p.vertices_);

  // Affine-span equalities as inequality pairs: n*(x - base) = 0 for every n
  // orthogonal to the span directions. Keeps the bounding-box prefilter tight
  // when the polytope lies in a proper affine subspace.
  if (p.dim_ < p.ambient_) {
    for (const auto& n : nullspace(basis)) {
      Rat b = dot(n, p.all_points_[0]);
      p.facets_.emplace_back(n, b);
      QVec neg(n.size());
      for (size_t c = 0; c < n.size(); ++c) neg[c] = -n[c];
      p.facets_.emplace_back(neg, -b);
    }
  }

  // Facet inequalities in ambient coordinates, from nondegenerate boundary
  // facets: normal in span coordinates lifted through the basis rows, then
  // certified against every point. Degenerate (perturbation-only) facets are
  // skipped; the list is a prefilter, never an authority.
  std::set<std::pair<QVec, Rat>, bool (*)(const std::pair<QVec, Rat>&,
                                          const std::pair<QVec, Rat>&)>
      seen([](const std::pair<QVec, Rat>& a, const std::pair<QVec, Rat>& b) {
        int c = cmp_vec(a.first, b.first);
        if (c != 0) return c < 0;
        return cmp(a.second, b.second) < 0;
      });
  for (const auto& fv : facet_vertex_sets) {
    if (p.dim_ == 1) {
      // Facet is a single point y0; inequality +/- y <= +/- y0 in span coords.
      QVec n_span = {Rat(1)};
      Rat b = proj[fv[0]][0];
      bool le = true, ge = true;
      for (const auto& y : proj) {
        if (cmp(y[0], b) > 0) le = false;
        if (cmp(y[0], b) < 0) ge = false;
      }
      if (!le && !ge) continue;
      if (!le) {
        n_span[0] = -1;
        b = -b;
      }
      QVec amb(p.ambient_, Rat(0));
      Rat off = b;
      // y = bsel^{-1} * (x[rows] - base[rows]); n_span . y <= b.
      auto binv = inverse(bsel);
      QVec w(p.dim_);
      for (int i = 0; i < p.dim_; ++i) {
        w[i] = 0;
        for (int j = 0; j < p.dim_; ++j) w[i] += n_span[j] * (*binv)[j][i];
      }
      for (int i = 0; i < p.dim_; ++i) {
        amb[rows[i]] += w[i];
        off += w[i] * p.all_points_[0][rows[i]];
      }
      auto ineq = std::make_pair(amb, off);
      if (seen.insert(ineq).second) p.facets_.push_back(ineq);
      continue;
    }
    // Normal: kernel vector of the (dim-1) x dim difference matrix.
    QMat dm;
    for (size_t i = 1; i < fv.size(); ++i) {
      QVec d(p.dim_);
      for (int c = 0; c < p.dim_; ++c) d[c] = proj[fv[i]][c] - proj[fv[0]][c];
      dm.push_back(std::move(d));
    }
    QMat kern = nullspace(dm);
    if (kern.size() != 1) continue;  // degenerate under perturbation
    QVec n_span = kern[0];
    Rat b = dot(n_span, proj[fv[0]]);
    bool le = true, ge = true;
    for (const auto& y : proj) {
      int c = cmp(dot(n_span, y), b);
      if (c > 0) le = false;
      if (c < 0) ge = false;
    }
    if (!le && !ge) continue;  // not supporting: perturbation artifact
    if (le && ge) continue;    // whole set on the hyperplane (cannot happen)
    if (!le) {
      for (auto& v : n_span) v = -v;
      b = -b;
    }
    // Lift to ambient coordinates through the row-selected basis inverse.
    auto binv = inverse(bsel);
    QVec w(p.dim_);
    for (int i = 0; i < p.dim_; ++i) {
      w[i] = 0;
      for (int j = 0; j < p.dim_; ++j) w[i] += n_span[j] * (*binv)[j][i];
    }
    QVec amb(p.ambient_, Rat(0));
    Rat off = b;
    for (int i = 0; i < p.dim_; ++i) {
      amb[rows[i]] += w[i];
      off += w[i] * p.all_points_[0][rows[i]];
    }
    // Normalize to integer primitive form for dedup.
    Int lcm_den(1);
    for (const auto& v : amb) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), off.get_den().get_mpz_t());
    Int g(0);
    for (const auto& v : amb) {
      Int t = v.get_num() * (lcm_den / v.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    }
    {
      Int t = off.get_num() * (lcm_den / off.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    }
    if (g == 0) g = 1;
    QVec amb_n(p.ambient_);
    for (int c = 0; c < p.ambient_; ++c) amb_n[c] = amb[c] * Rat(lcm_den) / Rat(g);
    Rat off_n = off * Rat(lcm_den) / Rat(g);
    auto ineq = std::make_pair(amb_n, off_n);
    if (seen.insert(ineq).second) p.facets_.push_back(ineq);
  }
  return p;
}

Polytope Polytope::minkowski_sum(const Polytope& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
  QMat sums;
  for (const auto& a : vertices_)
    for (const auto& b : other.vertices_) {
      QVec s(ambient_);
      for (int c = 0; c < ambient_; ++c) s[c] = a[c] + b[c];
      sums.push_back(std::move(s));
    }
  return hull(sums);
}

Rat Polytope::volume_in_coordinate_span() const {
  return volume_of_point_set(vertices_, dim_);
}

bool Polytope::contains(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_)
    throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& [a, b] : facets_)
    if (cmp(dot(a, x), b) > 0) return false;
  return in_convex_hull(x, vertices_);
}

std::vector<std::vector<long>> Polytope::integral_points() const {
  std::vector<Int> lo(ambient_), hi(ambient_);
  for (int c = 0; c < ambient_; ++c) {
    Rat mn = vertices_[0][c], mx = vertices_[0][c];
    for (const auto& v : vertices_) {
      if (cmp(v[c], mn) < 0) mn = v[c];
      if (cmp(v[c], mx) > 0) mx = v[c];
    }
    lo[c] = ceil_rat(mn);
    hi[c] = floor_rat(mx);
  }
  std::vector<std::vector<long>> out;
  std::vector<long> cur(ambient_);
  // Box scan; the box sizes arising here are small (a few thousand cells).
  auto rec = [&](auto&& self, int c) -> void {
    if (c == ambient_) {
      QVec x(ambient_);
      for (int i = 0; i < ambient_; ++i) x[i] = Rat(cur[i]);
      if (contains(x)) out.push_back(cur);
      return;
    }
    if (!lo[c].fits_slong_p() || !hi[c].fits_slong_p())
      throw std::runtime_error("integral_points: bounding box overflow");
    for (long v = lo[c].get_si(); v <= hi[c].get_si(); ++v) {
      cur[c] = v;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Rat mixed_volume_ie(const std::vector<Polytope>& polys, int d) {
  if (static_cast<int>(polys.size()) != d)
    throw std::invalid_argument("mixed_volume_ie: need exactly d polytopes");
  if (d == 0) return Rat(1);
  Rat total(0);
  for (unsigned s = 1; s < (1u << d); ++s) {
    // Minkowski sum of the selected vertex sets, no hull reduction needed:
    // volume_of_point_set handles redundant points.
    QMat pts;
    bool first = true;
    for (int i = 0; i < d; ++i) {
      if (!(s & (1u << i))) continue;
      if (first) {
        pts = polys[i].vertices();
        first = false;
        continue;
      }
      QMat next;
      for (const auto& a : pts)
        for (const auto& b : polys[i].vertices()) {
          QVec v(a.size());
          for (size_t c = 0; c < a.size(); ++c) v[c] = a[c] + b[c];
          next.push_back(std::move(v));
        }
      pts = dedup_sorted(next);
    }
    int bits = __builtin_popcount(s);
    Rat vol = volume_of_point_set(pts, d);
    if ((d - bits) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  return total;
}

}  // namespace cy33
