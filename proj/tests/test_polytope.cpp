#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cy33/polytope.hpp"

using namespace cy33;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Polytope simplex2() {
  return Polytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
}

// Independent simplex-volume oracle: fan triangulation from vertex 0 is not
// available for a raw point set, so use the determinant formula on an
// explicit simplex only.
Rat simplex_volume(const QMat& v) {
  const int k = static_cast<int>(v[0].size());
  QMat m(k, QVec(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m[r][c] = v[r + 1][c] - v[0][c];
  Rat f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return abs(det(m)) / f;
}

}  // namespace

TEST_CASE("hull removes interior and redundant points") {
  Polytope sq = Polytope::hull(
      {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1}), {rat(1, 2), rat(1, 2)}});
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);

  Polytope pt = Polytope::hull({qv({0, 0, 0})});
  CHECK(pt.dim() == 0);
  CHECK(pt.vertices().size() == 1);

  Polytope s3 = Polytope::hull({qv({0, 0, 0}), qv({3, 0, 0}), qv({0, 3, 0}), qv({0, 0, 3})});
  CHECK(s3.dim() == 3);
  CHECK(s3.vertices().size() == 4);

  // Collinear points: a segment with a midpoint.
  Polytope seg = Polytope::hull({qv({0, 0}), qv({2, 2}), qv({1, 1})});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
}

TEST_CASE("minkowski sums") {
  Polytope sx = Polytope::hull({qv({0, 0}), qv({1, 0})});
  Polytope sy = Polytope::hull({qv({0, 0}), qv({0, 1})});
  Polytope sq = sx.minkowski_sum(sy);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.volume_in_coordinate_span() == Rat(1));

  // Adding a point translates.
  Polytope t = sq.minkowski_sum(Polytope::hull({qv({5, 7})}));
  CHECK(t.vertices().size() == 4);
  CHECK(t.contains(qv({5, 7})));
  CHECK(t.contains(qv({6, 8})));
  CHECK(!t.contains(qv({4, 7})));

  // Delta + Delta = 2*Delta, volume scales by 4.
  Polytope d = simplex2();
  Polytope dd = d.minkowski_sum(d);
  CHECK(dd.volume_in_coordinate_span() == Rat(4) * d.volume_in_coordinate_span());
}

TEST_CASE("volumes") {
  Polytope sq = Polytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  CHECK(sq.volume_in_coordinate_span() == Rat(1));
  CHECK(simplex2().volume_in_coordinate_span() == rat(1, 2));
  Polytope s3 = Polytope::hull({qv({0, 0, 0}), qv({3, 0, 0}), qv({0, 3, 0}), qv({0, 0, 3})});
  CHECK(s3.volume_in_coordinate_span() == rat(9, 2));

  // Non-coordinate-aligned span is rejected.
  Polytope diag = Polytope::hull({qv({0, 0}), qv({1, 1})});
  CHECK_THROWS(diag.volume_in_coordinate_span());

  // A polytope in a coordinate subspace of a bigger ambient space.
  Polytope flat = Polytope::hull({qv({0, 0, 5}), qv({1, 0, 5}), qv({0, 1, 5}), qv({1, 1, 5})});
  CHECK(flat.dim() == 2);
  CHECK(flat.volume_in_coordinate_span() == Rat(1));
}

TEST_CASE("dilation law") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    QMat pts;
    for (int i = 0; i < 5; ++i) pts.push_back(qv({coord(rng), coord(rng), coord(rng)}));
    Polytope p = Polytope::hull(pts);
    Rat v1 = volume_of_point_set(pts, 3);
    for (long lam = 2; lam <= 3; ++lam) {
      QMat sc;
      for (const auto& pt : pts) {
        QVec q(3);
        for (int c = 0; c < 3; ++c) q[c] = Rat(lam) * pt[c];
        sc.push_back(q);
      }
      Rat vl = volume_of_point_set(sc, 3);
      Rat expect = v1;
      for (int i = 0; i < p.dim() && p.dim() == 3; ++i) expect *= lam;
      if (p.dim() == 3) CHECK(vl == expect);
      else CHECK(vl == Rat(0));
    }
  }
}

TEST_CASE("volume additivity against simplex oracle") {
  // conv{0,2e1,2e2,e1+e2+...} style shapes: verify hull volume equals the sum
  // of simplex volumes in an explicit hand triangulation.
  QMat sq = {qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({2, 2})};
  Rat direct = volume_of_point_set(sq, 2);
  Rat split = simplex_volume({sq[0], sq[1], sq[2]}) + simplex_volume({sq[1], sq[2], sq[3]});
  CHECK(direct == split);

  QMat box = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}),
              qv({1, 1, 0}), qv({1, 0, 1}), qv({0, 1, 1}), qv({1, 1, 1})};
  CHECK(volume_of_point_set(box, 3) == Rat(1));
}

TEST_CASE("integral points") {
  CHECK(simplex2().integral_points().size() == 3);

  Polytope s4 = Polytope::hull(
      {qv({3, 0, 0, 0}), qv({0, 3, 0, 0}), qv({0, 0, 3, 0}), qv({0, 0, 0, 3})});
  CHECK(s4.integral_points().size() == 20);  // C(6,3)

  // Stars and bars for conv{n*e_1, ..., n*e_k}: C(n+k-1, k-1).
  Polytope s2 = Polytope::hull({qv({2, 0, 0}), qv({0, 2, 0}), qv({0, 0, 2})});
  CHECK(s2.integral_points().size() == 6);

  // Output is lexicographically sorted and exact.
  auto pts = simplex2().integral_points();
  std::vector<std::vector<long>> expect = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(pts == expect);
}

TEST_CASE("the 12-vertex reflexive polytope has 111 lattice points") {
  QMat verts = {
      qv({3, 0, 0, -1, -1, -1}), qv({0, 3, 0, -1, -1, -1}),
      qv({0, 0, 3, -1, -1, -1}), qv({0, 0, 0, 2, -1, -1}),
      qv({0, 0, 0, -1, 2, -1}), qv({0, 0, 0, -1, -1, 2}),
      qv({2, -1, -1, 0, 0, 0}), qv({-1, 2, -1, 0, 0, 0}),
      qv({-1, -1, 2, 0, 0, 0}), qv({-1, -1, -1, 3, 0, 0}),
      qv({-1, -1, -1, 0, 3, 0}), qv({-1, -1, -1, 0, 0, 3})};
  Polytope p = Polytope::hull(verts);
  CHECK(p.dim() == 5);
  CHECK(p.vertices().size() == 12);
  auto pts = p.integral_points();
  CHECK(pts.size() == 111);
  // Origin included; every point sums to zero (the polytope's hyperplane).
  bool origin = false;
  for (const auto& q : pts) {
    long s = 0;
    for (long x : q) s += x;
    CHECK(s == 0);
    if (q == std::vector<long>{0, 0, 0, 0, 0, 0}) origin = true;
  }
  CHECK(origin);
}

TEST_CASE("mixed volume basics") {
  Polytope sx = Polytope::hull({qv({0, 0}), qv({1, 0})});
  Polytope sy = Polytope::hull({qv({0, 0}), qv({0, 1})});
  CHECK(mixed_volume_ie({sx, sy}, 2) == Rat(1));
  CHECK(mixed_volume_ie({sy, sx}, 2) == Rat(1));

  Polytope d = simplex2();
  CHECK(mixed_volume_ie({d, d}, 2) == Rat(1));

  // d copies of P gives d! * Vol(P).
  Polytope box3 = Polytope::hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}),
                                  qv({0, 0, 1}), qv({1, 1, 0}), qv({1, 0, 1}),
                                  qv({0, 1, 1}), qv({1, 1, 1})});
  CHECK(mixed_volume_ie({box3, box3, box3}, 3) == Rat(6));

  // Degenerate arguments give 0: two parallel segments in the plane.
  CHECK(mixed_volume_ie({sx, sx}, 2) == Rat(0));
}

TEST_CASE("mixed volume matches interpolation oracle on random instances") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coord(0, 3);
  std::uniform_int_distribution<int> nv(2, 5);
  std::uniform_int_distribution<int> dims(2, 3);
  int done = 0;
  while (done < 40) {
    int d = dims(rng);
    std::vector<Polytope> polys;
    for (int i = 0; i < d; ++i) {
      QMat pts;
      int n = nv(rng);
      for (int j = 0; j < n; ++j) {
        QVec v(d);
        for (int c = 0; c < d; ++c) v[c] = Rat(coord(rng));
        pts.push_back(v);
      }
      polys.push_back(Polytope::hull(pts));
    }

    // Independent oracle: Vol(l1 P1 + ... + ld Pd) is a homogeneous degree-d
    // polynomial in (l1,...,ld); interpolate it exactly on a grid of strictly
    // positive integer weights (so no summand ever degenerates to the IE
    // special cases) and read off the coefficient of l1*l2*...*ld.
    auto vol_at = [&](const std::vector<long>& lam) -> Rat {
      QMat pts = {QVec(d, Rat(0))};
      for (int i = 0; i < d; ++i) {
        if (lam[i] == 0) continue;
        QMat next;
        for (const auto& a : pts)
          for (const auto& b : polys[i].vertices()) {
            QVec v(d);
            for (int c = 0; c < d; ++c) v[c] = a[c] + Rat(lam[i]) * b[c];
            next.push_back(v);
          }
        pts = next;
      }
      return volume_of_point_set(pts, d);
    };

    Rat mv = mixed_volume_ie(polys, d);

    // All monomials s^e with |e| = d, in a fixed order; the mixed term is
    // the one with every exponent equal to 1.
    std::vector<std::vector<int>> monos;
    {
      std::vector<int> e(d, 0);
      auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d - 1) {
          e[pos] = left;
          monos.push_back(e);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[pos] = v;
          self(self, pos + 1, left - v);
        }
      };
      rec(rec, 0, d);
    }
    // Positive-weight grid points: enough small tuples for a square system.
    std::vector<std::vector<long>> grid;
    {
      std::vector<long> lam(d, 1);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d) {
          grid.push_back(lam);
          return;
        }
        for (long v = 1; v <= d + 1; ++v) {
          lam[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
    grid.resize(monos.size() * 3);  // plenty; pick an invertible subset below
    QMat vand;
    QVec rhs;
    size_t gi = 0;
    while (vand.size() < monos.size() && gi < grid.size()) {
      QVec row;
      for (const auto& e : monos) {
        Rat m(1);
        for (int c = 0; c < d; ++c)
          for (int k = 0; k < e[c]; ++k) m *= Rat(grid[gi][c]);
        row.push_back(m);
      }
      QMat trial = vand;
      trial.push_back(row);
      if (rank(trial) > static_cast<int>(vand.size())) {
        vand = trial;
        rhs.push_back(vol_at(grid[gi]));
      }
      ++gi;
    }
    REQUIRE(vand.size() == monos.size());
    auto coeffs = solve(vand, rhs);
    REQUIRE(coeffs.has_value());
    size_t mixed_idx = 0;
    for (size_t i = 0; i < monos.size(); ++i)
      if (std::all_of(monos[i].begin(), monos[i].end(), [](int x) { return x == 1; }))
        mixed_idx = i;
    CHECK(mv == (*coeffs)[mixed_idx]);

    // Symmetry under a random transposition.
    if (d >= 2) {
      std::vector<Polytope> perm = polys;
      std::swap(perm[0], perm[d - 1]);
      CHECK(mixed_volume_ie(perm, d) == mv);
    }
    ++done;
  }
}

TEST_CASE("mixed volume multilinearity via dilation") {
  // MV(2P, Q) = 2 MV(P, Q) for segments and triangles.
  Polytope p = simplex2();
  Polytope q = Polytope::hull({qv({0, 0}), qv({1, 2}), qv({3, 1})});
  QMat dbl;
  for (const auto& v : p.vertices()) dbl.push_back({Rat(2) * v[0], Rat(2) * v[1]});
  Polytope p2 = Polytope::hull(dbl);
  CHECK(mixed_volume_ie({p2, q}, 2) == Rat(2) * mixed_volume_ie({p, q}, 2));
}

TEST_CASE("contains") {
  Polytope s3 = Polytope::hull({qv({0, 0, 0}), qv({3, 0, 0}), qv({0, 3, 0}), qv({0, 0, 3})});
  CHECK(s3.contains(qv({1, 1, 1})));
  CHECK(s3.contains({rat(3, 2), rat(3, 2), Rat(0)}));
  CHECK(!s3.contains(qv({2, 2, 2})));
  CHECK(s3.contains(qv({3, 0, 0})));
  CHECK(!s3.contains({rat(-1, 7), Rat(0), Rat(0)}));
}
