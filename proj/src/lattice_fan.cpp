#include "cy33/lattice_fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cy33/linalg.hpp"
#include "cy33/polytope.hpp"

namespace cy33 {

namespace {

const std::vector<LatticeVector>& polytope_vertices() {
  static const std::vector<LatticeVector> verts = {
      {3, 0, 0, -1, -1, -1}, {0, 3, 0, -1, -1, -1}, {0, 0, 3, -1, -1, -1},
      {0, 0, 0, 2, -1, -1},  {0, 0, 0, -1, 2, -1},  {0, 0, 0, -1, -1, 2},
      {2, -1, -1, 0, 0, 0},  {-1, 2, -1, 0, 0, 0},  {-1, -1, 2, 0, 0, 0},
      {-1, -1, -1, 3, 0, 0}, {-1, -1, -1, 0, 3, 0}, {-1, -1, -1, 0, 0, 3}};
  return verts;
}

Polytope the_polytope() {
  QMat pts;
  for (const auto& v : polytope_vertices()) {
    QVec q;
    for (long x : v) q.emplace_back(x);
    pts.push_back(std::move(q));
  }
  return Polytope::hull(pts);
}

LatticeVector ray_from(int base_sign_block, int i, int j, int k) {
  LatticeVector a(6, 0);
  for (int c = base_sign_block; c < base_sign_block + 3; ++c) a[c] = -1;
  a[i - 1] += 1;
  a[j - 1] += 1;
  a[k - 1] += 1;
  return a;
}

void check_triple(int i, int j, int k, int fi, int fj, int fk, const char* name) {
  if (!(1 <= i && i <= j && j <= k && k <= 6))
    throw std::invalid_argument(std::string(name) + ": indices must satisfy 1<=i<=j<=k<=6");
  if (i == fi && j == fj && k == fk)
    throw std::invalid_argument(std::string(name) + ": triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ") is excluded (gives the zero vector)");
}

}  // namespace

LatticeVector ray_u(int i, int j, int k) {
  check_triple(i, j, k, 1, 2, 3, "ray_u");
  return ray_from(0, i, j, k);
}

LatticeVector ray_v(int i, int j, int k) {
  check_triple(i, j, k, 4, 5, 6, "ray_v");
  return ray_from(3, i, j, k);
}

std::vector<std::vector<std::vector<long>>> esd3_simplex3() {
  std::vector<std::vector<std::vector<long>>> triangles;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        std::vector<int> color(12);
        for (int t = 0; t < 12; ++t)
          color[t] = (t > 4 * i) + (t > 1 + 4 * j) + (t > 2 + 4 * k);
        std::vector<std::vector<long>> tri;
        for (int j1 = 0; j1 < 4; ++j1) {
          std::vector<long> p(4, 0);
          for (int i1 = 0; i1 < 3; ++i1) p[color[j1 + i1 * 4]] += 1;
          tri.push_back(std::move(p));
        }
        triangles.push_back(std::move(tri));
      }
  return triangles;
}

std::vector<std::vector<std::vector<long>>> esd3_simplex4() {
  std::vector<std::vector<std::vector<long>>> triangles;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = 0; i2 < 3; ++i2)
      for (int i3 = 0; i3 < 3; ++i3)
        for (int i4 = 0; i4 < 3; ++i4) {
          std::vector<int> color(15);
          for (int t = 0; t < 15; ++t)
            color[t] = (t > 5 * i1) + (t > 1 + 5 * i2) + (t > 2 + 5 * i3) + (t > 3 + 5 * i4);
          std::vector<std::vector<long>> tri;
          for (int j = 0; j < 5; ++j) {
            std::vector<long> p(5, 0);
            for (int i = 0; i < 3; ++i) p[color[j + i * 5]] += 1;
            tri.push_back(std::move(p));
          }
          triangles.push_back(std::move(tri));
        }
  return triangles;
}

std::vector<std::vector<std::vector<long>>> prism_subdivision(
    const std::vector<std::vector<long>>& sigma) {
  if (sigma.size() != 4 || sigma[0].size() != 6)
    throw std::invalid_argument("prism_subdivision: expected 4 points in Z^6");
  std::vector<std::vector<long>> delta = sigma;
  for (auto& p : delta) {
    p[0] += 1;
    p[1] += 1;
    p[2] += 1;
    p[3] -= 1;
    p[4] -= 1;
    p[5] -= 1;
  }
  std::vector<std::vector<std::vector<long>>> triangles;
  for (int i = 0; i < 4; ++i) {
    std::vector<std::vector<long>> tri;
    for (int t = 0; t <= i; ++t) tri.push_back(sigma[t]);
    for (int t = i; t < 4; ++t) tri.push_back(delta[t]);
    triangles.push_back(std::move(tri));
  }
  return triangles;
}

namespace {

// The three families of maximal cones, as lists of generator points in Z^6.
std::vector<std::vector<std::vector<long>>> maximal_cone_points() {
  std::vector<std::vector<std::vector<long>>> cones;
  for (int i = 0; i < 3; ++i) {
    auto triangles = esd3_simplex4();
    for (auto& tri : triangles) {
      for (auto& p : tri) {
        p.insert(p.begin() + i, 0);
        p[0] -= 1;
        p[1] -= 1;
        p[2] -= 1;
      }
      cones.push_back(tri);
    }
  }
  for (int i = 3; i < 6; ++i) {
    auto triangles = esd3_simplex4();
    for (auto& tri : triangles) {
      for (auto& p : tri) {
        p.insert(p.begin() + i, 0);
        p[3] -= 1;
        p[4] -= 1;
        p[5] -= 1;
      }
      cones.push_back(tri);
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) {
      auto triangles = esd3_simplex3();
      for (auto& tri : triangles) {
        for (auto& p : tri) {
          p.insert(p.begin() + i, 0);
          p.insert(p.begin() + j, 0);
          p[0] -= 1;
          p[1] -= 1;
          p[2] -= 1;
        }
        for (auto& prism : prism_subdivision(tri)) cones.push_back(prism);
      }
    }
  return cones;
}

}  // namespace

Fan build_fan_pi() {
  Polytope p = the_polytope();
  Fan fan;
  for (const auto& pt : p.integral_points()) {
    bool zero = std::all_of(pt.begin(), pt.end(), [](long x) { return x == 0; });
    if (!zero) fan.rays.push_back(pt);
  }
  if (fan.rays.size() != 110)
    throw std::runtime_error("build_fan_pi: expected 110 rays, got " +
                             std::to_string(fan.rays.size()));

  std::map<LatticeVector, int> index;
  for (size_t i = 0; i < fan.rays.size(); ++i) index[fan.rays[i]] = static_cast<int>(i);

  for (const auto& pts : maximal_cone_points()) {
    Cone c;
    for (const auto& pt : pts) {
      auto it = index.find(pt);
      if (it == index.end()) {
        std::ostringstream os;
        os << "build_fan_pi: cone generator (";
        for (long x : pt) os << x << ",";
        os << ") is not a declared ray";
        throw std::runtime_error(os.str());
      }
      c.generators.push_back(it->second);
    }
    if (c.generators.size() != 5)
      throw std::runtime_error("build_fan_pi: maximal cone is not 5-dimensional");
    fan.maximal_cones.push_back(std::move(c));
  }
  if (fan.maximal_cones.size() != 1458)
    throw std::runtime_error("build_fan_pi: expected 1458 maximal cones, got " +
                             std::to_string(fan.maximal_cones.size()));
  return fan;
}

Fan build_fan_sigma() {
  Polytope p = the_polytope();
  Fan fan;
  fan.rays = polytope_vertices();

  // Face fan: one maximal cone per facet of the polytope, generated by the
  // vertices on that facet. The polytope is reflexive (origin in its
  // interior), so the face fan is complete.
  for (const auto& [a, b] : p.facet_inequalities()) {
    std::vector<int> on_facet;
    bool all_on = true;
    for (size_t i = 0; i < fan.rays.size(); ++i) {
      QVec x;
      for (long c : fan.rays[i]) x.emplace_back(c);
      if (cmp(dot(a, x), b) == 0)
        on_facet.push_back(static_cast<int>(i));
      else
        all_on = false;
    }
    if (all_on) continue;  // affine-span equality, not a facet
    // Origin must be strictly inside: a*0 = 0 < b.
    if (sgn(b) <= 0) throw std::runtime_error("build_fan_sigma: origin not interior");
    Cone c;
    c.generators = on_facet;
    fan.maximal_cones.push_back(std::move(c));
  }
  return fan;
}

std::vector<Cone> faces(const Fan& fan, int d) {
  if (d == 0) return {Cone{}};
  std::set<std::vector<int>> seen;
  for (const auto& mc : fan.maximal_cones) {
    const int n = mc.dim();
    if (d > n) continue;
    std::vector<int> pick(d);
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == d) {
        std::vector<int> key = pick;
        std::sort(key.begin(), key.end());
        seen.insert(key);
        return;
      }
      for (int i = start; i < n; ++i) {
        pick[depth] = mc.generators[i];
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  std::vector<Cone> out;
  for (const auto& g : seen) out.push_back(Cone{g});
  return out;
}

bool check_smooth(const Fan& fan) {
  for (const auto& mc : fan.maximal_cones) {
    if (mc.dim() != 5) return false;
    QMat m;
    for (int gi : mc.generators) {
      QVec row;
      for (long x : project5(fan.rays[gi])) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    Rat d = det(m);
    if (cmp(abs(d), Rat(1)) != 0) return false;
  }
  return true;
}

bool check_complete(const Fan& fan) {
  std::map<std::vector<int>, int> count;
  for (const auto& mc : fan.maximal_cones) {
    if (mc.dim() != 5)
      throw std::invalid_argument("check_complete: fan must be pure simplicial of dim 5");
    for (int omit = 0; omit < 5; ++omit) {
      std::vector<int> f;
      for (int i = 0; i < 5; ++i)
        if (i != omit) f.push_back(mc.generators[i]);
      std::sort(f.begin(), f.end());
      ++count[f];
    }
  }
  for (const auto& [f, c] : count) {
    (void)f;
    if (c != 2) return false;
  }
  return true;
}

namespace {

QMat cone_generator_columns(const Fan& fan, const Cone& c) {
  QMat cols;
  for (int gi : c.generators) {
    QVec g;
    for (long x : fan.rays[gi]) g.emplace_back(x);
    cols.push_back(std::move(g));
  }
  return cols;
}

bool cone_contains(const Fan& fan, const Cone& c, const QVec& x) {
  return in_cone(x, cone_generator_columns(fan, c));
}

}  // namespace

bool check_refines(const Fan& fine, const Fan& coarse) {
  for (const auto& mc : fine.maximal_cones) {
    // Probe with an interior point (the generator sum), then verify every
    // generator lies in the found coarse cone.
    QVec probe(6, Rat(0));
    for (int gi : mc.generators)
      for (int c = 0; c < 6; ++c) probe[c] += Rat(fine.rays[gi][c]);
    bool found = false;
    for (const auto& cc : coarse.maximal_cones) {
      if (!cone_contains(coarse, cc, probe)) continue;
      bool all_in = true;
      for (int gi : mc.generators) {
        QVec x;
        for (long v : fine.rays[gi]) x.emplace_back(v);
        if (!cone_contains(coarse, cc, x)) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

const Cone& containing_maximal_cone(const Fan& fan, const Cone& sigma) {
  std::set<int> want(sigma.generators.begin(), sigma.generators.end());
  for (const auto& mc : fan.maximal_cones) {
    std::set<int> have(mc.generators.begin(), mc.generators.end());
    if (std::includes(have.begin(), have.end(), want.begin(), want.end())) return mc;
  }
  throw std::runtime_error("containing_maximal_cone: no maximal cone contains the face");
}

std::string fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["rays"] = nlohmann::json::array();
  for (const auto& r : fan.rays) j["rays"].push_back(project5(r));
  j["maximal_cones"] = nlohmann::json::array();
  for (const auto& c : fan.maximal_cones) j["maximal_cones"].push_back(c.generators);
  return j.dump();
}

Fan fan_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Fan fan;
  for (const auto& r : j.at("rays")) {
    LatticeVector v;
    long sum = 0;
    for (const auto& x : r) {
      v.push_back(x.get<long>());
      sum += v.back();
    }
    if (v.size() != 5) throw std::runtime_error("fan_from_json: rays must have 5 coordinates");
    v.push_back(-sum);
    fan.rays.push_back(std::move(v));
  }
  for (const auto& c : j.at("maximal_cones")) {
    Cone cone;
    for (const auto& x : c) {
      int idx = x.get<int>();
      if (idx < 0 || idx >= static_cast<int>(fan.rays.size()))
        throw std::runtime_error("fan_from_json: ray index out of range");
      cone.generators.push_back(idx);
    }
    fan.maximal_cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace cy33
