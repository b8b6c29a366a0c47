#pragma once

#include <string>
#include <vector>

#include "cy33/rational.hpp"

namespace cy33 {

// A lattice vector in N = {x in Z^6 : sum x_i = 0}. The rank-5 matrix work
// uses the projection that drops the last coordinate; it is a lattice
// isomorphism on N (the dropped entry is minus the sum of the rest).
using LatticeVector = std::vector<long>;  // length 6, entries sum to 0

inline std::vector<long> project5(const LatticeVector& v) {
  return {v[0], v[1], v[2], v[3], v[4]};
}

struct Cone {
  std::vector<int> generators;  // ray indices into the parent fan's table
  int dim() const { return static_cast<int>(generators.size()); }
};

struct Fan {
  std::vector<LatticeVector> rays;
  std::vector<Cone> maximal_cones;
};

// Ray generators u_{ijk} = -e1-e2-e3+e_i+e_j+e_k and
// v_{ijk} = -e4-e5-e6+e_i+e_j+e_k, for 1 <= i <= j <= k <= 6 with the
// degenerate triples (1,2,3) for u and (4,5,6) for v excluded (they give 0).
LatticeVector ray_u(int i, int j, int k);
LatticeVector ray_v(int i, int j, int k);

// Esd_3 subdivisions of the 3x-dilated standard simplices: 27 unimodular
// simplices for the 3-simplex in R^4, 81 for the 4-simplex in R^5.
std::vector<std::vector<std::vector<long>>> esd3_simplex3();
std::vector<std::vector<std::vector<long>>> esd3_simplex4();

// Triangulation of the prism over sigma and sigma + w, w = (1,1,1,-1,-1,-1),
// into 4 simplices of 5 vertices each. Input: 4 lattice points in Z^6.
std::vector<std::vector<std::vector<long>>> prism_subdivision(
    const std::vector<std::vector<long>>& sigma);

// The subdividing fan: 110 rays (the nonzero lattice points of the 12-vertex
// reflexive polytope) and 1458 maximal cones from the three subdivision
// families. Deterministic: rays sorted lexicographically, cones in
// construction order.
Fan build_fan_pi();

// The coarse fan: face fan of the 12-vertex polytope (12 rays, one maximal
// cone per facet; not simplicial).
Fan build_fan_sigma();

// All distinct d-dimensional faces of a simplicial fan, deduplicated by
// sorted generator set; d = 0 gives the single zero cone.
std::vector<Cone> faces(const Fan& fan, int d);

// Every maximal cone unimodular (|det| = 1 in the rank-5 projection).
bool check_smooth(const Fan& fan);

// Every 4-face of a maximal cone shared by exactly two maximal cones: the
// facet-pairing certificate of completeness for a pure simplicial fan.
bool check_complete(const Fan& fan);

// Every maximal cone of `fine` has all its generators inside a single
// maximal cone of `coarse` (membership by exact nonnegative-span LP).
bool check_refines(const Fan& fine, const Fan& coarse);

// First maximal cone containing the given face (generator-set inclusion for
// simplicial fans). Throws if none contains it.
const Cone& containing_maximal_cone(const Fan& fan, const Cone& sigma);

// JSON wire format: {"rays": [[int x5]...], "maximal_cones": [[idx]...]},
// rays in the 5-coordinate projection, 0-based indices.
std::string fan_to_json(const Fan& fan);
Fan fan_from_json(const std::string& text);

}  // namespace cy33
