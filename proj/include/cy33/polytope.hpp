#pragma once

#include <string>
#include <vector>

#include "cy33/linalg.hpp"
#include "cy33/rational.hpp"

namespace cy33 {

// Exact rational polytope kernel. Hulls, lattice points and volumes are all
// computed over Q; degeneracies are resolved by a symbolic perturbation
// (moment-curve directions with pairwise distinct infinitesimal scales), so
// no genericity assumption is ever made on the input.
class Polytope {
 public:
  // Convex hull of a nonempty point set; identifies the extreme points
  // exactly and computes the dimension.
  static Polytope hull(const QMat& points);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const QMat& vertices() const { return vertices_; }

  // Hull of pairwise vertex sums.
  Polytope minkowski_sum(const Polytope& other) const;

  // Lebesgue volume inside the coordinate subspace spanned by the polytope.
  // Requires the affine span to be a translate of a coordinate subspace;
  // stratum Newton polytopes always are.
  Rat volume_in_coordinate_span() const;

  // All lattice points of the polytope, lexicographically sorted.
  // Bounding-box scan with an H-representation prefilter; every accepted
  // point is confirmed by an exact convex-combination feasibility check.
  std::vector<std::vector<long>> integral_points() const;

  bool contains(const QVec& x) const;

  // Certified valid inequalities a*x <= b (includes the affine-span equality
  // pairs when the polytope is not full-dimensional).
  const std::vector<std::pair<QVec, Rat>>& facet_inequalities() const {
    return facets_;
  }

 private:
  Polytope() = default;
  int ambient_ = 0;
  int dim_ = 0;
  QMat vertices_;
  QMat all_points_;                     // deduplicated input, for membership
  // Facet inequalities a*x <= b in ambient coordinates, valid for the hull
  // (certified against every input point); used only as a prefilter.
  std::vector<std::pair<QVec, Rat>> facets_;
};

// Factorial-absorbed inclusion-exclusion mixed volume:
//   sum over nonempty S of (-1)^(d-|S|) Vol(sum_{i in S} P_i),
// where lower-dimensional Minkowski sums contribute 0. Equals d! times the
// classically normalized mixed volume. Requires exactly d polytopes.
Rat mixed_volume_ie(const std::vector<Polytope>& polys, int d);

// Internal helpers, exposed for tests and for the BKK cache.

// Volume of conv(points) in the coordinate subspace where the points vary,
// or 0 if conv(points) has affine dimension < target_dim. Throws if the
// affine span is full in more than target_dim coordinates (not aligned).
Rat volume_of_point_set(const QMat& points, int target_dim);

// Exact feasibility of A*lambda = b with lambda >= 0 (columns of A given as
// the list `columns`), phase-1 simplex with Bland's rule.
bool nonneg_combination_exists(const QMat& columns, const QVec& b);

// Exact feasibility of x in conv(points), phase-1 simplex with Bland's rule.
bool in_convex_hull(const QVec& x, const QMat& points);

// Exact feasibility of x in cone(generators) (nonnegative span).
bool in_cone(const QVec& x, const QMat& generators);

}  // namespace cy33
