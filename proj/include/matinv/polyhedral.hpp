// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATINV_POLYHEDRAL_HPP_
#define MATINV_POLYHEDRAL_HPP_

#include <bitset>
#include <optional>
#include <vector>

#include "matinv/linalg.hpp"
#include "matinv/rational.hpp"

namespace matinv {

// Upper bound on the number of points (or inequalities) any one geometric
// computation handles. C(10,5) + 1 fits.
inline constexpr int kMaxPoints = 512;
using PointSet = std::bitset<kMaxPoints>;

// Extreme rays of the pointed cone {x in R^m : row . x >= 0 for every row},
// by the double description method. Rays are primitive integer vectors in
// a deterministic order. Throws kNotPointed if the rows do not span R^m.
std::vector<ZVector> extreme_rays(const std::vector<ZVector>& rows, int m);

// The cone generated by a finite set of integer vectors, described in
// coordinates where it is full dimensional.
struct GeneratedCone {
  int dim = 0;
  std::vector<int> coords;                // kept coordinates of the original space
  std::vector<SmallVector> vectors;       // generators restricted to `coords`
  std::vector<ZVector> facet_normals;     // inward normals, primitive
  std::vector<PointSet> facet_sets;       // generators lying on each facet
};

// Throws kNotPointed if the generated cone contains a line.
GeneratedCone generated_cone(const std::vector<SmallVector>& vectors);
// Same, projecting onto the given coordinates, which must be injective on
// the span of the vectors (so determinants of different cones in one span
// are comparable).
GeneratedCone generated_cone(const std::vector<SmallVector>& vectors,
                             const std::vector<int>& coords);

// Pivot coordinates of the span of the vectors.
std::vector<int> span_coordinates(const std::vector<SmallVector>& vectors);

// Indices of the generators spanning an extreme ray of the cone, one per
// ray (the first generator on it).
std::vector<int> extreme_generators(const GeneratedCone& cone);

// Pulling triangulation of the vector configuration: each simplex is a
// sorted list of generator indices of size dim.
std::vector<std::vector<int>> pulling_triangulation(const GeneratedCone& cone);

// |det| of the given generators in the kept coordinates.
Integer simplex_det(const GeneratedCone& cone, const std::vector<int>& simplex);

// Rank of a subset of generators.
int rank_of_set(const GeneratedCone& cone, const PointSet& set);

enum class Sense { kLe, kEq, kGe };

struct LinearProgram {
  // maximize objective . x subject to rows[i] . x (sense) rhs[i];
  // variable j is free when free_var[j], else x_j >= 0.
  QMatrix rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  std::vector<bool> free_var;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase dense simplex in exact arithmetic with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

// True iff `point` is a convex combination of `points`.
bool in_convex_hull(const std::vector<SmallVector>& points, const SmallVector& point);

}  // namespace matinv

#endif  // MATINV_POLYHEDRAL_HPP_
