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

#ifndef MATINV_POLYTOPE_HPP_
#define MATINV_POLYTOPE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "matinv/matroid.hpp"
#include "matinv/rational.hpp"

namespace matinv {

// A lift P: d-subsets -> Q. With a support matroid, only its bases carry
// values; every other subset is treated as +infinity.
struct Lift {
  int n = 0;
  int d = 0;
  std::map<Mask, Rational> values;
  std::optional<Matroid> support;
};

// Checks totality over the d-subsets (or the support bases).
Lift make_lift(int n, int d, std::map<Mask, Rational> values,
               std::optional<Matroid> support = std::nullopt);
Lift zero_lift(int n, int d);
// 0 on the bases of m, 1 on every other d-subset.
Lift indicator_lift(const Matroid& m);
// P_I = min over permutations of the sum of a[k][I_sigma(k)].
Lift tropical_minors(const QMatrix& a);

struct PlueckerWitness {
  Mask s = 0;
  int i = 0, j = 0, k = 0, l = 0;
};
struct PlueckerResult {
  bool ok = true;
  std::optional<PlueckerWitness> witness;
};
PlueckerResult is_tropical_pluecker(const Lift& lift);

struct Cell {
  std::vector<Mask> vertices;  // sorted
  int dim = 0;
  std::optional<Matroid> matroid;  // present iff the vertex set is matroidal
  int components = 0;              // of the matroid, 0 when not matroidal
};

struct Subdivision {
  int n = 0;
  int d = 0;
  std::optional<Matroid> support;
  std::vector<Cell> facets;
  std::vector<Cell> interior_faces;  // includes the facets
  std::map<int, int> f_vector;       // codimension c -> count
  // Sum of |det| over a pulling triangulation per facet, in a lattice basis
  // of the support span; normalized_volume = det_sum / d for full support.
  std::vector<Integer> facet_det_sums;
  Integer support_det_sum;
  bool volume_checked = false;
};

struct SubdivisionOptions {
  bool verify_volume = true;
};

// Regular subdivision of Delta(d,n) (or of Poly of the support) induced by
// the lift. Throws kVolumeCertificateFailure when the facet volumes do not
// add up.
Subdivision regular_subdivision(const Lift& lift, const SubdivisionOptions& options = {});

// Subdivision with a single facet, the whole support polytope.
Subdivision trivial_subdivision(const Matroid& m);

// LP certificate that `cell` is a lower face: lambda with P_I + lambda.e_I
// constant on the cell and strictly larger elsewhere. nullopt if none.
std::optional<std::vector<Rational>> lower_face_certificate(
    const Lift& lift, const std::vector<Mask>& cell);

// Affine dimension of conv{e_I}.
int affine_dim(int n, const std::vector<Mask>& vertices);

// True iff the face with these vertices meets the relative interior of the
// support polytope (of Delta(d,n) when support is empty).
bool is_interior(int n, int d, const std::optional<Matroid>& support,
                 const std::vector<Mask>& vertices);

struct MatroidalResult {
  bool ok = true;
  std::optional<std::vector<Mask>> witness;
};
MatroidalResult is_matroidal(const Subdivision& s);

// Throws kNotMatroidal.
Matroid face_matroid(const Cell& c, int n, int d);

// Throws kDimComponentMismatch when some interior face violates
// dim = n - #components.
std::map<int, int> interior_f_vector(const Subdivision& s);

Integer fvector_bound(int d, int n, int c);

struct BoundRow {
  int c = 0;
  int f = 0;
  Integer bound;
  bool ok = true;
};
struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_ok = true;
  bool all_series_parallel = false;
  bool equality = false;
};
BoundReport check_fvector_bound(const Subdivision& s);

// Eulerian number A(n, k) by its recurrence.
Integer eulerian(int n, int k);

// d * normalized volume of Delta(d,n) = d * A(n-1, d-1).
Integer hypersimplex_det_sum(int d, int n);

}  // namespace matinv

#endif  // MATINV_POLYTOPE_HPP_
