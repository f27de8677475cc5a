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

#ifndef MATINV_KTHEORY_HPP_
#define MATINV_KTHEORY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matinv/laurent.hpp"
#include "matinv/matroid.hpp"
#include "matinv/polytope.hpp"

namespace matinv {

// One Laurent polynomial per basis; every other d-subset carries 0.
struct EquivariantClass {
  int n = 0;
  int d = 0;
  std::map<Mask, LaurentPoly> f;

  LaurentPoly at(Mask i) const;
};

// e_j - e_i for i in I, j not in I with I - i + j a basis. Throws
// kNotABasis.
std::vector<Exponent> tangent_cone_generators(const Matroid& m, Mask basis);

// Sum of x^a over the lattice points of the cone generated by the vectors,
// over the common denominator of its extreme rays. Throws kNotPointed.
RationalFn cone_hilbert_series(const std::vector<Exponent>& generators, int n);

// Throws kNotLaurent when some f_I does not cancel to a Laurent polynomial.
EquivariantClass localized_class(const Matroid& m);

struct GkmWitness {
  Mask b = 0;
  int i = 0, j = 0;
};
struct GkmResult {
  bool ok = true;
  std::optional<GkmWitness> witness;
};
GkmResult check_gkm(const EquivariantClass& k);

bool is_degree_zero(const EquivariantClass& k);

struct ValuativeRow {
  Mask basis = 0;
  bool holds = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};
struct ValuativeReport {
  bool ok = true;
  std::vector<ValuativeRow> rows;
};
// Requires m connected without loops or coloops and s a matroidal
// subdivision of its polytope. Throws kPreconditionViolated, kNotMatroidal.
ValuativeReport check_valuative(const Subdivision& s, const Matroid& m);

struct BrionReport {
  bool ok = false;
  int lattice_points = 0;
  int vertices = 0;
  LaurentPoly lhs;  // lattice point sum times the common denominator
  LaurentPoly rhs;  // vertex cone sum times the common denominator
};
// Compares the lattice point generating function of Poly_M with the sum of
// its vertex cone series.
BrionReport brion_check(const Matroid& m);

}  // namespace matinv

#endif  // MATINV_KTHEORY_HPP_
