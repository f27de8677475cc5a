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

#ifndef MATINV_INVARIANTS_HPP_
#define MATINV_INVARIANTS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matinv/matroid.hpp"
#include "matinv/polytope.hpp"
#include "matinv/rational.hpp"

namespace matinv {

// Univariate integer polynomial in t, stored densely from t^0.
class GPolynomial {
 public:
  GPolynomial() = default;
  explicit GPolynomial(std::vector<Integer> coefficients);
  static GPolynomial monomial(int degree, const Integer& c = 1);
  // (1 + t)^k
  static GPolynomial one_plus_t_pow(int k);

  Integer coeff(int i) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coefficients() const { return c_; }
  Integer eval(const Integer& t) const;
  // Lowest exponent with a nonzero coefficient, -1 for the zero polynomial.
  int lowest_degree() const;

  // Exact division by t; throws kInternal if the constant term is nonzero.
  GPolynomial divide_by_t() const;

  GPolynomial operator+(const GPolynomial& o) const;
  GPolynomial operator-(const GPolynomial& o) const;
  GPolynomial operator*(const GPolynomial& o) const;
  friend bool operator==(const GPolynomial& a, const GPolynomial& b) {
    return a.c_ == b.c_;
  }

  // "12t+21t^2+10t^3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Coefficients of x^i y^j.
using TuttePolynomial = std::map<std::pair<int, int>, Integer>;

TuttePolynomial tutte(const Matroid& m);
Integer tutte_eval(const TuttePolynomial& t, const Integer& x, const Integer& y);

// Throws kGroundSetTooSmall when n < 2.
Integer beta(const Matroid& m);

// Connected, free of loops and coloops, beta = 1; cross-checked against a
// greedy series/parallel reduction (kInternal on disagreement).
bool is_series_parallel(const Matroid& m);

GPolynomial g_uniform(int d, int n);
GPolynomial g_wheel(int d);
GPolynomial g_whirl(int d);
// Rank 3, simple, connected. Throws kPreconditionViolated,
// kFlatCountMismatch.
GPolynomial g_rank3(const Matroid& m);
// Maximal rank-2 sets of a simple rank-3 matroid.
std::vector<Mask> rank2_flats(const Matroid& m);

struct GResult {
  GPolynomial g;
  std::string derivation;
};

// The full pipeline. Throws kCoordinateSubgrassmannian, kNotComputable.
GResult g_invariant(const Matroid& m);

// Every derivation applicable to m at the top level, each computed
// independently (sub-problems use the pipeline). Derivations that fail are
// omitted.
std::vector<GResult> g_derivations(const Matroid& m);

// Drops the shared memo of the g engine.
void g_clear_cache();

struct SolvedG {
  Matroid matroid;
  GPolynomial g;
  int face = -1;  // index into interior_faces, -1 for the whole polytope
};

// Solves g_M = sum over interior faces of g_N for the single unknown.
// `lookup` returns the known value of a matroid or nullopt.
// Throws kTooManyUnknowns, kInconsistentSum, kNotMatroidal.
std::vector<SolvedG> g_from_subdivision(
    const Subdivision& s,
    const std::function<std::optional<GPolynomial>(const Matroid&)>& lookup);

// Treats one value as unknown (an interior face index, or -1 for the whole
// polytope) and takes every other value from the g engine.
SolvedG solve_g_with_engine(const Subdivision& s, int unknown);

// Index of the interior face with the most vertices, the default unknown.
int largest_interior_face(const Subdivision& s);

struct SanityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
std::vector<SanityCheck> g_sanity(const Matroid& m, const GPolynomial& g);
bool all_passed(const std::vector<SanityCheck>& checks);

}  // namespace matinv

#endif  // MATINV_INVARIANTS_HPP_
