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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "matinv/error.hpp"
#include "matinv/polyhedral.hpp"

using namespace matinv;

namespace {

ZVector z(std::initializer_list<long> v) {
  ZVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Integer dot(const ZVector& a, const ZVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZVector cross(const ZVector& a, const ZVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ZVector primitive(ZVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

// Twice the area of the convex hull of planar points (monotone chain).
long twice_hull_area(std::vector<std::pair<long, long>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return 0;
  auto turn = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  long a = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& u = h[i];
    const auto& v = h[(i + 1) % h.size()];
    a += u.first * v.second - u.second * v.first;
  }
  return std::abs(a);
}

}  // namespace

TEST_CASE("extreme rays of small cones") {
  auto orthant = extreme_rays({z({1, 0, 0}), z({0, 1, 0}), z({0, 0, 1})}, 3);
  std::set<ZVector> got(orthant.begin(), orthant.end());
  CHECK(got == std::set<ZVector>{z({1, 0, 0}), z({0, 1, 0}), z({0, 0, 1})});

  auto square = extreme_rays({z({1, 0, 1}), z({-1, 0, 1}), z({0, 1, 1}), z({0, -1, 1})}, 3);
  std::set<ZVector> sq(square.begin(), square.end());
  CHECK(sq == std::set<ZVector>{z({1, 1, 1}), z({1, -1, 1}), z({-1, 1, 1}), z({-1, -1, 1})});

  CHECK_THROWS_AS(extreme_rays({z({1, 0})}, 2), Error);
  try {
    extreme_rays({z({1, 0})}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPointed);
  }
}

TEST_CASE("extreme rays against pairwise cross products in R^3") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ZVector> rows{z({1, 1, 1})};
    for (int k = 0; k < 3 + trial % 5; ++k) rows.push_back(z({dist(rng), dist(rng), 6}));
    std::vector<ZVector> rays;
    try {
      rays = extreme_rays(rows, 3);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotPointed);
      continue;
    }
    // A ray of a pointed 3-cone lies on two independent facet planes.
    std::set<ZVector> expect;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        ZVector c = primitive(cross(rows[a], rows[b]));
        if (c == z({0, 0, 0})) continue;
        for (int sgn = 0; sgn < 2; ++sgn) {
          bool feasible = std::all_of(rows.begin(), rows.end(), [&](const ZVector& r) { return dot(r, c) >= 0; });
          if (feasible) expect.insert(c);
          for (auto& x : c) x = -x;
        }
      }
    }
    CHECK(std::set<ZVector>(rays.begin(), rays.end()) == expect);
    CHECK(rays.size() == expect.size());
  }
}

TEST_CASE("cone triangulation volume matches the hull area") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SmallVector> gens;
    std::vector<std::pair<long, long>> pts;
    for (int k = 0; k < 4 + trial % 6; ++k) {
      long x = dist(rng), y = dist(rng);
      gens.push_back({x, y, 1});
      pts.emplace_back(x, y);
    }
    const long area2 = twice_hull_area(pts);
    if (area2 == 0) continue;
    GeneratedCone cone = generated_cone(gens);
    REQUIRE(cone.dim == 3);
    Integer sum = 0;
    for (const auto& simplex : pulling_triangulation(cone)) {
      CHECK(simplex.size() == 3);
      sum += simplex_det(cone, simplex);
    }
    CHECK(sum == area2);
    // Reordering the generators changes the triangulation, not the volume.
    std::shuffle(gens.begin(), gens.end(), rng);
    GeneratedCone again = generated_cone(gens);
    Integer sum2 = 0;
    for (const auto& simplex : pulling_triangulation(again)) sum2 += simplex_det(again, simplex);
    CHECK(sum2 == area2);
    CHECK(extreme_generators(cone).size() == cone.facet_normals.size());
  }
}

TEST_CASE("generated cones in a subspace") {
  // Cone over the unit square, plus a redundant generator.
  std::vector<SmallVector> g{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
  GeneratedCone c = generated_cone(g);
  CHECK(c.dim == 3);
  CHECK(c.facet_normals.size() == 4);
  auto ext = extreme_generators(c);
  CHECK(std::set<int>(ext.begin(), ext.end()) == std::set<int>{0, 1, 2, 3});
  PointSet first_two;
  first_two.set(0);
  first_two.set(1);
  CHECK(rank_of_set(c, first_two) == 2);

  // Lifted into R^4 along a plane x0 + x1 = x3.
  std::vector<SmallVector> h{{1, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 1}};
  CHECK(span_coordinates(h).size() == 3);
  GeneratedCone ch = generated_cone(h);
  CHECK(ch.dim == 3);
  CHECK(pulling_triangulation(ch).size() == 1);
  CHECK_THROWS_AS(generated_cone(std::vector<SmallVector>{{1, 0}, {-1, 0}}), Error);
}

TEST_CASE("exact simplex") {
  LinearProgram lp;
  lp.rows = {{1, 2}, {3, 1}};
  lp.senses = {Sense::kLe, Sense::kLe};
  lp.rhs = {4, 6};
  lp.objective = {1, 1};
  lp.free_var = {false, false};
  LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x[0] == Rational(8, 5));
  CHECK(r.x[1] == Rational(6, 5));

  LinearProgram bad = lp;
  bad.rows.push_back({1, 1});
  bad.senses.push_back(Sense::kGe);
  bad.rhs.push_back(10);
  CHECK(solve_lp(bad).status == LpStatus::kInfeasible);

  LinearProgram open;
  open.rows = {{1, -1}};
  open.senses = {Sense::kLe};
  open.rhs = {1};
  open.objective = {1, 0};
  open.free_var = {false, false};
  CHECK(solve_lp(open).status == LpStatus::kUnbounded);

  // Free variable with equality: max -x s.t. x = -3.
  LinearProgram eq;
  eq.rows = {{1}};
  eq.senses = {Sense::kEq};
  eq.rhs = {-3};
  eq.objective = {-1};
  eq.free_var = {true};
  LpResult e = solve_lp(eq);
  REQUIRE(e.status == LpStatus::kOptimal);
  CHECK(e.value == 3);
}

TEST_CASE("convex hull membership") {
  std::vector<SmallVector> sq{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(in_convex_hull(sq, {1, 1}));
  CHECK(in_convex_hull(sq, {2, 0}));
  CHECK_FALSE(in_convex_hull(sq, {3, 0}));
  // Vertices of Delta(2,4) minus e_{34}: e_3 + e_4 is a vertex, so outside.
  std::vector<SmallVector> d{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
  CHECK_FALSE(in_convex_hull(d, {0, 0, 1, 1}));
  d.push_back({0, 0, 1, 1});
  CHECK(in_convex_hull(d, {0, 0, 1, 1}));
}
