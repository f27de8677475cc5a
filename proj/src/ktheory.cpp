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

#include "matinv/ktheory.hpp"

#include <algorithm>

#include "matinv/error.hpp"
#include "matinv/polyhedral.hpp"

namespace matinv {

namespace {

Exponent root(int n, int i, int j) {
  Exponent e(n, 0);
  e[j] = 1;
  e[i] = -1;
  return e;
}

Exponent indicator_exponent(int n, Mask s) {
  Exponent e(n, 0);
  for (int x : elements(s)) e[x] = 1;
  return e;
}

LaurentPoly product_one_minus(int n, const std::vector<Exponent>& factors) {
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (const auto& b : factors) p = p * LaurentPoly::one_minus(b);
  return p;
}

// Lattice points of the half-open parallelepiped spanned by the columns of a
// simplicial cone.
LaurentPoly parallelepiped_points(int n, const std::vector<Exponent>& gens,
                                  const std::vector<bool>& open, const Integer& det) {
  const int k = static_cast<int>(gens.size());
  const long d = det.get_si();
  LaurentPoly out(n);
  std::vector<long> t(k);
  for (int j = 0; j < k; ++j) t[j] = open[j] ? 1 : 0;
  for (;;) {
    std::vector<Rational> p(n, 0);
    for (int j = 0; j < k; ++j) {
      if (t[j] == 0) continue;
      Rational lambda(t[j], d);
      lambda.canonicalize();
      for (int c = 0; c < n; ++c) {
        if (gens[j][c] != 0) p[c] += lambda * gens[j][c];
      }
    }
    bool integral = std::all_of(p.begin(), p.end(), [](const Rational& x) {
      return x.get_den() == 1;
    });
    if (integral) {
      Exponent e(n);
      for (int c = 0; c < n; ++c) e[c] = static_cast<int>(p[c].get_num().get_si());
      out.add_term(e, 1);
    }
    int j = 0;
    for (; j < k; ++j) {
      const long lo = open[j] ? 1 : 0;
      if (t[j] < lo + d - 1) {
        ++t[j];
        break;
      }
      t[j] = lo;
    }
    if (j == k) break;
  }
  return out;
}

}  // namespace

LaurentPoly EquivariantClass::at(Mask i) const {
  auto it = f.find(i);
  if (it == f.end()) return LaurentPoly(n);
  return it->second;
}

std::vector<Exponent> tangent_cone_generators(const Matroid& m, Mask basis) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, mask_to_string(basis) + " is not a basis");
  }
  std::vector<Exponent> gens;
  const Mask out = m.ground() & ~basis;
  for (int i : elements(basis)) {
    for (int j : elements(out)) {
      if (m.is_basis((basis & ~bit(i)) | bit(j))) gens.push_back(root(m.n(), i, j));
    }
  }
  return gens;
}

RationalFn cone_hilbert_series(const std::vector<Exponent>& generators, int n) {
  RationalFn result{LaurentPoly::constant(n, 1), {}};
  if (generators.empty()) return result;
  std::vector<SmallVector> vecs;
  for (const auto& g : generators) vecs.emplace_back(g.begin(), g.end());
  GeneratedCone cone = generated_cone(vecs);
  if (cone.dim == 0) return result;
  std::vector<SmallVector> rays;
  for (int idx : extreme_generators(cone)) {
    SmallVector r = vecs[idx];
    make_primitive(r);
    rays.push_back(std::move(r));
  }
  GeneratedCone rcone = generated_cone(rays, cone.coords);
  const int k = rcone.dim;
  // Interior reference point, perturbed lexicographically by unit vectors.
  std::vector<Rational> y0(k, 0);
  for (const auto& r : rcone.vectors) {
    for (int c = 0; c < k; ++c) y0[c] += static_cast<long>(r[c]);
  }
  std::vector<Exponent> ray_exps;
  for (const auto& r : rays) ray_exps.emplace_back(r.begin(), r.end());
  LaurentPoly numerator(n);
  for (const auto& simplex : pulling_triangulation(rcone)) {
    QMatrix g(k, std::vector<Rational>(k));
    for (int c = 0; c < k; ++c) {
      for (int j = 0; j < k; ++j) g[c][j] = static_cast<long>(rcone.vectors[simplex[j]][c]);
    }
    // Rows of the inverse give the coordinates mu_j.
    QMatrix inv(k, std::vector<Rational>(k));
    for (int t = 0; t < k; ++t) {
      std::vector<Rational> e(k, 0);
      e[t] = 1;
      auto col = solve_q(g, e);
      if (!col) fail(ErrorCode::kInternal, "singular simplicial cone");
      for (int j = 0; j < k; ++j) inv[j][t] = (*col)[j];
    }
    std::vector<bool> open(k);
    for (int j = 0; j < k; ++j) {
      Rational mu = 0;
      for (int t = 0; t < k; ++t) mu += inv[j][t] * y0[t];
      int s = sgn(mu);
      for (int t = 0; t < k && s == 0; ++t) s = sgn(inv[j][t]);
      if (s == 0) fail(ErrorCode::kInternal, "degenerate reference point");
      open[j] = s < 0;
    }
    std::vector<Exponent> gens;
    for (int idx : simplex) gens.push_back(ray_exps[idx]);
    LaurentPoly points =
        parallelepiped_points(n, gens, open, simplex_det(rcone, simplex));
    std::vector<Exponent> others;
    for (int r = 0; r < static_cast<int>(ray_exps.size()); ++r) {
      if (!std::binary_search(simplex.begin(), simplex.end(), r)) {
        others.push_back(ray_exps[r]);
      }
    }
    numerator = numerator + points * product_one_minus(n, others);
  }
  result.numerator = numerator;
  result.denominators = ray_exps;
  result.cancel();
  return result;
}

EquivariantClass localized_class(const Matroid& m) {
  const int n = m.n();
  EquivariantClass k;
  k.n = n;
  k.d = m.rank();
  for (Mask basis : m.bases()) {
    RationalFn h = cone_hilbert_series(tangent_cone_generators(m, basis), n);
    std::vector<Exponent> factors;
    for (int i : elements(basis)) {
      for (int j : elements(m.ground() & ~basis)) factors.push_back(root(n, i, j));
    }
    std::vector<Exponent> left;
    for (const auto& r : h.denominators) {
      auto it = std::find(factors.begin(), factors.end(), r);
      if (it != factors.end()) {
        factors.erase(it);
      } else {
        left.push_back(r);
      }
    }
    RationalFn f{h.numerator * product_one_minus(n, factors), left};
    f.cancel();
    if (!f.is_laurent()) {
      fail(ErrorCode::kNotLaurent,
           "f at " + mask_to_string(basis) + " keeps " +
               std::to_string(f.denominators.size()) + " denominator factors");
    }
    k.f.emplace(basis, f.numerator);
  }
  return k;
}

GkmResult check_gkm(const EquivariantClass& k) {
  GkmResult r;
  if (k.d < 1) return r;
  for_each_subset_of_size(k.n, k.d - 1, [&](Mask b) {
    if (!r.ok) return;
    std::vector<int> rest = elements(full_mask(k.n) & ~b);
    for (std::size_t x = 0; x < rest.size() && r.ok; ++x) {
      for (std::size_t y = x + 1; y < rest.size() && r.ok; ++y) {
        const int i = rest[x], j = rest[y];
        LaurentPoly diff = k.at(b | bit(i)) - k.at(b | bit(j));
        if (!diff.substitute(i, j).is_zero()) {
          r.ok = false;
          r.witness = GkmWitness{b, i, j};
        }
      }
    }
  });
  return r;
}

bool is_degree_zero(const EquivariantClass& k) {
  return std::all_of(k.f.begin(), k.f.end(),
                     [](const auto& kv) { return kv.second.is_degree_zero(); });
}

ValuativeReport check_valuative(const Subdivision& s, const Matroid& m) {
  if (!is_connected(m) || loops(m) != 0 || coloops(m) != 0) {
    fail(ErrorCode::kPreconditionViolated,
         "valuativity check needs a connected matroid without loops or coloops");
  }
  const bool support_ok = s.support ? *s.support == m
                                    : (m.n() == s.n && m.rank() == s.d &&
                                       m.num_bases() == uniform(s.d, s.n).num_bases());
  if (!support_ok) {
    fail(ErrorCode::kPreconditionViolated, "subdivision is not a subdivision of Poly_M");
  }
  if (!is_matroidal(s).ok) fail(ErrorCode::kNotMatroidal, "subdivision is not matroidal");
  EquivariantClass whole = localized_class(m);
  std::vector<EquivariantClass> faces;
  for (const auto& c : s.interior_faces) faces.push_back(localized_class(*c.matroid));
  ValuativeReport report;
  for (Mask basis : m.bases()) {
    ValuativeRow row;
    row.basis = basis;
    row.lhs = whole.at(basis);
    row.rhs = LaurentPoly(m.n());
    for (std::size_t i = 0; i < s.interior_faces.size(); ++i) {
      const Cell& c = s.interior_faces[i];
      if (!std::binary_search(c.vertices.begin(), c.vertices.end(), basis)) continue;
      LaurentPoly term = faces[i].at(basis);
      row.rhs = (c.components % 2 == 1) ? row.rhs + term : row.rhs - term;
    }
    row.holds = row.lhs == row.rhs;
    report.ok = report.ok && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BrionReport brion_check(const Matroid& m) {
  const int n = m.n();
  BrionReport report;
  std::vector<SmallVector> verts;
  for (Mask b : m.bases()) {
    Exponent e = indicator_exponent(n, b);
    verts.emplace_back(e.begin(), e.end());
  }
  report.vertices = static_cast<int>(verts.size());
  LaurentPoly points(n);
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (popcount(s) != m.rank()) continue;
    Exponent e = indicator_exponent(n, s);
    if (in_convex_hull(verts, SmallVector(e.begin(), e.end()))) {
      points.add_term(e, 1);
      ++report.lattice_points;
    }
  }
  std::vector<RationalFn> cones;
  std::vector<Exponent> common;
  for (Mask b : m.bases()) {
    RationalFn h = cone_hilbert_series(tangent_cone_generators(m, b), n);
    h.orient();
    h.numerator = h.numerator.shifted(indicator_exponent(n, b));
    std::vector<Exponent> pool = common;
    for (const auto& f : h.denominators) {
      auto it = std::find(pool.begin(), pool.end(), f);
      if (it != pool.end()) {
        pool.erase(it);
      } else {
        common.push_back(f);
      }
    }
    cones.push_back(std::move(h));
  }
  report.lhs = points * product_one_minus(n, common);
  report.rhs = LaurentPoly(n);
  for (const auto& h : cones) {
    std::vector<Exponent> rest = common;
    for (const auto& f : h.denominators) rest.erase(std::find(rest.begin(), rest.end(), f));
    report.rhs = report.rhs + h.numerator * product_one_minus(n, rest);
  }
  report.ok = report.lhs == report.rhs;
  return report;
}

}  // namespace matinv
