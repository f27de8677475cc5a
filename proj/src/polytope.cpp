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

#include "matinv/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "matinv/error.hpp"
#include "matinv/invariants.hpp"
#include "matinv/polyhedral.hpp"

namespace matinv {

namespace {

std::vector<Mask> support_points(const Lift& lift) {
  if (lift.support) return lift.support->bases();
  std::vector<Mask> pts;
  for_each_subset_of_size(lift.n, lift.d, [&](Mask s) { pts.push_back(s); });
  return pts;
}

SmallVector indicator(int n, Mask s) {
  SmallVector v(n, 0);
  for (int e : elements(s)) v[e] = 1;
  return v;
}

// Rank function of the support polytope's matroid, tabulated.
class SupportRanks {
 public:
  SupportRanks(int n, int d, const std::optional<Matroid>& support)
      : n_(n), d_(d), uniform_(!support) {
    if (!support) return;
    ranks_.assign(std::size_t{1} << n, 0);
    for (Mask s = 0; s < (Mask{1} << n); ++s) ranks_[s] = support->rank_of(s);
    loops_ = loops(*support);
  }

  bool interior(const std::vector<Mask>& vertices) const {
    if (vertices.empty()) return false;
    Mask uni = 0, inter = full_mask(n_);
    for (Mask v : vertices) {
      uni |= v;
      inter &= v;
    }
    if (uniform_) {
      if (d_ == 0 || d_ == n_) return true;
      return uni == full_mask(n_) && inter == 0;
    }
    if ((full_mask(n_) & ~uni & ~loops_) != 0) return false;
    const Mask ground = full_mask(n_);
    const int total = ranks_[ground];
    for (Mask s = 1; s < ground; ++s) {
      if (ranks_[s] + ranks_[ground & ~s] == total) continue;  // separator
      bool tight = true;
      for (Mask v : vertices) {
        if (popcount(v & s) != ranks_[s]) {
          tight = false;
          break;
        }
      }
      if (tight) return false;
    }
    return true;
  }

 private:
  int n_;
  int d_;
  bool uniform_;
  std::vector<int> ranks_;
  Mask loops_ = 0;
};

Cell make_cell(int n, int d, std::vector<Mask> vertices) {
  Cell c;
  std::sort(vertices.begin(), vertices.end());
  c.vertices = std::move(vertices);
  c.dim = affine_dim(n, c.vertices);
  if (!find_exchange_violation(n, c.vertices)) {
    c.matroid = Matroid::trusted(n, d, c.vertices);
    c.components = static_cast<int>(components(*c.matroid).blocks.size());
  }
  return c;
}

Integer det_sum(const std::vector<SmallVector>& vectors, const std::vector<int>& coords) {
  GeneratedCone cone = generated_cone(vectors, coords);
  Integer total = 0;
  for (const auto& simplex : pulling_triangulation(cone)) {
    total += simplex_det(cone, simplex);
  }
  return total;
}

}  // namespace

Lift make_lift(int n, int d, std::map<Mask, Rational> values,
               std::optional<Matroid> support) {
  if (n < 1 || n > kMaxGroundSet || d < 0 || d > n) {
    fail(ErrorCode::kInvalidInput, "lift needs 1 <= n <= 16 and 0 <= d <= n");
  }
  for (const auto& [s, v] : values) {
    if ((s & ~full_mask(n)) != 0 || popcount(s) != d) {
      fail(ErrorCode::kInvalidInput, "lift key " + mask_to_string(s) + " is not a " +
                                         std::to_string(d) + "-subset");
    }
  }
  Lift lift{n, d, std::move(values), std::move(support)};
  if (lift.support && (lift.support->n() != n || lift.support->rank() != d)) {
    fail(ErrorCode::kInvalidInput, "support matroid does not match (n, d)");
  }
  std::vector<Mask> pts = support_points(lift);
  for (Mask s : pts) {
    if (!lift.values.count(s)) {
      fail(ErrorCode::kInvalidInput, "lift has no value for " + mask_to_string(s));
    }
  }
  if (lift.support && lift.values.size() != pts.size()) {
    fail(ErrorCode::kInvalidInput, "lift assigns values outside the support");
  }
  return lift;
}

Lift zero_lift(int n, int d) {
  std::map<Mask, Rational> values;
  for_each_subset_of_size(n, d, [&](Mask s) { values[s] = 0; });
  return make_lift(n, d, std::move(values));
}

Lift indicator_lift(const Matroid& m) {
  std::map<Mask, Rational> values;
  for_each_subset_of_size(m.n(), m.rank(),
                          [&](Mask s) { values[s] = m.is_basis(s) ? 0 : 1; });
  return make_lift(m.n(), m.rank(), std::move(values));
}

Lift tropical_minors(const QMatrix& a) {
  const int d = static_cast<int>(a.size());
  if (d == 0 || a[0].empty()) fail(ErrorCode::kInvalidInput, "empty matrix");
  const int n = static_cast<int>(a[0].size());
  if (d > n) fail(ErrorCode::kInvalidInput, "more rows than columns");
  std::map<Mask, Rational> values;
  for_each_subset_of_size(n, d, [&](Mask s) {
    std::vector<int> cols = elements(s);
    std::optional<Rational> best;
    do {
      Rational sum = 0;
      for (int k = 0; k < d; ++k) sum += a[k][cols[k]];
      if (!best || sum < *best) best = sum;
    } while (std::next_permutation(cols.begin(), cols.end()));
    values[s] = *best;
  });
  return make_lift(n, d, std::move(values));
}

PlueckerResult is_tropical_pluecker(const Lift& lift) {
  PlueckerResult result;
  const int n = lift.n, d = lift.d;
  if (d < 2 || n - d < 2) return result;
  auto value = [&](Mask s) -> std::optional<Rational> {
    auto it = lift.values.find(s);
    if (it == lift.values.end()) return std::nullopt;
    return it->second;
  };
  auto add = [](const std::optional<Rational>& x, const std::optional<Rational>& y)
      -> std::optional<Rational> {
    if (!x || !y) return std::nullopt;
    return *x + *y;
  };
  for_each_subset_of_size(n, d - 2, [&](Mask s) {
    if (!result.ok) return;
    std::vector<int> rest = elements(full_mask(n) & ~s);
    const int m = static_cast<int>(rest.size());
    for (int a = 0; a < m && result.ok; ++a) {
      for (int b = a + 1; b < m && result.ok; ++b) {
        for (int c = b + 1; c < m && result.ok; ++c) {
          for (int e = c + 1; e < m && result.ok; ++e) {
            const int i = rest[a], j = rest[b], k = rest[c], l = rest[e];
            std::optional<Rational> t[3] = {
                add(value(s | bit(i) | bit(j)), value(s | bit(k) | bit(l))),
                add(value(s | bit(i) | bit(k)), value(s | bit(j) | bit(l))),
                add(value(s | bit(i) | bit(l)), value(s | bit(j) | bit(k)))};
            std::optional<Rational> lo;
            for (const auto& x : t) {
              if (x && (!lo || *x < *lo)) lo = x;
            }
            if (!lo) continue;
            int hits = 0;
            for (const auto& x : t) {
              if (x && *x == *lo) ++hits;
            }
            if (hits < 2) {
              result.ok = false;
              result.witness = PlueckerWitness{s, i, j, k, l};
            }
          }
        }
      }
    }
  });
  return result;
}

int affine_dim(int n, const std::vector<Mask>& vertices) {
  if (vertices.empty()) return -1;
  std::vector<SmallVector> rows;
  for (Mask v : vertices) {
    SmallVector r = indicator(n, v);
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rank_int(rows) - 1;
}

bool is_interior(int n, int d, const std::optional<Matroid>& support,
                 const std::vector<Mask>& vertices) {
  return SupportRanks(n, d, support).interior(vertices);
}

Integer eulerian(int n, int k) {
  if (n < 0 || k < 0 || (n > 0 && k >= n) || (n == 0 && k > 0)) return 0;
  std::vector<std::vector<Integer>> a(n + 1, std::vector<Integer>(n + 1, 0));
  a[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      Integer v = (j + 1) * a[i - 1][j];
      if (j > 0) v += (i - j) * a[i - 1][j - 1];
      a[i][j] = v;
    }
  }
  return a[n][k];
}

Integer hypersimplex_det_sum(int d, int n) { return d * eulerian(n - 1, d - 1); }

Subdivision regular_subdivision(const Lift& lift, const SubdivisionOptions& options) {
  const int n = lift.n, d = lift.d;
  Subdivision sub;
  sub.n = n;
  sub.d = d;
  sub.support = lift.support;
  const std::vector<Mask> pts = support_points(lift);
  if (static_cast<int>(pts.size()) > kMaxPoints - 1) {
    fail(ErrorCode::kInvalidInput, "too many points for the exact kernel");
  }
  std::vector<SmallVector> vecs;
  for (Mask p : pts) vecs.push_back(indicator(n, p));

  std::vector<std::vector<Mask>> facet_sets;
  if (pts.size() == 1 || d == 0) {
    facet_sets.push_back(pts);
  } else {
    // Basis of the span of the points, so the dual polyhedron is pointed.
    std::vector<int> basis;
    {
      std::vector<SmallVector> cur;
      for (std::size_t k = 0; k < vecs.size(); ++k) {
        cur.push_back(vecs[k]);
        if (rank_int(cur) == static_cast<int>(cur.size())) {
          basis.push_back(static_cast<int>(k));
        } else {
          cur.pop_back();
        }
      }
    }
    const int r = static_cast<int>(basis.size());
    std::vector<Rational> vals;
    for (Mask p : pts) vals.push_back(lift.values.at(p));
    Integer den = common_denominator(vals);
    std::vector<Integer> scaled;
    for (const auto& v : vals) scaled.push_back(v.get_num() * (den / v.get_den()));
    // Rows of {(beta, s) : s P_I - G_I beta >= 0, s >= 0}.
    std::vector<ZVector> rows;
    std::vector<std::vector<long>> gram(pts.size(), std::vector<long>(r));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ZVector row;
      for (int k = 0; k < r; ++k) {
        gram[i][k] = popcount(pts[i] & pts[basis[k]]);
        row.emplace_back(-gram[i][k]);
      }
      row.push_back(scaled[i]);
      rows.push_back(std::move(row));
    }
    ZVector s_row(r + 1, 0);
    s_row[r] = 1;
    rows.push_back(s_row);
    for (const ZVector& ray : extreme_rays(rows, r + 1)) {
      if (sgn(ray[r]) <= 0) continue;
      std::vector<Mask> cell;
      // a = sum_k (beta_k / s) e_{W_k}; check P_I - a.e_I >= 0, tight on cell.
      std::vector<Rational> a(n, 0);
      for (int k = 0; k < r; ++k) {
        Rational coef(ray[k], ray[r]);
        coef.canonicalize();
        for (int e : elements(pts[basis[k]])) a[e] += coef;
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Rational slack = Rational(scaled[i]);
        for (int e : elements(pts[i])) slack -= a[e];
        if (slack < 0) fail(ErrorCode::kInternal, "lower face certificate violated");
        if (slack == 0) cell.push_back(pts[i]);
      }
      if (affine_dim(n, cell) != r - 1) {
        fail(ErrorCode::kInternal, "vertex of the dual polyhedron gave a lower-dimensional cell");
      }
      facet_sets.push_back(std::move(cell));
    }
  }
  std::sort(facet_sets.begin(), facet_sets.end());
  facet_sets.erase(std::unique(facet_sets.begin(), facet_sets.end()), facet_sets.end());
  for (auto& f : facet_sets) sub.facets.push_back(make_cell(n, d, f));

  // Interior faces are exactly the intersections of facets that meet the
  // interior.
  std::vector<PointSet> facet_bits;
  for (const auto& f : facet_sets) {
    PointSet b;
    for (Mask v : f) {
      b.set(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
    }
    facet_bits.push_back(b);
  }
  std::unordered_set<PointSet> seen(facet_bits.begin(), facet_bits.end());
  std::vector<PointSet> faces = facet_bits;
  for (std::size_t q = 0; q < faces.size(); ++q) {
    for (const auto& f : facet_bits) {
      PointSet g = faces[q] & f;
      if (g.none() || seen.count(g)) continue;
      seen.insert(g);
      faces.push_back(g);
    }
  }
  SupportRanks ranks(n, d, lift.support);
  for (const auto& g : faces) {
    std::vector<Mask> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (g.test(i)) verts.push_back(pts[i]);
    }
    if (!ranks.interior(verts)) continue;
    sub.interior_faces.push_back(make_cell(n, d, std::move(verts)));
  }
  std::sort(sub.interior_faces.begin(), sub.interior_faces.end(),
            [](const Cell& x, const Cell& y) {
              if (x.dim != y.dim) return x.dim > y.dim;
              return x.vertices < y.vertices;
            });
  for (const auto& c : sub.interior_faces) ++sub.f_vector[n - c.dim];

  if (options.verify_volume && pts.size() > 1 && d > 0) {
    std::vector<int> coords = span_coordinates(vecs);
    for (const auto& f : facet_sets) {
      std::vector<SmallVector> fv;
      for (Mask v : f) fv.push_back(indicator(n, v));
      sub.facet_det_sums.push_back(det_sum(fv, coords));
    }
    if (!lift.support) {
      sub.support_det_sum = hypersimplex_det_sum(d, n);
    } else {
      sub.support_det_sum = det_sum(vecs, coords);
    }
    Integer total = std::accumulate(sub.facet_det_sums.begin(), sub.facet_det_sums.end(),
                                    Integer(0));
    if (total != sub.support_det_sum) {
      fail(ErrorCode::kVolumeCertificateFailure,
           "facet volumes sum to " + total.get_str() + " instead of " +
               sub.support_det_sum.get_str());
    }
    sub.volume_checked = true;
  }
  return sub;
}

Subdivision trivial_subdivision(const Matroid& m) {
  Subdivision sub;
  sub.n = m.n();
  sub.d = m.rank();
  sub.support = m;
  Cell whole = make_cell(m.n(), m.rank(), m.bases());
  sub.facets.push_back(whole);
  sub.interior_faces.push_back(whole);
  sub.f_vector[m.n() - whole.dim] = 1;
  return sub;
}

std::optional<std::vector<Rational>> lower_face_certificate(
    const Lift& lift, const std::vector<Mask>& cell) {
  const int n = lift.n;
  // Variables: lambda_1..lambda_n, c0, t.
  LinearProgram lp;
  const int nv = n + 2;
  lp.free_var.assign(nv, true);
  lp.objective.assign(nv, 0);
  lp.objective[n + 1] = 1;
  for (const auto& [s, p] : lift.values) {
    std::vector<Rational> row(nv, 0);
    for (int e : elements(s)) row[e] = 1;
    row[n] = -1;
    bool in_cell = std::binary_search(cell.begin(), cell.end(), s);
    if (!in_cell) row[n + 1] = -1;
    lp.rows.push_back(std::move(row));
    lp.senses.push_back(in_cell ? Sense::kEq : Sense::kGe);
    lp.rhs.push_back(-p);
  }
  std::vector<Rational> cap(nv, 0);
  cap[n + 1] = 1;
  lp.rows.push_back(cap);
  lp.senses.push_back(Sense::kLe);
  lp.rhs.emplace_back(1);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal || r.value <= 0) return std::nullopt;
  return std::vector<Rational>(r.x.begin(), r.x.begin() + n);
}

MatroidalResult is_matroidal(const Subdivision& s) {
  MatroidalResult r;
  for (const auto* list : {&s.facets, &s.interior_faces}) {
    for (const auto& c : *list) {
      if (!c.matroid) {
        r.ok = false;
        r.witness = c.vertices;
        return r;
      }
    }
  }
  return r;
}

Matroid face_matroid(const Cell& c, int n, int d) {
  if (c.matroid) return *c.matroid;
  if (auto v = find_exchange_violation(n, c.vertices)) {
    fail(ErrorCode::kNotMatroidal,
         "cell is not matroidal: exchange fails for B1=" + mask_to_string(v->b1) +
             " B2=" + mask_to_string(v->b2) + " i=" + std::to_string(v->i + 1));
  }
  return Matroid::from_bases(n, d, c.vertices);
}

std::map<int, int> interior_f_vector(const Subdivision& s) {
  std::map<int, int> f;
  for (const auto& c : s.interior_faces) {
    if (!c.matroid) {
      fail(ErrorCode::kNotMatroidal, "interior face is not matroidal");
    }
    const int codim = s.n - c.dim;
    if (codim != c.components) {
      fail(ErrorCode::kDimComponentMismatch,
           "face of dimension " + std::to_string(c.dim) + " has " +
               std::to_string(c.components) + " components");
    }
    ++f[codim];
  }
  return f;
}

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Integer fvector_bound(int d, int n, int c) {
  if (c < 1 || c > std::min(d, n - d)) {
    fail(ErrorCode::kInvalidInput, "c must satisfy 1 <= c <= min(d, n-d)");
  }
  return binomial(n - c - 1, d - c) * binomial(n - d - 1, c - 1);
}

BoundReport check_fvector_bound(const Subdivision& s) {
  BoundReport report;
  std::map<int, int> f = interior_f_vector(s);
  report.equality = true;
  for (int c = 1; c <= std::min(s.d, s.n - s.d); ++c) {
    BoundRow row;
    row.c = c;
    row.f = f.count(c) ? f.at(c) : 0;
    row.bound = fvector_bound(s.d, s.n, c);
    row.ok = row.f <= row.bound;
    report.all_ok = report.all_ok && row.ok;
    report.equality = report.equality && row.f == row.bound;
    report.rows.push_back(row);
  }
  report.all_series_parallel = !s.facets.empty();
  for (const auto& c : s.facets) {
    if (!c.matroid || !is_series_parallel(*c.matroid)) {
      report.all_series_parallel = false;
      break;
    }
  }
  return report;
}

}  // namespace matinv
