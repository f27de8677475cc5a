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

#include "matinv/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "matinv/error.hpp"

namespace matinv {

namespace {

Integer dot(const ZVector& a, const ZVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Greedily picks m rows of full rank.
std::vector<int> independent_rows(const std::vector<ZVector>& rows, int m) {
  std::vector<int> chosen;
  std::vector<ZVector> current;
  for (int i = 0; i < static_cast<int>(rows.size()) &&
                  static_cast<int>(chosen.size()) < m;
       ++i) {
    current.push_back(rows[i]);
    if (rank_int(current) == static_cast<int>(current.size())) {
      chosen.push_back(i);
    } else {
      current.pop_back();
    }
  }
  return chosen;
}

struct Ray {
  ZVector v;
  PointSet zero;
};

}  // namespace

std::vector<ZVector> extreme_rays(const std::vector<ZVector>& rows, int m) {
  if (static_cast<int>(rows.size()) > kMaxPoints) {
    fail(ErrorCode::kInvalidInput, "too many inequalities for the exact kernel");
  }
  if (m == 0) return {};
  std::vector<int> basis = independent_rows(rows, m);
  if (static_cast<int>(basis.size()) < m) {
    fail(ErrorCode::kNotPointed, "inequalities do not define a pointed cone");
  }
  // Initial simplicial cone: the columns of the inverse of the chosen rows.
  QMatrix sub(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) sub[i][j] = rows[basis[i]][j];
  }
  std::vector<Ray> rays;
  PointSet processed;
  for (int b : basis) processed.set(b);
  for (int k = 0; k < m; ++k) {
    std::vector<Rational> e(m, 0);
    e[k] = 1;
    auto x = solve_q(sub, e);
    if (!x) fail(ErrorCode::kInternal, "singular initial basis in double description");
    Integer den = common_denominator(*x);
    Ray r;
    for (const auto& q : *x) r.v.push_back(q.get_num() * (den / q.get_den()));
    make_primitive(r.v);
    for (int i = 0; i < m; ++i) {
      if (i != k) r.zero.set(basis[i]);
    }
    rays.push_back(std::move(r));
  }
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (processed.test(i)) continue;
    std::vector<Integer> val(rays.size());
    std::vector<int> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rows[i], rays[k].v);
      int s = sgn(val[k]);
      if (s > 0) {
        pos.push_back(static_cast<int>(k));
      } else if (s < 0) {
        neg.push_back(static_cast<int>(k));
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sgn(val[k]) >= 0) {
        Ray r = rays[k];
        if (sgn(val[k]) == 0) r.zero.set(i);
        next.push_back(std::move(r));
      }
    }
    for (int p : pos) {
      for (int q : neg) {
        PointSet common = rays[p].zero & rays[q].zero & processed;
        if (static_cast<int>(common.count()) < m - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (static_cast<int>(k) == p || static_cast<int>(k) == q) continue;
          if ((common & ~rays[k].zero).none()) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r;
        r.v.resize(m);
        for (int j = 0; j < m; ++j) {
          r.v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        }
        make_primitive(r.v);
        r.zero = common;
        r.zero.set(i);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    processed.set(i);
  }
  std::vector<ZVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> span_coordinates(const std::vector<SmallVector>& vectors) {
  QMatrix q;
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (auto x : v) row.emplace_back(static_cast<long>(x));
    q.push_back(std::move(row));
  }
  return rref_q(q);
}

GeneratedCone generated_cone(const std::vector<SmallVector>& vectors) {
  if (vectors.empty()) return GeneratedCone{};
  return generated_cone(vectors, span_coordinates(vectors));
}

GeneratedCone generated_cone(const std::vector<SmallVector>& vectors,
                             const std::vector<int>& coords) {
  GeneratedCone cone;
  if (vectors.empty()) return cone;
  if (static_cast<int>(vectors.size()) > kMaxPoints) {
    fail(ErrorCode::kInvalidInput, "too many generators for the exact kernel");
  }
  cone.coords = coords;
  cone.dim = static_cast<int>(cone.coords.size());
  for (const auto& v : vectors) {
    SmallVector p;
    for (int c : cone.coords) p.push_back(v[c]);
    cone.vectors.push_back(std::move(p));
  }
  if (cone.dim == 0) return cone;
  std::vector<ZVector> rows;
  for (const auto& v : cone.vectors) {
    ZVector z;
    for (auto x : v) z.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(z));
  }
  cone.facet_normals = extreme_rays(rows, cone.dim);
  if (rank_int(cone.facet_normals) < cone.dim) {
    fail(ErrorCode::kNotPointed, "generators span a cone containing a line");
  }
  for (const auto& normal : cone.facet_normals) {
    PointSet s;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (sgn(dot(normal, rows[k])) == 0) s.set(k);
    }
    cone.facet_sets.push_back(s);
  }
  return cone;
}

std::vector<int> extreme_generators(const GeneratedCone& cone) {
  std::vector<int> out;
  std::set<SmallVector> seen;
  for (int k = 0; k < static_cast<int>(cone.vectors.size()); ++k) {
    SmallVector prim = cone.vectors[k];
    make_primitive(prim);
    if (std::all_of(prim.begin(), prim.end(), [](auto x) { return x == 0; })) {
      continue;
    }
    std::vector<ZVector> tight;
    for (std::size_t f = 0; f < cone.facet_sets.size(); ++f) {
      if (cone.facet_sets[f].test(k)) tight.push_back(cone.facet_normals[f]);
    }
    if (rank_int(tight) != cone.dim - 1) continue;
    if (seen.insert(prim).second) out.push_back(k);
  }
  return out;
}

int rank_of_set(const GeneratedCone& cone, const PointSet& set) {
  std::vector<SmallVector> rows;
  for (std::size_t k = 0; k < cone.vectors.size(); ++k) {
    if (set.test(k)) rows.push_back(cone.vectors[k]);
  }
  return rank_int(rows);
}

namespace {

class Puller {
 public:
  explicit Puller(const GeneratedCone& cone) : cone_(cone) {}

  void run(std::vector<std::vector<int>>& out) {
    PointSet all;
    for (std::size_t k = 0; k < cone_.vectors.size(); ++k) all.set(k);
    std::vector<int> prefix;
    recurse(all, cone_.dim, prefix, out, true);
  }

 private:
  int rank(const PointSet& s) {
    auto it = rank_memo_.find(s);
    if (it != rank_memo_.end()) return it->second;
    int r = rank_of_set(cone_, s);
    rank_memo_.emplace(s, r);
    return r;
  }

  const std::vector<PointSet>& facets(const PointSet& s, int k, bool top) {
    if (top) return cone_.facet_sets;
    auto it = facet_memo_.find(s);
    if (it != facet_memo_.end()) return it->second;
    std::vector<PointSet> out;
    for (const auto& h : cone_.facet_sets) {
      PointSet g = s & h;
      if (g == s || g.none()) continue;
      if (std::find(out.begin(), out.end(), g) != out.end()) continue;
      if (rank(g) == k - 1) out.push_back(g);
    }
    return facet_memo_.emplace(s, std::move(out)).first->second;
  }

  void recurse(const PointSet& s, int k, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out, bool top) {
    if (static_cast<int>(s.count()) == k) {
      std::vector<int> simplex = prefix;
      for (std::size_t i = 0; i < cone_.vectors.size(); ++i) {
        if (s.test(i)) simplex.push_back(static_cast<int>(i));
      }
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
      return;
    }
    int v0 = static_cast<int>(s._Find_first());
    if (k == 1) {
      // Repeated generators on one ray.
      std::vector<int> simplex = prefix;
      simplex.push_back(v0);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
      return;
    }
    // Copy: recursion below may rehash the memo.
    std::vector<PointSet> fs = facets(s, k, top);
    prefix.push_back(v0);
    for (const auto& g : fs) {
      if (g.test(v0)) continue;
      recurse(g, k - 1, prefix, out, false);
    }
    prefix.pop_back();
  }

  const GeneratedCone& cone_;
  std::unordered_map<PointSet, int> rank_memo_;
  std::unordered_map<PointSet, std::vector<PointSet>> facet_memo_;
};

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(const GeneratedCone& cone) {
  std::vector<std::vector<int>> out;
  if (cone.dim == 0) return out;
  Puller(cone).run(out);
  return out;
}

Integer simplex_det(const GeneratedCone& cone, const std::vector<int>& simplex) {
  std::vector<SmallVector> rows;
  for (int k : simplex) rows.push_back(cone.vectors[k]);
  Integer d = det_int(rows);
  return abs(d);
}

namespace {

class Tableau {
 public:
  Tableau(QMatrix a, std::vector<Rational> b, std::vector<int> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  // Maximizes cost . x; columns in `blocked` never enter. Returns false when
  // unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& blocked) {
    const int cols = static_cast<int>(cost.size());
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols && enter < 0; ++j) {
        if (blocked[j] || is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i) {
          if (a_[i][j] != 0) r -= cost[basis_[i]] * a_[i][j];
        }
        if (r > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (static_cast<int>(i) == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      }
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  void drop_row(int row) {
    a_.erase(a_.begin() + row);
    b_.erase(b_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

  bool is_basic(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  std::vector<Rational> solution(int cols) const {
    std::vector<Rational> x(cols, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) x[basis_[i]] = b_[i];
    return x;
  }

  QMatrix& a() { return a_; }
  std::vector<int>& basis() { return basis_; }

 private:
  QMatrix a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int nv = static_cast<int>(lp.objective.size());
  // Column layout: original (split when free), slacks, artificials.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int cols = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[j] = cols++;
    if (lp.free_var[j]) neg_col[j] = cols++;
  }
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (lp.senses[i] != Sense::kEq) slack_col[i] = cols++;
  }
  const int first_art = cols;
  cols += m;
  QMatrix a(m, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(m);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) {
      a[i][pos_col[j]] = lp.rows[i][j];
      if (neg_col[j] >= 0) a[i][neg_col[j]] = -lp.rows[i][j];
    }
    if (slack_col[i] >= 0) a[i][slack_col[i]] = lp.senses[i] == Sense::kLe ? 1 : -1;
    b[i] = lp.rhs[i];
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
    a[i][first_art + i] = 1;
    basis[i] = first_art + i;
  }
  Tableau t(std::move(a), std::move(b), std::move(basis));
  std::vector<Rational> phase1(cols, 0);
  for (int i = 0; i < m; ++i) phase1[first_art + i] = -1;
  std::vector<bool> none(cols, false);
  t.maximize(phase1, none);
  LpResult result;
  {
    std::vector<Rational> x = t.solution(cols);
    for (int i = 0; i < m; ++i) {
      if (x[first_art + i] != 0) return result;  // infeasible
    }
  }
  // Drive remaining artificials out of the basis.
  for (int i = static_cast<int>(t.basis().size()) - 1; i >= 0; --i) {
    if (t.basis()[i] < first_art) continue;
    int col = -1;
    for (int j = 0; j < first_art && col < 0; ++j) {
      if (t.a()[i][j] != 0 && !t.is_basic(j)) col = j;
    }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.drop_row(i);
    }
  }
  std::vector<Rational> cost(cols, 0);
  for (int j = 0; j < nv; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) cost[neg_col[j]] = -lp.objective[j];
  }
  std::vector<bool> blocked(cols, false);
  for (int j = first_art; j < cols; ++j) blocked[j] = true;
  if (!t.maximize(cost, blocked)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  std::vector<Rational> x = t.solution(cols);
  result.status = LpStatus::kOptimal;
  result.x.assign(nv, 0);
  result.value = 0;
  for (int j = 0; j < nv; ++j) {
    result.x[j] = x[pos_col[j]];
    if (neg_col[j] >= 0) result.x[j] -= x[neg_col[j]];
    result.value += lp.objective[j] * result.x[j];
  }
  return result;
}

bool in_convex_hull(const std::vector<SmallVector>& points, const SmallVector& point) {
  if (points.empty()) return false;
  const int k = static_cast<int>(points.size());
  const int n = static_cast<int>(point.size());
  LinearProgram lp;
  for (int c = 0; c < n; ++c) {
    std::vector<Rational> row(k);
    for (int j = 0; j < k; ++j) row[j] = static_cast<long>(points[j][c]);
    lp.rows.push_back(std::move(row));
    lp.senses.push_back(Sense::kEq);
    lp.rhs.emplace_back(static_cast<long>(point[c]));
  }
  lp.rows.emplace_back(k, Rational(1));
  lp.senses.push_back(Sense::kEq);
  lp.rhs.emplace_back(1);
  lp.objective.assign(k, 0);
  lp.free_var.assign(k, false);
  return solve_lp(lp).status == LpStatus::kOptimal;
}

}  // namespace matinv
