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

#include "matinv/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "matinv/error.hpp"

namespace matinv {

namespace {

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) {
    fail(ErrorCode::kInvalidInput,
         "element " + std::to_string(e + 1) + " outside ground set of size " +
             std::to_string(m.n()));
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Matroid Matroid::from_bases(int n, int rank, std::vector<Mask> bases) {
  if (n < 0 || n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput,
         "ground set size " + std::to_string(n) + " outside 0.." +
             std::to_string(kMaxGroundSet));
  }
  if (rank < 0 || rank > n) {
    fail(ErrorCode::kInvalidInput, "rank " + std::to_string(rank) +
                                       " outside 0.." + std::to_string(n));
  }
  if (bases.empty()) fail(ErrorCode::kEmptyBases, "no bases given");
  for (Mask b : bases) {
    if ((b & ~full_mask(n)) != 0) {
      fail(ErrorCode::kInvalidInput,
           "basis " + mask_to_string(b) + " leaves the ground set");
    }
    if (popcount(b) != rank) {
      fail(ErrorCode::kInvalidInput, "basis " + mask_to_string(b) +
                                         " does not have " +
                                         std::to_string(rank) + " elements");
    }
  }
  sort_unique(bases);
  if (auto v = find_exchange_violation(n, bases)) {
    fail(ErrorCode::kExchangeAxiomViolation,
         "exchange axiom fails for B1=" + mask_to_string(v->b1) +
             " B2=" + mask_to_string(v->b2) + " i=" + std::to_string(v->i + 1));
  }
  return Matroid(n, rank, std::move(bases));
}

Matroid Matroid::trusted(int n, int rank, std::vector<Mask> bases) {
  sort_unique(bases);
  if (bases.empty()) fail(ErrorCode::kInternal, "operation produced no bases");
  return Matroid(n, rank, std::move(bases));
}

bool Matroid::is_basis(Mask b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(Mask s) const {
  int best = 0;
  for (Mask b : bases_) {
    best = std::max(best, popcount(b & s));
    if (best == rank_) break;
  }
  return best;
}

BasisTable::BasisTable(const Matroid& m) : BasisTable(m.n(), m.bases()) {}

BasisTable::BasisTable(int n, const std::vector<Mask>& bases)
    : table_(std::size_t{1} << n, 0) {
  for (Mask b : bases) table_[b] = 1;
}

std::optional<ExchangeViolation> find_exchange_violation(
    int n, const std::vector<Mask>& bases) {
  BasisTable table(n, bases);
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask only1 = b1 & ~b2;
      Mask only2 = b2 & ~b1;
      for (int i : elements(only1)) {
        bool found = false;
        for (int j : elements(only2)) {
          if (table((b1 & ~bit(i)) | bit(j))) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{b1, b2, i};
      }
    }
  }
  return std::nullopt;
}

Matroid from_matrix(const QMatrix& rows) {
  if (rows.empty() || rows[0].empty()) {
    fail(ErrorCode::kInvalidInput, "matrix has no entries");
  }
  const int n = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      fail(ErrorCode::kInvalidInput, "matrix rows have different lengths");
    }
  }
  if (n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput, "more than 16 columns");
  }
  QMatrix reduced = rows;
  std::vector<int> pivots = rref_q(reduced);
  const int rank = static_cast<int>(pivots.size());
  if (rank == 0) fail(ErrorCode::kZeroMatrix, "matrix is zero");
  reduced.resize(rank);
  std::vector<SmallVector> integral;
  std::vector<ZVector> big;
  bool small = true;
  for (const auto& r : reduced) {
    Integer den = common_denominator(r);
    ZVector z;
    for (const auto& q : r) {
      Integer v = q.get_num() * (den / q.get_den());
      if (!v.fits_slong_p()) small = false;
      z.push_back(v);
    }
    big.push_back(std::move(z));
  }
  if (small) {
    for (const auto& z : big) {
      SmallVector s;
      for (const auto& v : z) s.push_back(v.get_si());
      integral.push_back(std::move(s));
    }
  }
  std::vector<Mask> bases;
  for_each_subset_of_size(n, rank, [&](Mask s) {
    std::vector<int> cols = elements(s);
    bool nonzero;
    if (small) {
      std::vector<SmallVector> sub(rank, SmallVector(rank));
      for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) sub[i][j] = integral[i][cols[j]];
      }
      nonzero = det_int(sub) != 0;
    } else {
      std::vector<ZVector> sub(rank, ZVector(rank));
      for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) sub[i][j] = big[i][cols[j]];
      }
      nonzero = det_int(sub) != 0;
    }
    if (nonzero) bases.push_back(s);
  });
  return Matroid::trusted(n, rank, std::move(bases));
}

Matroid from_matrix_mod_p(const std::vector<std::vector<std::int64_t>>& rows,
                          int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    fail(ErrorCode::kInvalidInput,
         "field GF(" + std::to_string(p) + ") unsupported; use a prime <= 7");
  }
  if (rows.empty() || rows[0].empty()) {
    fail(ErrorCode::kInvalidInput, "matrix has no entries");
  }
  const int n = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      fail(ErrorCode::kInvalidInput, "matrix rows have different lengths");
    }
  }
  if (n > kMaxGroundSet) fail(ErrorCode::kInvalidInput, "more than 16 columns");
  const int rank = rank_mod_p(rows, p);
  if (rank == 0) fail(ErrorCode::kZeroMatrix, "matrix is zero");
  std::vector<Mask> bases;
  for_each_subset_of_size(n, rank, [&](Mask s) {
    std::vector<int> cols = elements(s);
    std::vector<std::vector<std::int64_t>> sub(rows.size(),
                                               std::vector<std::int64_t>(rank));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < rank; ++j) sub[i][j] = rows[i][cols[j]];
    }
    if (rank_mod_p(sub, p) == rank) bases.push_back(s);
  });
  return Matroid::trusted(n, rank, std::move(bases));
}

Matroid from_graph(const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  if (n == 0 || n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput, "graph needs between 1 and 16 edges");
  }
  std::map<int, int> index;
  for (auto [u, v] : edges) {
    index.emplace(u, 0);
    index.emplace(v, 0);
  }
  int next = 0;
  for (auto& [label, id] : index) id = next++;
  auto acyclic = [&](Mask s, int* size) {
    UnionFind uf(next);
    int merged = 0;
    for (int e : elements(s)) {
      if (!uf.unite(index[edges[e].first], index[edges[e].second])) return false;
      ++merged;
    }
    if (size) *size = merged;
    return true;
  };
  // Rank of the cycle matroid of the whole graph.
  UnionFind uf(next);
  int rank = 0;
  for (auto [u, v] : edges) {
    if (uf.unite(index[u], index[v])) ++rank;
  }
  std::vector<Mask> bases;
  for_each_subset_of_size(n, rank, [&](Mask s) {
    if (acyclic(s, nullptr)) bases.push_back(s);
  });
  return Matroid::trusted(n, rank, std::move(bases));
}

Matroid uniform(int rank, int n) {
  if (n < 0 || n > kMaxGroundSet || rank < 0 || rank > n) {
    fail(ErrorCode::kInvalidInput, "uniform matroid needs 0 <= d <= n <= 16");
  }
  std::vector<Mask> bases;
  for_each_subset_of_size(n, rank, [&](Mask s) { bases.push_back(s); });
  return Matroid::trusted(n, rank, std::move(bases));
}

QMatrix wheel_matrix(int d) {
  QMatrix a(d, std::vector<Rational>(2 * d, 0));
  for (int k = 0; k < d; ++k) {
    a[k][k] = 1;
    a[k][d + k] = 1;
    a[(k + 1) % d][d + k] = -1;
  }
  return a;
}

Matroid wheel(int d) {
  if (d < 2 || 2 * d > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput, "wheel needs 2 <= d <= 8");
  }
  return from_matrix(wheel_matrix(d));
}

Matroid whirl(int d) {
  Matroid w = wheel(d);
  std::vector<Mask> bases = w.bases();
  bases.push_back(full_mask(2 * d) & ~full_mask(d));
  return Matroid::trusted(2 * d, d, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.num_bases());
  for (Mask b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::trusted(m.n(), m.n() - m.rank(), std::move(bases));
}

Matroid restrict_to(const Matroid& m, Mask s) {
  s &= m.ground();
  const int r = m.rank_of(s);
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (popcount(b & s) == r) bases.push_back(compress(b, s));
  }
  return Matroid::trusted(popcount(s), r, std::move(bases));
}

Matroid delete_element(const Matroid& m, int e) {
  check_element(m, e);
  if (has(coloops(m), e)) {
    fail(ErrorCode::kColoopDeletion,
         "element " + std::to_string(e + 1) + " is a coloop");
  }
  return restrict_to(m, m.ground() & ~bit(e));
}

Matroid contract_element(const Matroid& m, int e) {
  check_element(m, e);
  if (has(loops(m), e)) {
    fail(ErrorCode::kLoopContraction,
         "element " + std::to_string(e + 1) + " is a loop");
  }
  const Mask keep = m.ground() & ~bit(e);
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if (has(b, e)) bases.push_back(compress(b, keep));
  }
  return Matroid::trusted(m.n() - 1, m.rank() - 1, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput, "direct sum exceeds 16 elements");
  }
  std::vector<Mask> bases;
  bases.reserve(a.num_bases() * b.num_bases());
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) bases.push_back(x | (y << a.n()));
  }
  return Matroid::trusted(a.n() + b.n(), a.rank() + b.rank(), std::move(bases));
}

Matroid two_sum(const Matroid& a, int e1, const Matroid& b, int e2) {
  check_element(a, e1);
  check_element(b, e2);
  if (a.n() < 2 || b.n() < 2) {
    fail(ErrorCode::kDegenerateTerminal, "2-sum needs at least two elements per side");
  }
  if (has(loops(a) | coloops(a), e1)) {
    fail(ErrorCode::kDegenerateTerminal,
         "terminal " + std::to_string(e1 + 1) + " of the first matroid is a loop or coloop");
  }
  if (has(loops(b) | coloops(b), e2)) {
    fail(ErrorCode::kDegenerateTerminal,
         "terminal " + std::to_string(e2 + 1) + " of the second matroid is a loop or coloop");
  }
  const int n = a.n() + b.n() - 2;
  if (n > kMaxGroundSet) fail(ErrorCode::kInvalidInput, "2-sum exceeds 16 elements");
  const Mask keep1 = a.ground() & ~bit(e1);
  const Mask keep2 = b.ground() & ~bit(e2);
  std::vector<Mask> bases;
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) {
      if (has(x, e1) == has(y, e2)) continue;
      bases.push_back(compress(x, keep1) | (compress(y, keep2) << (a.n() - 1)));
    }
  }
  return Matroid::trusted(n, a.rank() + b.rank() - 1, std::move(bases));
}

Matroid parallel_ext(const Matroid& m, int e) {
  check_element(m, e);
  if (m.n() + 1 > kMaxGroundSet) {
    fail(ErrorCode::kInvalidInput, "extension exceeds 16 elements");
  }
  if (has(loops(m), e)) {
    fail(ErrorCode::kLoopParallel, "element " + std::to_string(e + 1) + " is a loop");
  }
  std::vector<Mask> bases = m.bases();
  for (Mask b : m.bases()) {
    if (has(b, e)) bases.push_back((b & ~bit(e)) | bit(m.n()));
  }
  return Matroid::trusted(m.n() + 1, m.rank(), std::move(bases));
}

Matroid series_ext(const Matroid& m, int e) {
  check_element(m, e);
  if (has(coloops(m), e)) {
    fail(ErrorCode::kColoopSeries, "element " + std::to_string(e + 1) + " is a coloop");
  }
  return dual(parallel_ext(dual(m), e));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Mask> bases;
  bases.reserve(m.num_bases());
  for (Mask b : m.bases()) {
    Mask out = 0;
    for (int e : elements(b)) out |= bit(perm[e]);
    bases.push_back(out);
  }
  return Matroid::trusted(m.n(), m.rank(), std::move(bases));
}

Mask loops(const Matroid& m) {
  Mask any = 0;
  for (Mask b : m.bases()) any |= b;
  return m.ground() & ~any;
}

Mask coloops(const Matroid& m) {
  Mask all = m.ground();
  for (Mask b : m.bases()) all &= b;
  return all;
}

GroundPartition components(const Matroid& m) {
  const int n = m.n();
  UnionFind uf(n);
  BasisTable table(m);
  for (Mask b : m.bases()) {
    Mask out = m.ground() & ~b;
    for (int i : elements(b)) {
      for (int j : elements(out)) {
        if (table((b & ~bit(i)) | bit(j))) uf.unite(i, j);
      }
    }
  }
  std::map<int, Mask> blocks;
  for (int e = 0; e < n; ++e) blocks[uf.find(e)] |= bit(e);
  GroundPartition p;
  for (auto& [root, block] : blocks) {
    p.blocks.push_back(block);
    p.ranks.push_back(m.rank_of(block));
  }
  return p;
}

bool is_connected(const Matroid& m) { return components(m).blocks.size() <= 1; }

std::vector<Mask> parallel_classes(const Matroid& m) {
  if (loops(m) != 0) {
    fail(ErrorCode::kHasLoops, "matroid has loops " + mask_to_string(loops(m)));
  }
  UnionFind uf(m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = i + 1; j < m.n(); ++j) {
      if (m.rank_of(bit(i) | bit(j)) == 1) uf.unite(i, j);
    }
  }
  std::map<int, Mask> classes;
  for (int e = 0; e < m.n(); ++e) classes[uf.find(e)] |= bit(e);
  std::vector<Mask> out;
  for (auto& [root, cls] : classes) out.push_back(cls);
  return out;
}

Matroid simplify(const Matroid& m) {
  Mask keep = 0;
  for (Mask cls : parallel_classes(m)) keep |= cls & (~cls + 1);
  return restrict_to(m, keep);
}

Matroid cosimplify(const Matroid& m) {
  if (coloops(m) != 0) {
    fail(ErrorCode::kHasColoops, "matroid has coloops " + mask_to_string(coloops(m)));
  }
  return dual(simplify(dual(m)));
}

namespace {

struct IsoData {
  std::vector<std::vector<int>> pair;  // pair[a][b] = #bases containing a, b
  std::vector<std::vector<int>> signature;
};

IsoData iso_data(const Matroid& m) {
  const int n = m.n();
  IsoData d;
  d.pair.assign(n, std::vector<int>(n, 0));
  for (Mask b : m.bases()) {
    std::vector<int> el = elements(b);
    for (int x : el) {
      for (int y : el) ++d.pair[x][y];
    }
  }
  d.signature.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> row;
    for (int b = 0; b < n; ++b) {
      if (b != a) row.push_back(d.pair[a][b]);
    }
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), d.pair[a][a]);
    d.signature[a] = std::move(row);
  }
  return d;
}

}  // namespace

IsoResult is_isomorphic(const Matroid& a, const Matroid& b, int max_n) {
  IsoResult result;
  if (a.n() != b.n() || a.rank() != b.rank() || a.num_bases() != b.num_bases()) {
    return result;
  }
  const int n = a.n();
  if (a == b) {
    result.isomorphic = true;
    result.perm.resize(n);
    std::iota(result.perm.begin(), result.perm.end(), 0);
    return result;
  }
  IsoData da = iso_data(a);
  IsoData db = iso_data(b);
  {
    auto sa = da.signature;
    auto sb = db.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return result;
  }
  if (n > max_n) {
    fail(ErrorCode::kGroundSetTooLarge,
         "isomorphism search capped at n=" + std::to_string(max_n));
  }
  // Assign the elements of `a` with the rarest signatures first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<std::vector<int>, int> freq;
  for (const auto& s : da.signature) ++freq[s];
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return freq[da.signature[x]] < freq[da.signature[y]];
  });
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Mask> target = b.bases();
  auto verify = [&]() {
    std::vector<Mask> mapped;
    mapped.reserve(a.num_bases());
    for (Mask x : a.bases()) {
      Mask y = 0;
      for (int e : elements(x)) y |= bit(perm[e]);
      mapped.push_back(y);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target;
  };
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return verify();
    const int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (used[y] || db.signature[y] != da.signature[x]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        int w = order[k];
        ok = da.pair[x][w] == db.pair[y][perm[w]];
      }
      if (!ok) continue;
      perm[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      perm[x] = -1;
    }
    return false;
  };
  if (search(search, 0)) {
    result.isomorphic = true;
    result.perm = perm;
  }
  return result;
}

std::vector<Mask> two_separations(const Matroid& m) {
  if (!is_connected(m)) {
    fail(ErrorCode::kPreconditionViolated, "two_separations needs a connected matroid");
  }
  std::vector<Mask> out;
  const int n = m.n();
  if (n < 4) return out;
  const Mask rest = m.ground() & ~Mask{1};
  for (Mask sub = 0;; sub = (sub - rest) & rest) {
    Mask a = sub | 1u;
    Mask c = m.ground() & ~a;
    if (popcount(a) >= 2 && popcount(c) >= 2 &&
        m.rank_of(a) + m.rank_of(c) - m.rank() <= 1) {
      out.push_back(a);
    }
    if (sub == rest) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const Matroid& m) {
  std::ostringstream os;
  os << "matroid n=" << m.n() << " rank=" << m.rank() << " bases=" << m.num_bases();
  return os.str();
}

}  // namespace matinv
