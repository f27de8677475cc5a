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

#ifndef MATINV_MATROID_HPP_
#define MATINV_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matinv/bitset.hpp"
#include "matinv/linalg.hpp"

namespace matinv {

inline constexpr int kMaxGroundSet = 16;

// A matroid on {0..n-1} given by its bases. Immutable once built; the basis
// list is sorted and free of duplicates, so operator== is set equality.
class Matroid {
 public:
  // Validates sizes and the exchange axiom. Throws kEmptyBases,
  // kInvalidInput or kExchangeAxiomViolation.
  static Matroid from_bases(int n, int rank, std::vector<Mask> bases);

  // Skips the exchange axiom scan; callers guarantee validity (the result of
  // an operation already known to preserve matroids).
  static Matroid trusted(int n, int rank, std::vector<Mask> bases);

  int n() const { return n_; }
  int rank() const { return rank_; }
  Mask ground() const { return full_mask(n_); }
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }

  bool is_basis(Mask b) const;
  // r(S) = max |B ∩ S| over bases B.
  int rank_of(Mask s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int rank, std::vector<Mask> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;
};

// First (B1, B2, i) with no j in B2 \ B1 making B1 - i + j a basis.
struct ExchangeViolation {
  Mask b1 = 0;
  Mask b2 = 0;
  int i = 0;
};
std::optional<ExchangeViolation> find_exchange_violation(
    int n, const std::vector<Mask>& sorted_bases);

// Dense membership table over all 2^n subsets.
class BasisTable {
 public:
  explicit BasisTable(const Matroid& m);
  BasisTable(int n, const std::vector<Mask>& bases);
  bool operator()(Mask s) const { return table_[s] != 0; }

 private:
  std::vector<std::uint8_t> table_;
};

// Constructors. Element labels are 0-indexed.
Matroid from_matrix(const QMatrix& columns_by_row);
Matroid from_matrix_mod_p(const std::vector<std::vector<std::int64_t>>& rows, int p);
// Vertices are arbitrary integers; edge k becomes element k.
Matroid from_graph(const std::vector<std::pair<int, int>>& edges);
Matroid uniform(int rank, int n);
QMatrix wheel_matrix(int d);
Matroid wheel(int d);
Matroid whirl(int d);

// Operations. Minors relabel by order-preserving collapse of the ground set.
Matroid dual(const Matroid& m);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid restrict_to(const Matroid& m, Mask s);
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Ground set (E1 \ e1) followed by (E2 \ e2).
Matroid two_sum(const Matroid& a, int e1, const Matroid& b, int e2);
// The new element gets label n.
Matroid parallel_ext(const Matroid& m, int e);
Matroid series_ext(const Matroid& m, int e);
// perm[i] is the new label of element i.
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

Mask loops(const Matroid& m);
Mask coloops(const Matroid& m);

struct GroundPartition {
  std::vector<Mask> blocks;  // sorted by smallest element
  std::vector<int> ranks;
};
GroundPartition components(const Matroid& m);
bool is_connected(const Matroid& m);

// Parallel classes of a loopless matroid, each sorted, ordered by minimum.
std::vector<Mask> parallel_classes(const Matroid& m);
Matroid simplify(const Matroid& m);
Matroid cosimplify(const Matroid& m);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> perm;  // perm[i] = image in the second matroid
};
IsoResult is_isomorphic(const Matroid& a, const Matroid& b, int max_n = 10);

// All A containing element 0 with |A|, |E \ A| >= 2 and
// r(A) + r(E \ A) - r(E) <= 1. Requires a connected matroid.
std::vector<Mask> two_separations(const Matroid& m);

std::string describe(const Matroid& m);

}  // namespace matinv

#endif  // MATINV_MATROID_HPP_
