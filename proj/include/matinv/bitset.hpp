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

#ifndef MATINV_BITSET_HPP_
#define MATINV_BITSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matinv {

// A subset of a ground set of at most 16 elements; bit i is element i
// (0-indexed internally, printed 1-indexed).
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : bit(n) - 1; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }

// Elements of m in increasing order.
inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask from_elements(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

// Packs the bits of x that lie in `keep` into the low positions,
// preserving their order.
inline Mask compress(Mask x, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (; keep; keep &= keep - 1) {
    int e = std::countr_zero(keep);
    if (has(x, e)) out |= bit(pos);
    ++pos;
  }
  return out;
}

// Inverse of compress: spreads the low bits of x onto the positions of
// `keep`.
inline Mask expand(Mask x, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (; keep; keep &= keep - 1) {
    int e = std::countr_zero(keep);
    if (has(x, pos)) out |= bit(e);
    ++pos;
  }
  return out;
}

// "{1,3,4}" style, 1-indexed.
inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e + 1);
    first = false;
  }
  return s + "}";
}

// Calls f(mask) for every k-subset of the n-element ground set, in
// increasing numeric order of the mask.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask m = bit(k) - 1;
  const Mask limit = full_mask(n);
  while (m <= limit) {
    f(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    if (r == 0 || r > limit) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace matinv

#endif  // MATINV_BITSET_HPP_
