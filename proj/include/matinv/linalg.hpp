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

#ifndef MATINV_LINALG_HPP_
#define MATINV_LINALG_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "matinv/rational.hpp"

namespace matinv {

using QMatrix = std::vector<std::vector<Rational>>;
using ZVector = std::vector<Integer>;
using SmallVector = std::vector<std::int64_t>;

// Rank over Q by Gaussian elimination.
int rank_q(QMatrix rows);

// Rank over GF(p); entries are reduced mod p first.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, int p);

// Rank of an integer matrix. Fraction-free elimination in 64 bits with a
// transparent fall back to GMP on overflow.
int rank_int(const std::vector<SmallVector>& rows);
int rank_int(const std::vector<ZVector>& rows);

// Determinant of a square integer matrix (fraction-free).
Integer det_int(const std::vector<SmallVector>& rows);
Integer det_int(const std::vector<ZVector>& rows);

// Basis of the right null space {x : A x = 0} over Q.
QMatrix nullspace_q(const QMatrix& a);

// Reduced row echelon form; returns the pivot columns.
std::vector<int> rref_q(QMatrix& a);

// Solves the square nonsingular system A x = b over Q. nullopt if singular.
std::optional<std::vector<Rational>> solve_q(QMatrix a, std::vector<Rational> b);

// Divides out the gcd of the entries; the zero vector is left untouched.
void make_primitive(ZVector& v);
void make_primitive(SmallVector& v);

}  // namespace matinv

#endif  // MATINV_LINALG_HPP_
