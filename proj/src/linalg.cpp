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

#include "matinv/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace matinv {

namespace {

struct Overflow {};

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// Fraction-free elimination. Returns the rank; `det` receives the
// determinant when the matrix is square.
template <typename T, typename Step>
int bareiss(std::vector<std::vector<T>> m, T* det, Step step) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) {
    if (det) *det = 1;
    return 0;
  }
  const int cols = static_cast<int>(m[0].size());
  T prev = 1;
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = step(m[r][c], m[i][j], m[i][c], m[r][j], prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (det) {
    if (rows != cols || r < rows) {
      *det = 0;
    } else {
      *det = sign < 0 ? T(-prev) : prev;
    }
  }
  return r;
}

std::int64_t step64(std::int64_t p, std::int64_t a, std::int64_t b,
                    std::int64_t q, std::int64_t prev) {
  __int128 v = static_cast<__int128>(p) * a - static_cast<__int128>(b) * q;
  return checked(v / prev);
}

Integer stepz(const Integer& p, const Integer& a, const Integer& b,
              const Integer& q, const Integer& prev) {
  Integer v = p * a - b * q;
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
  return v;
}

std::vector<ZVector> widen(const std::vector<SmallVector>& rows) {
  std::vector<ZVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    ZVector z;
    z.reserve(r.size());
    for (auto v : r) z.emplace_back(static_cast<long>(v));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

int rank_q(QMatrix rows) { return static_cast<int>(rref_q(rows).size()); }

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, int p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    for (int e = p - 2; e > 0; --e) result = result * a % p;
    return result;
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[r]);
    std::int64_t inv = inverse(m[r][c]);
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::int64_t f = m[i][c];
      for (int j = c; j < cols; ++j) {
        m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
      }
    }
    ++r;
  }
  return r;
}

int rank_int(const std::vector<SmallVector>& rows) {
  try {
    return bareiss<std::int64_t>(rows, nullptr, step64);
  } catch (const Overflow&) {
    return rank_int(widen(rows));
  }
}

int rank_int(const std::vector<ZVector>& rows) {
  return bareiss<Integer>(rows, nullptr, stepz);
}

Integer det_int(const std::vector<SmallVector>& rows) {
  try {
    std::int64_t det = 0;
    bareiss<std::int64_t>(rows, &det, step64);
    return Integer(static_cast<long>(det));
  } catch (const Overflow&) {
    return det_int(widen(rows));
  }
}

Integer det_int(const std::vector<ZVector>& rows) {
  Integer det;
  bareiss<Integer>(rows, &det, stepz);
  return det;
}

std::vector<int> rref_q(QMatrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return pivots;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

QMatrix nullspace_q(const QMatrix& a) {
  QMatrix m = a;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots = rref_q(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_q(QMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref_q(a);
  if (pivots.size() != n || (n > 0 && pivots.back() != static_cast<int>(n) - 1)) {
    return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

void make_primitive(ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(SmallVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g <= 1) return;
  for (auto& x : v) x /= g;
}

}  // namespace matinv
