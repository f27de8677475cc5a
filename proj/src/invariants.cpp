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

#include "matinv/invariants.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "matinv/error.hpp"

namespace matinv {

GPolynomial::GPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

GPolynomial GPolynomial::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return GPolynomial(std::move(v));
}

GPolynomial GPolynomial::one_plus_t_pow(int k) {
  std::vector<Integer> v(k + 1);
  for (int i = 0; i <= k; ++i) mpz_bin_uiui(v[i].get_mpz_t(), k, i);
  return GPolynomial(std::move(v));
}

void GPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer GPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Integer GPolynomial::eval(const Integer& t) const {
  Integer v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

int GPolynomial::lowest_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

GPolynomial GPolynomial::divide_by_t() const {
  if (coeff(0) != 0) {
    fail(ErrorCode::kInternal, "division by t with nonzero constant term in " + to_string());
  }
  if (c_.empty()) return {};
  return GPolynomial(std::vector<Integer>(c_.begin() + 1, c_.end()));
}

GPolynomial GPolynomial::operator+(const GPolynomial& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return GPolynomial(std::move(v));
}

GPolynomial GPolynomial::operator-(const GPolynomial& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return GPolynomial(std::move(v));
}

GPolynomial GPolynomial::operator*(const GPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Integer> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return GPolynomial(std::move(v));
}

std::string GPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer a = abs(c_[i]);
    if (c_[i] < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

using ExactKey = std::pair<std::pair<int, int>, std::vector<Mask>>;

ExactKey exact_key(const Matroid& m) { return {{m.n(), m.rank()}, m.bases()}; }

bool has_loop_or_coloop(const Matroid& m) { return (loops(m) | coloops(m)) != 0; }

TuttePolynomial tutte_rec(const Matroid& m, std::map<ExactKey, TuttePolynomial>& memo) {
  if (m.n() == 0) return {{{0, 0}, 1}};
  ExactKey key = exact_key(m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int e = m.n() - 1;
  TuttePolynomial out;
  if (has(loops(m), e)) {
    for (const auto& [ij, c] : tutte_rec(restrict_to(m, m.ground() & ~bit(e)), memo)) {
      out[{ij.first, ij.second + 1}] += c;
    }
  } else if (has(coloops(m), e)) {
    for (const auto& [ij, c] : tutte_rec(contract_element(m, e), memo)) {
      out[{ij.first + 1, ij.second}] += c;
    }
  } else {
    out = tutte_rec(delete_element(m, e), memo);
    for (const auto& [ij, c] : tutte_rec(contract_element(m, e), memo)) out[ij] += c;
  }
  memo.emplace(std::move(key), out);
  return out;
}

Integer beta_rec(const Matroid& m, std::map<ExactKey, Integer>& memo) {
  if (has_loop_or_coloop(m)) return 0;
  if (m.n() == 2) return 1;
  ExactKey key = exact_key(m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int e = m.n() - 1;
  Integer b = beta_rec(contract_element(m, e), memo) + beta_rec(delete_element(m, e), memo);
  memo.emplace(std::move(key), b);
  return b;
}

Integer binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Greedy reduction to U(1,2) by removing parallel and series elements.
bool reduces_to_u12(Matroid m) {
  while (m.n() > 2) {
    bool reduced = false;
    for (Mask cls : parallel_classes(m)) {
      if (popcount(cls) >= 2) {
        m = delete_element(m, 31 - std::countl_zero(cls));
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    for (Mask cls : parallel_classes(dual(m))) {
      if (popcount(cls) >= 2) {
        m = contract_element(m, 31 - std::countl_zero(cls));
        reduced = true;
        break;
      }
    }
    if (!reduced) return false;
    if (has_loop_or_coloop(m)) return false;
  }
  return m.n() == 2 && !has_loop_or_coloop(m);
}

}  // namespace

TuttePolynomial tutte(const Matroid& m) {
  std::map<ExactKey, TuttePolynomial> memo;
  TuttePolynomial t = tutte_rec(m, memo);
  for (auto it = t.begin(); it != t.end();) {
    it = it->second == 0 ? t.erase(it) : std::next(it);
  }
  return t;
}

Integer tutte_eval(const TuttePolynomial& t, const Integer& x, const Integer& y) {
  Integer total = 0;
  for (const auto& [ij, c] : t) {
    Integer term = c;
    for (int i = 0; i < ij.first; ++i) term *= x;
    for (int j = 0; j < ij.second; ++j) term *= y;
    total += term;
  }
  return total;
}

Integer beta(const Matroid& m) {
  if (m.n() < 2) {
    fail(ErrorCode::kGroundSetTooSmall, "beta needs at least two elements");
  }
  std::map<ExactKey, Integer> memo;
  return beta_rec(m, memo);
}

bool is_series_parallel(const Matroid& m) {
  if (m.n() < 2 || has_loop_or_coloop(m)) return false;
  const bool by_beta = is_connected(m) && beta(m) == 1;
  const bool by_reduction = is_connected(m) && reduces_to_u12(m);
  if (by_beta != by_reduction) {
    fail(ErrorCode::kInternal,
         "series-parallel tests disagree on " + describe(m) + " (beta says " +
             (by_beta ? "yes" : "no") + ")");
  }
  return by_beta;
}

GPolynomial g_uniform(int d, int n) {
  if (d < 1 || d > n - 1) {
    fail(ErrorCode::kPreconditionViolated, "g_uniform needs 1 <= d <= n-1");
  }
  std::vector<Integer> c(std::min(d, n - d) + 1, 0);
  for (int i = 1; i <= std::min(d, n - d); ++i) {
    c[i] = binom(n - i - 1, d - i) * binom(n - d - 1, i - 1);
  }
  return GPolynomial(std::move(c));
}

GPolynomial g_whirl(int d) {
  if (d < 2) fail(ErrorCode::kPreconditionViolated, "whirl needs d >= 2");
  return GPolynomial::one_plus_t_pow(d) - GPolynomial::monomial(0);
}

GPolynomial g_wheel(int d) {
  if (d < 2) fail(ErrorCode::kPreconditionViolated, "wheel needs d >= 2");
  return g_whirl(d) - GPolynomial::monomial(1) - GPolynomial::monomial(2);
}

std::vector<Mask> rank2_flats(const Matroid& m) {
  std::vector<Mask> flats;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = i + 1; j < m.n(); ++j) {
      Mask line = bit(i) | bit(j);
      if (m.rank_of(line) != 2) continue;
      for (int k = 0; k < m.n(); ++k) {
        if (!has(line, k) && m.rank_of(bit(i) | bit(j) | bit(k)) == 2) line |= bit(k);
      }
      flats.push_back(line);
    }
  }
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return flats;
}

GPolynomial g_rank3(const Matroid& m) {
  if (m.rank() != 3) fail(ErrorCode::kPreconditionViolated, "g_rank3 needs rank 3");
  if (loops(m) != 0) fail(ErrorCode::kPreconditionViolated, "g_rank3 needs a loopless matroid");
  for (Mask cls : parallel_classes(m)) {
    if (popcount(cls) > 1) {
      fail(ErrorCode::kPreconditionViolated,
           "g_rank3 needs a simple matroid; parallel class " + mask_to_string(cls));
    }
  }
  if (!is_connected(m)) fail(ErrorCode::kPreconditionViolated, "g_rank3 needs a connected matroid");
  const int n = m.n();
  std::vector<Mask> flats = rank2_flats(m);
  Integer pairs = 0, c1 = binom(n - 2, 2), c2 = (n - 3) * (n - 4), c3 = binom(n - 4, 2);
  for (Mask f : flats) {
    const int k = popcount(f);
    pairs += binom(k, 2);
    c1 -= binom(k - 1, 2);
    c2 -= (k - 2) * (k - 2);
    c3 -= binom(k - 2, 2);
  }
  if (pairs != binom(n, 2)) {
    fail(ErrorCode::kFlatCountMismatch,
         "rank-2 flats cover " + pairs.get_str() + " pairs, expected " + binom(n, 2).get_str());
  }
  return GPolynomial({0, c1, c2, c3});
}

namespace {

constexpr int kMaxFallbackDepth = 2;
constexpr int kIsoCap = 12;

bool isomorphic(const Matroid& a, const Matroid& b) {
  try {
    return is_isomorphic(a, b, kIsoCap).isomorphic;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kGroundSetTooLarge) return a == b;
    throw;
  }
}

std::vector<long> signature(const Matroid& m) {
  std::vector<std::vector<int>> pair(m.n(), std::vector<int>(m.n(), 0));
  for (Mask b : m.bases()) {
    std::vector<int> el = elements(b);
    for (int x : el) {
      for (int y : el) ++pair[x][y];
    }
  }
  std::vector<std::vector<int>> rows;
  for (int a = 0; a < m.n(); ++a) {
    std::vector<int> row;
    for (int b = 0; b < m.n(); ++b) {
      if (b != a) row.push_back(pair[a][b]);
    }
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), pair[a][a]);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<long> key = {m.n(), m.rank(), static_cast<long>(m.num_bases())};
  for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

// Splits a connected matroid along the 2-separation (A, E \ A) into the two
// factors of a 2-sum, with the basepoint as the last element of each.
std::pair<Matroid, Matroid> two_sum_factors(const Matroid& m, Mask a) {
  const Mask b = m.ground() & ~a;
  auto factor = [&](Mask x) {
    const int rx = m.rank_of(x);
    const int p = popcount(x);
    std::vector<Mask> bases;
    for (Mask basis : m.bases()) {
      const int k = popcount(basis & x);
      if (k == rx) {
        bases.push_back(compress(basis & x, x));
      } else if (k == rx - 1) {
        bases.push_back(compress(basis & x, x) | bit(p));
      }
    }
    return Matroid::from_bases(p + 1, rx, std::move(bases));
  };
  Matroid m1 = factor(a);
  Matroid m2 = factor(b);
  std::vector<int> perm(m.n());
  int next = 0;
  for (int e : elements(a)) perm[e] = next++;
  for (int e : elements(b)) perm[e] = next++;
  if (!(two_sum(m1, m1.n() - 1, m2, m2.n() - 1) == relabel(m, perm))) {
    fail(ErrorCode::kInternal, "2-sum factorization does not reassemble " + describe(m));
  }
  return {m1, m2};
}

class GEngine {
 public:
  GResult compute(const Matroid& m, std::vector<Matroid>& stack, int depth) {
    if (loops(m) != 0 || coloops(m) != 0) {
      fail(ErrorCode::kCoordinateSubgrassmannian,
           "g needs a matroid without loops and coloops; loops " + mask_to_string(loops(m)) +
               ", coloops " + mask_to_string(coloops(m)));
    }
    if (auto hit = lookup(m)) return *hit;
    GResult r = derive(m, stack, depth);
    store(m, r);
    return r;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.clear();
  }

  // Individual derivations, nullopt when not applicable.
  std::optional<GResult> by_reduction(const Matroid& m, std::vector<Matroid>& stack, int depth) {
    for (Mask cls : parallel_classes(m)) {
      if (popcount(cls) < 2) continue;
      Matroid smaller = delete_element(m, 31 - std::countl_zero(cls));
      if (has_loop_or_coloop(smaller)) continue;
      return GResult{compute(smaller, stack, depth).g,
                     "parallel element removed from class " + mask_to_string(cls)};
    }
    for (Mask cls : parallel_classes(dual(m))) {
      if (popcount(cls) < 2) continue;
      Matroid smaller = contract_element(m, 31 - std::countl_zero(cls));
      if (has_loop_or_coloop(smaller)) continue;
      return GResult{compute(smaller, stack, depth).g,
                     "series element contracted from class " + mask_to_string(cls)};
    }
    return std::nullopt;
  }

  std::optional<GResult> by_components(const Matroid& m, std::vector<Matroid>& stack,
                                       int depth) {
    GroundPartition p = components(m);
    if (p.blocks.size() < 2) return std::nullopt;
    GPolynomial g = GPolynomial::monomial(0);
    for (Mask block : p.blocks) g = g * compute(restrict_to(m, block), stack, depth).g;
    return GResult{g, "product over " + std::to_string(p.blocks.size()) + " components"};
  }

  std::optional<GResult> by_two_sum(const Matroid& m, std::vector<Matroid>& stack, int depth) {
    if (!is_connected(m)) return std::nullopt;
    std::vector<Mask> seps = two_separations(m);
    if (seps.empty()) return std::nullopt;
    auto [m1, m2] = two_sum_factors(m, seps.front());
    GPolynomial g = (compute(m1, stack, depth).g * compute(m2, stack, depth).g).divide_by_t();
    return GResult{g, "2-sum along " + mask_to_string(seps.front())};
  }

  std::optional<GResult> by_closed_form(const Matroid& m, std::vector<Matroid>& stack,
                                        int depth) {
    const int n = m.n(), d = m.rank();
    if (n == 2) return GResult{GPolynomial::monomial(1), "series-parallel"};
    if (m.num_bases() == binom(n, d)) {
      return GResult{g_uniform(d, n), "uniform U(" + std::to_string(d) + "," +
                                          std::to_string(n) + ")"};
    }
    if (!is_connected(m)) return std::nullopt;
    if (d == 2) {
      Matroid s = simplify(m);
      if (s.num_bases() == binom(s.n(), 2)) {
        return GResult{g_uniform(2, s.n()), "rank 2, simplifies to U(2," +
                                                std::to_string(s.n()) + ")"};
      }
    }
    if (d == 3 && simple(m)) return GResult{g_rank3(m), "rank-3 flats formula"};
    if (n - d <= 3 && n - d < d) {
      GResult dual_r = compute(dual(m), stack, depth);
      return GResult{dual_r.g, "duality, then " + dual_r.derivation};
    }
    if (n == 2 * d && d >= 3 && n <= kMaxGroundSet) {
      if (m.num_bases() == wheel(d).num_bases() && isomorphic(m, wheel(d))) {
        return GResult{g_wheel(d), "wheel(" + std::to_string(d) + ")"};
      }
      if (m.num_bases() == whirl(d).num_bases() && isomorphic(m, whirl(d))) {
        return GResult{g_whirl(d), "whirl(" + std::to_string(d) + ")"};
      }
    }
    return std::nullopt;
  }

  std::optional<GResult> by_subdivision(const Matroid& m, std::vector<Matroid>& stack,
                                        int depth) {
    const int n = m.n(), d = m.rank();
    if (depth >= kMaxFallbackDepth || !is_connected(m)) return std::nullopt;
    for (const auto& s : stack) {
      if (isomorphic(s, m)) return std::nullopt;
    }
    Lift lift = indicator_lift(m);
    if (!is_tropical_pluecker(lift).ok) return std::nullopt;
    SubdivisionOptions options;
    options.verify_volume = binom(n, d) <= 126;
    Subdivision sub = regular_subdivision(lift, options);
    if (!is_matroidal(sub).ok) return std::nullopt;
    stack.push_back(m);
    GPolynomial rest;
    int whole = 0;
    try {
      for (const auto& face : sub.interior_faces) {
        if (face.vertices == m.bases()) {
          ++whole;
          continue;
        }
        rest = rest + compute(*face.matroid, stack, depth + 1).g;
      }
    } catch (...) {
      stack.pop_back();
      throw;
    }
    stack.pop_back();
    if (whole != 1) return std::nullopt;
    GPolynomial g = g_uniform(d, n) - rest;
    for (const auto& c : g.coefficients()) {
      if (c < 0) return std::nullopt;
    }
    if (g.coeff(0) != 0) return std::nullopt;
    return GResult{g, "indicator-lift subdivision of Delta(" + std::to_string(d) + "," +
                          std::to_string(n) + ")"};
  }

 private:
  static bool simple(const Matroid& m) {
    for (Mask cls : parallel_classes(m)) {
      if (popcount(cls) > 1) return false;
    }
    return true;
  }

  GResult derive(const Matroid& m, std::vector<Matroid>& stack, int depth) {
    if (m.n() == 2) return {GPolynomial::monomial(1), "series-parallel"};
    if (auto r = by_reduction(m, stack, depth)) return *r;
    if (auto r = by_components(m, stack, depth)) return *r;
    if (auto r = by_two_sum(m, stack, depth)) return *r;
    if (auto r = by_closed_form(m, stack, depth)) return *r;
    try {
      if (auto r = by_subdivision(m, stack, depth)) return *r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotComputable) throw;
    }
    fail(ErrorCode::kNotComputable, "no derivation applies to " + describe(m));
  }

  std::optional<GResult> lookup(const Matroid& m) {
    std::vector<long> key = signature(m);
    std::vector<std::pair<Matroid, GResult>> bucket;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it == memo_.end()) return std::nullopt;
      bucket = it->second;
    }
    for (const auto& [other, r] : bucket) {
      if (isomorphic(m, other)) return r;
    }
    return std::nullopt;
  }

  void store(const Matroid& m, const GResult& r) {
    std::vector<long> key = signature(m);
    std::lock_guard<std::mutex> lock(mu_);
    memo_[key].emplace_back(m, r);
  }

  std::mutex mu_;
  std::map<std::vector<long>, std::vector<std::pair<Matroid, GResult>>> memo_;
};

GEngine& engine() {
  static GEngine e;
  return e;
}

}  // namespace

GResult g_invariant(const Matroid& m) {
  std::vector<Matroid> stack;
  GResult r = engine().compute(m, stack, 0);
  std::vector<SanityCheck> checks = g_sanity(m, r.g);
  for (const auto& c : checks) {
    if (!c.passed) {
      fail(ErrorCode::kInternal, "g = " + r.g.to_string() + " fails " + c.name + ": " + c.detail);
    }
  }
  return r;
}

std::vector<GResult> g_derivations(const Matroid& m) {
  std::vector<GResult> out;
  if (has_loop_or_coloop(m)) return out;
  GEngine& e = engine();
  auto attempt = [&](auto&& f) {
    try {
      std::vector<Matroid> stack;
      if (std::optional<GResult> r = f(stack)) out.push_back(*r);
    } catch (const Error&) {
    }
  };
  attempt([&](auto& s) -> std::optional<GResult> {
    GResult r = e.compute(m, s, 0);
    r.derivation = "pipeline: " + r.derivation;
    return r;
  });
  attempt([&](auto&) -> std::optional<GResult> {
    if (!is_series_parallel(m)) return std::nullopt;
    return GResult{GPolynomial::monomial(1), "series-parallel"};
  });
  attempt([&](auto& s) { return e.by_reduction(m, s, 0); });
  attempt([&](auto& s) { return e.by_components(m, s, 0); });
  attempt([&](auto& s) { return e.by_two_sum(m, s, 0); });
  attempt([&](auto& s) { return e.by_closed_form(m, s, 0); });
  attempt([&](auto& s) -> std::optional<GResult> {
    if (m.rank() != 3 || !is_connected(m)) return std::nullopt;
    return GResult{g_rank3(m), "rank-3 flats formula"};
  });
  attempt([&](auto& s) -> std::optional<GResult> {
    if (m.n() - m.rank() != 3 || !is_connected(m)) return std::nullopt;
    return GResult{g_rank3(dual(m)), "rank-3 flats formula on the dual"};
  });
  attempt([&](auto& s) -> std::optional<GResult> {
    if (m.n() > 9) return std::nullopt;
    return e.by_subdivision(m, s, 0);
  });
  return out;
}

void g_clear_cache() { engine().clear(); }

std::vector<SolvedG> g_from_subdivision(
    const Subdivision& s,
    const std::function<std::optional<GPolynomial>(const Matroid&)>& lookup) {
  MatroidalResult mr = is_matroidal(s);
  if (!mr.ok) fail(ErrorCode::kNotMatroidal, "subdivision is not matroidal");
  Matroid whole = s.support ? *s.support : uniform(s.d, s.n);
  std::vector<SolvedG> solved;
  // Trivial subdivision: the identity g_M = g_M.
  if (s.interior_faces.size() == 1 && s.interior_faces[0].vertices == whole.bases()) {
    auto g = lookup(whole);
    if (!g) fail(ErrorCode::kTooManyUnknowns, "trivial subdivision of an unknown matroid");
    solved.push_back({whole, *g, -1});
    return solved;
  }
  std::optional<GPolynomial> g_whole = lookup(whole);
  int unknown = g_whole ? -2 : -1;
  int unknown_count = g_whole ? 0 : 1;
  GPolynomial known_sum;
  for (std::size_t i = 0; i < s.interior_faces.size(); ++i) {
    const Matroid& f = *s.interior_faces[i].matroid;
    if (auto g = lookup(f)) {
      known_sum = known_sum + *g;
    } else {
      unknown = static_cast<int>(i);
      ++unknown_count;
    }
  }
  if (unknown_count > 1) {
    fail(ErrorCode::kTooManyUnknowns,
         std::to_string(unknown_count) + " unknown g values in one linear relation");
  }
  GPolynomial value;
  const Matroid* target = nullptr;
  if (unknown_count == 0) {
    if (!(known_sum == *g_whole)) {
      fail(ErrorCode::kInconsistentSum, "faces sum to " + known_sum.to_string() +
                                            " but the whole polytope has " +
                                            g_whole->to_string());
    }
    return solved;
  }
  if (unknown == -1) {
    value = known_sum;
    target = &whole;
  } else {
    value = *g_whole - known_sum;
    target = &*s.interior_faces[unknown].matroid;
  }
  for (const auto& c : value.coefficients()) {
    if (c < 0) {
      fail(ErrorCode::kInconsistentSum, "solved value " + value.to_string() +
                                            " has a negative coefficient");
    }
  }
  if (value.coeff(0) != 0 || value.is_zero()) {
    fail(ErrorCode::kInconsistentSum, "solved value " + value.to_string() +
                                          " has a nonzero constant term or vanishes");
  }
  solved.push_back({*target, value, unknown});
  return solved;
}

SolvedG solve_g_with_engine(const Subdivision& s, int unknown) {
  if (!is_matroidal(s).ok) fail(ErrorCode::kNotMatroidal, "subdivision is not matroidal");
  if (unknown < -1 || unknown >= static_cast<int>(s.interior_faces.size())) {
    fail(ErrorCode::kInvalidInput, "no interior face with index " + std::to_string(unknown));
  }
  const Matroid whole = s.support ? *s.support : uniform(s.d, s.n);
  const Matroid target = unknown < 0 ? whole : *s.interior_faces[unknown].matroid;
  auto lookup = [&](const Matroid& m) -> std::optional<GPolynomial> {
    if (m == target) return std::nullopt;
    return g_invariant(m).g;
  };
  std::vector<SolvedG> solved = g_from_subdivision(s, lookup);
  if (solved.size() != 1) fail(ErrorCode::kInternal, "expected exactly one solved value");
  return solved.front();
}

int largest_interior_face(const Subdivision& s) {
  int best = -1;
  for (std::size_t i = 0; i < s.interior_faces.size(); ++i) {
    if (best < 0 || s.interior_faces[i].vertices.size() > s.interior_faces[best].vertices.size()) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<SanityCheck> g_sanity(const Matroid& m, const GPolynomial& g) {
  std::vector<SanityCheck> out;
  const int c = static_cast<int>(components(m).blocks.size());
  {
    Integer v = g.eval(-1);
    Integer want = c % 2 == 0 ? 1 : -1;
    out.push_back({"value_at_minus_one", v == want,
                   "g(-1) = " + v.get_str() + ", (-1)^c = " + want.get_str()});
  }
  if (m.n() >= 2) {
    Integer b = beta(m);
    out.push_back({"linear_coefficient_is_beta", g.coeff(1) == b,
                   "[t]g = " + g.coeff(1).get_str() + ", beta = " + b.get_str()});
  } else {
    out.push_back({"linear_coefficient_is_beta", false, "beta undefined for n < 2"});
  }
  {
    const int bound = std::min(m.rank(), m.n() - m.rank());
    out.push_back({"degree_bound", g.degree() <= bound,
                   "deg g = " + std::to_string(g.degree()) + ", bound " + std::to_string(bound)});
  }
  {
    bool ok = true;
    for (const auto& x : g.coefficients()) ok = ok && x >= 0;
    out.push_back({"nonnegative", ok, g.to_string()});
  }
  {
    const int low = g.lowest_degree();
    out.push_back({"lowest_term_t_c", low == c && g.coeff(c) > 0,
                   "lowest degree " + std::to_string(low) + ", c = " + std::to_string(c)});
  }
  return out;
}

bool all_passed(const std::vector<SanityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace matinv
