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

#ifndef MATINV_LAURENT_HPP_
#define MATINV_LAURENT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matinv/rational.hpp"

namespace matinv {

using Exponent = std::vector<int>;

// Laurent polynomial in x_1..x_n with rational coefficients. No zero
// coefficients are stored; terms iterate in lexicographic exponent order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int n) : n_(n) {}
  static LaurentPoly constant(int n, const Rational& c);
  static LaurentPoly monomial(const Exponent& a, const Rational& c = 1);
  // 1 - x^b
  static LaurentPoly one_minus(const Exponent& b);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& a, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(const Exponent& a) const;  // times x^a
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Exact quotient by 1 - x^b, nullopt if it is not a Laurent polynomial.
  std::optional<LaurentPoly> divide_one_minus(const Exponent& b) const;

  // Substitutes x_i := x_j.
  LaurentPoly substitute(int i, int j) const;

  // Every exponent sums to zero.
  bool is_degree_zero() const;

  // "1 - x1^-1*x2^-1*x3*x4" style.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Sign of the first nonzero coordinate.
int lex_sign(const Exponent& b);

// numerator / prod over denominators of (1 - x^b).
struct RationalFn {
  LaurentPoly numerator;
  std::vector<Exponent> denominators;

  // Cancels denominator factors that divide the numerator exactly.
  void cancel();
  // Rewrites every factor as 1 - x^b with b lexicographically positive.
  void orient();
  bool is_laurent() const { return denominators.empty(); }
};

}  // namespace matinv

#endif  // MATINV_LAURENT_HPP_
