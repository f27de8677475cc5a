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

#include "matinv/laurent.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "matinv/error.hpp"

namespace matinv {

namespace {

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Exponent negate(const Exponent& a) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

}  // namespace

int lex_sign(const Exponent& b) {
  for (int x : b) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

LaurentPoly LaurentPoly::constant(int n, const Rational& c) {
  LaurentPoly p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& a, const Rational& c) {
  LaurentPoly p(static_cast<int>(a.size()));
  p.add_term(a, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Exponent& b) {
  LaurentPoly p = constant(static_cast<int>(b.size()), 1);
  p.add_term(b, -1);
  return p;
}

void LaurentPoly::add_term(const Exponent& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(std::max(n_, o.n_));
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, e] : o.terms_) r.add_term(add(a, b), c * e);
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(n_);
  if (c == 0) return r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(a, x * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly r(n_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(add(a, s), c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus(const Exponent& b) const {
  if (lex_sign(b) == 0) fail(ErrorCode::kInternal, "division by 1 - x^0");
  // Order monomials by (a.b, lex a). It is translation invariant and x^b > 1,
  // so the top term of q (1 - x^b) is -top(q) x^b. The levels a.b are
  // integers, which bounds the loop.
  auto level = [&](const Exponent& a) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
  };
  LaurentPoly q(n_);
  if (terms_.empty()) return q;
  long floor = level(terms_.begin()->first);
  for (const auto& [a, c] : terms_) floor = std::min(floor, level(a));
  LaurentPoly r = *this;
  while (!r.terms_.empty()) {
    auto top = r.terms_.begin();
    long top_level = level(top->first);
    for (auto it = std::next(r.terms_.begin()); it != r.terms_.end(); ++it) {
      long l = level(it->first);
      if (l >= top_level) {
        top = it;
        top_level = l;
      }
    }
    if (top_level < floor) return std::nullopt;
    const Exponent a = top->first;
    const Rational c = top->second;
    Exponent low = add(a, negate(b));
    q.add_term(low, -c);
    r.add_term(a, -c);
    r.add_term(low, c);
  }
  return q;
}

LaurentPoly LaurentPoly::substitute(int i, int j) const {
  LaurentPoly r(n_);
  for (const auto& [a, c] : terms_) {
    Exponent e = a;
    e[j] += e[i];
    e[i] = 0;
    r.add_term(e, c);
  }
  return r;
}

bool LaurentPoly::is_degree_zero() const {
  for (const auto& [a, c] : terms_) {
    int s = 0;
    for (int x : a) s += x;
    if (s != 0) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree last reads naturally for the small classes here.
  for (const auto& [a, c] : terms_) {
    Rational mag = abs(c);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (any) mono << "*";
      mono << "x" << (i + 1);
      if (a[i] != 1) mono << "^" << a[i];
      any = true;
    }
    if (!any) {
      os << format_rational(mag);
    } else {
      if (mag != 1) os << format_rational(mag) << "*";
      os << mono.str();
    }
    first = false;
  }
  return os.str();
}

void RationalFn::cancel() {
  for (std::size_t k = 0; k < denominators.size();) {
    if (auto q = numerator.divide_one_minus(denominators[k])) {
      numerator = *q;
      denominators.erase(denominators.begin() + k);
    } else {
      ++k;
    }
  }
}

void RationalFn::orient() {
  for (auto& b : denominators) {
    if (lex_sign(b) < 0) {
      // 1/(1 - x^b) = -x^-b / (1 - x^-b)
      b = negate(b);
      numerator = numerator.shifted(b).scaled(-1);
    }
  }
}

}  // namespace matinv
