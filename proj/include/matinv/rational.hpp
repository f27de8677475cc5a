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

#ifndef MATINV_RATIONAL_HPP_
#define MATINV_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matinv {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" into a canonical rational. Throws kParse.
Rational parse_rational(std::string_view text);

// "a/b" in lowest terms, or "a" when the value is integral.
std::string format_rational(const Rational& value);

// Least common multiple of the denominators of a range of rationals.
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer lcm = 1;
  for (const Rational& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return lcm;
}

}  // namespace matinv

#endif  // MATINV_RATIONAL_HPP_
