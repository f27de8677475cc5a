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

#ifndef MATINV_CORPUS_HPP_
#define MATINV_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matinv/invariants.hpp"
#include "matinv/json_io.hpp"
#include "matinv/matroid.hpp"
#include "matinv/polytope.hpp"

namespace matinv {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
  std::optional<GPolynomial> expected_g;
  std::optional<Integer> expected_beta;
  std::string source;
  // The engine may legitimately answer NotComputable for this entry.
  bool may_be_uncomputable = false;
};

struct LiftEntry {
  std::string name;
  Lift lift;
  Json expected;
  std::string source;
};

// Reads matroids/*.json with their expected/*.json, sorted by name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);
std::vector<LiftEntry> load_lifts(const std::string& dir);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CorpusReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

// Golden values plus the identity suite on every entry; randomized parts
// are driven by `seed`.
CorpusReport corpus_verify(const std::string& dir, std::uint64_t seed);

Json report_to_json(const CorpusReport& r);

}  // namespace matinv

#endif  // MATINV_CORPUS_HPP_
