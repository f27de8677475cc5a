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

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "matinv/corpus.hpp"
#include "matinv/error.hpp"
#include "matinv/json_io.hpp"
#include "oracles.hpp"

using namespace matinv;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = MATINV_CORPUS_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

fs::path copy_corpus(const std::string& tag) {
  fs::path dst = fs::temp_directory_path() / ("matinv_corpus_" + tag);
  fs::remove_all(dst);
  fs::copy(kCorpus, dst, fs::copy_options::recursive);
  return dst;
}

void write(const fs::path& p, const Json& j) { std::ofstream(p) << j.dump(1); }

std::vector<std::string> failures(const CorpusReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

}  // namespace

TEST_CASE("JSON parsing errors") {
  try {
    parse_json("{\"n\": 4,, }");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK(code_of([] { matroid_from_json(parse_json("{\"n\":2}")); }) == ErrorCode::kParse);
  CHECK(code_of([] { matroid_from_json(parse_json(R"({"n":2,"rank":1,"bases":[[3]]})")); }) ==
        ErrorCode::kInvalidInput);
  CHECK(code_of([] { matroid_from_json(parse_json(R"j({"field":"GF(4)","rows":[["1"]]})j")); }) ==
        ErrorCode::kInvalidInput);
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) != static_cast<ErrorCode>(0));
}

TEST_CASE("matroid JSON forms") {
  Matroid u24 = uniform(2, 4);
  Json j = matroid_to_json(u24);
  CHECK(j["bases"][0] == Json::array({1, 2}));
  CHECK(matroid_from_json(j) == u24);
  CHECK(matroid_from_json(parse_json(j.dump())) == u24);
  Matroid q = matroid_from_json(parse_json(R"({"field":"Q","rows":[["1","0","1/2","1"],["0","1","1","-3/4"]]})"));
  CHECK(q == u24);
  Matroid g = matroid_from_json(parse_json(R"({"vertices":3,"edges":[[1,2],[2,3],[1,3]]})"));
  CHECK(g == uniform(2, 3));
  // Every 2x2 minor is nonzero mod 3.
  Matroid f3 = matroid_from_json(parse_json(R"j({"field":"GF(3)","rows":[["1","0","1"],["0","1","2"]]})j"));
  CHECK(f3 == uniform(2, 3));
  Matroid f2 = matroid_from_json(parse_json(R"j({"field":"GF(2)","rows":[["1","0","1"],["0","1","1"]]})j"));
  CHECK(f2 == uniform(2, 3));
  Matroid f2b = matroid_from_json(parse_json(R"j({"field":"GF(2)","rows":[["1","1","0"],["1","1","1"]]})j"));
  CHECK(f2b.num_bases() == 2);
}

TEST_CASE("value JSON round trips") {
  GPolynomial g({0, 12, 21, 10});
  CHECK(poly_to_json(g).dump() == R"({"t":[["1",12],["2",21],["3",10]]})");
  CHECK(poly_from_json(poly_to_json(g)) == g);
  GPolynomial big({0, Integer("123456789012345678901234567890")});
  CHECK(poly_from_json(parse_json(poly_to_json(big).dump())) == big);

  TuttePolynomial t{{{1, 0}, 1}, {{0, 1}, 1}};
  CHECK(tutte_to_json(t).dump() == R"({"xy":[[[0,1],1],[[1,0],1]]})");

  Lift l = zero_lift(4, 2);
  l.values[bit(0) | bit(1)] = Rational(3, 2);
  Lift back = lift_from_json(parse_json(lift_to_json(l).dump()));
  CHECK(back.values == l.values);
  CHECK(back.n == 4);
  CHECK(back.d == 2);
  CHECK(code_of([] { lift_from_json(parse_json(R"({"n":4,"d":2,"values":[{"I":[1,2],"p":"0"}]})")); }) !=
        static_cast<ErrorCode>(0));

  LaurentPoly p = LaurentPoly::constant(4, 1);
  p.add_term({-1, -1, 1, 1}, Rational(-1, 3));
  CHECK(laurent_from_json(laurent_to_json(p), 4) == p);
  EquivariantClass k;
  k.n = 4;
  k.d = 2;
  k.f[bit(0) | bit(1)] = p;
  EquivariantClass kb = class_from_json(parse_json(class_to_json(k).dump()));
  CHECK(kb.n == 4);
  CHECK(kb.at(bit(0) | bit(1)) == p);
  CHECK(kb.at(bit(2) | bit(3)).is_zero());

  CHECK(mask_to_json(bit(0) | bit(2)) == Json::array({1, 3}));
  CHECK(mask_from_json(Json::array({1, 3}), 4) == (bit(0) | bit(2)));
  CHECK_THROWS_AS(mask_from_json(Json::array({5}), 4), Error);
}

TEST_CASE("corpus contents") {
  auto entries = load_corpus(kCorpus);
  CHECK(entries.size() >= 20);
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; }));
  int uniform_checked = 0;
  for (const auto& e : entries) {
    if (e.name.size() == 3 && e.name[0] == 'u' && e.expected_g) {
      const int d = e.name[1] - '0', n = e.name[2] - '0';
      CHECK(e.matroid == uniform(d, n));
      CHECK(*e.expected_g == GPolynomial(oracle::g_uniform(d, n)));
      ++uniform_checked;
    }
    CHECK_FALSE(e.source.empty());
  }
  CHECK(uniform_checked == 6);
  CHECK(load_lifts(kCorpus).size() == 4);
}

TEST_CASE("corpus verification") {
  CorpusReport r = corpus_verify(kCorpus, 1);
  CHECK(r.ok());
  CHECK(failures(r).empty());
  CHECK(report_to_json(r) == report_to_json(corpus_verify(kCorpus, 1)));
  CHECK(corpus_verify(kCorpus, 99).ok());
}

TEST_CASE("a tampered golden value fails by name") {
  fs::path dir = copy_corpus("g");
  Json e = read_json_file((dir / "expected" / "u24.json").string());
  e["g"] = poly_to_json(GPolynomial({0, 2, 2}));
  write(dir / "expected" / "u24.json", e);
  auto f = failures(corpus_verify(dir.string(), 1));
  CHECK(f == std::vector<std::string>{"u24/g"});

  fs::path dir2 = copy_corpus("lift");
  const fs::path exp2 = dir2 / "expected" / "lift_split24.json";
  Json x = read_json_file(exp2.string());
  x["facets"] = 3;
  write(exp2, x);
  CHECK(failures(corpus_verify(dir2.string(), 1)) == std::vector<std::string>{"lift_split24/lift"});

  fs::path dir3 = copy_corpus("beta");
  Json b = read_json_file((dir3 / "expected" / "pappus.json").string());
  b["beta"] = 11;
  write(dir3 / "expected" / "pappus.json", b);
  CHECK(failures(corpus_verify(dir3.string(), 1)) == std::vector<std::string>{"pappus/beta"});
  fs::remove_all(dir);
  fs::remove_all(dir2);
  fs::remove_all(dir3);
}
