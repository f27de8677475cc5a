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

#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "matinv/matinv.h"

using nlohmann::json;

namespace {

// Takes ownership of a string returned by the library.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  mi_string_free(s);
  return j;
}

mi_matroid* uniform(int r, int n) {
  mi_matroid* m = nullptr;
  REQUIRE(mi_matroid_uniform(r, n, &m) == MI_OK);
  return m;
}

const char* kPappus = MATINV_CORPUS_DIR "/matroids/pappus.json";

std::string slurp(const char* path) {
  std::string out;
  if (FILE* f = std::fopen(path, "rb")) {
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
    std::fclose(f);
  }
  return out;
}

}  // namespace

TEST_CASE("status codes and errors") {
  CHECK(std::string(mi_status_name(MI_OK)) == "Ok");
  mi_matroid* m = nullptr;
  CHECK(mi_matroid_from_json("{not json", &m) == MI_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(std::string(mi_last_error()).size() > 0);
  CHECK(std::string(mi_status_name(MI_ERR_EXCHANGE_AXIOM_VIOLATION)) == "ExchangeAxiomViolation");
  const uint32_t bad[] = {0x3, 0xC};
  CHECK(mi_matroid_from_bases(4, 2, bad, 2, &m) == MI_ERR_EXCHANGE_AXIOM_VIOLATION);
  CHECK(mi_matroid_from_bases(4, 2, bad, 0, &m) == MI_ERR_EMPTY_BASES);
  CHECK(mi_matroid_uniform(2, 4, nullptr) == MI_ERR_INVALID_INPUT);
}

TEST_CASE("matroid handles") {
  mi_matroid* u = uniform(2, 4);
  CHECK(mi_matroid_n(u) == 4);
  CHECK(mi_matroid_rank(u) == 2);
  CHECK(mi_matroid_num_bases(u) == 6);
  char* s = nullptr;
  REQUIRE(mi_matroid_to_json(u, &s) == MI_OK);
  json j = take(s);
  CHECK(j["bases"].size() == 6);
  CHECK(j["bases"][0] == json::array({1, 2}));

  mi_matroid* d = nullptr;
  REQUIRE(mi_matroid_dual(u, &d) == MI_OK);
  int eq = 0;
  REQUIRE(mi_matroid_equal(u, d, &eq) == MI_OK);
  CHECK(eq == 1);

  mi_matroid* c = nullptr;
  REQUIRE(mi_matroid_contract(u, 4, &c) == MI_OK);
  CHECK(mi_matroid_rank(c) == 1);
  CHECK(mi_matroid_n(c) == 3);
  mi_matroid* bad = nullptr;
  CHECK(mi_matroid_delete(u, 5, &bad) == MI_ERR_INVALID_INPUT);
  CHECK(mi_matroid_delete(u, 0, &bad) == MI_ERR_INVALID_INPUT);

  mi_matroid* ts = nullptr;
  REQUIRE(mi_matroid_two_sum(u, 4, u, 1, &ts) == MI_OK);
  CHECK(mi_matroid_n(ts) == 6);
  CHECK(mi_matroid_rank(ts) == 3);
  mi_matroid* ds = nullptr;
  REQUIRE(mi_matroid_direct_sum(u, u, &ds) == MI_OK);
  CHECK(mi_matroid_num_bases(ds) == 36);

  mi_matroid* p = nullptr;
  REQUIRE(mi_matroid_parallel_ext(u, 1, &p) == MI_OK);
  mi_matroid* sp = nullptr;
  REQUIRE(mi_matroid_simplify(p, &sp) == MI_OK);
  int iso = 0;
  int perm[16];
  REQUIRE(mi_matroid_isomorphic(sp, u, &iso, perm) == MI_OK);
  CHECK(iso == 1);

  mi_matroid* w6 = nullptr;
  REQUIRE(mi_matroid_wheel(6, &w6) == MI_OK);
  // A relabeled copy passes the cheap invariants and hits the size cap.
  REQUIRE(mi_matroid_to_json(w6, &s) == MI_OK);
  std::vector<uint32_t> rot;
  const json wj = take(s);
  for (const auto& b : wj["bases"]) {
    uint32_t mask = 0;
    for (int e : b) mask |= 1u << (e % 12);
    rot.push_back(mask);
  }
  mi_matroid* w6r = nullptr;
  REQUIRE(mi_matroid_from_bases(12, 6, rot.data(), rot.size(), &w6r) == MI_OK);
  CHECK(mi_matroid_isomorphic(w6, w6r, &iso, nullptr) == MI_ERR_GROUND_SET_TOO_LARGE);
  mi_matroid_free(w6r);

  for (mi_matroid* x : {u, d, c, ts, ds, p, sp, w6}) mi_matroid_free(x);
  mi_matroid_free(nullptr);
}

TEST_CASE("check reports witnesses") {
  char* s = nullptr;
  REQUIRE(mi_check_json(R"({"n":4,"rank":2,"bases":[[1,2],[3,4]]})", &s) == MI_OK);
  json j = take(s);
  CHECK(j["valid"] == false);
  CHECK(j["error"] == "ExchangeAxiomViolation");
  CHECK(j["witness"]["B1"] == json::array({1, 2}));
  REQUIRE(mi_check_json(R"({"n":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})", &s) == MI_OK);
  json ok = take(s);
  CHECK(ok["valid"] == true);
  CHECK(ok["connected"] == true);
}

TEST_CASE("invariants through the C API") {
  mi_matroid* u = uniform(2, 4);
  int64_t b = 0;
  REQUIRE(mi_beta(u, &b) == MI_OK);
  CHECK(b == 2);
  int sp = 1;
  REQUIRE(mi_is_series_parallel(u, &sp) == MI_OK);
  CHECK(sp == 0);
  char* s = nullptr;
  REQUIRE(mi_g_json(u, &s) == MI_OK);
  json g = take(s);
  CHECK(g["g"] == json::parse(R"({"t":[["1",2],["2",1]]})"));
  REQUIRE(mi_tutte_json(u, &s) == MI_OK);
  json t = take(s);
  CHECK(t["xy"].size() == 4);
  REQUIRE(mi_g_sanity_json(u, R"({"t":[["1",3],["2",1]]})", &s) == MI_OK);
  json san = take(s);
  CHECK(san.dump().find("false") != std::string::npos);

  mi_matroid* p = nullptr;
  REQUIRE(mi_matroid_from_json(slurp(kPappus).c_str(), &p) == MI_OK);
  REQUIRE(mi_g_json(p, &s) == MI_OK);
  CHECK(take(s)["g"] == json::parse(R"({"t":[["1",12],["2",21],["3",10]]})"));

  mi_matroid* loopy = nullptr;
  const uint32_t one[] = {0x1, 0x2};
  REQUIRE(mi_matroid_from_bases(3, 1, one, 2, &loopy) == MI_OK);
  CHECK(mi_g_json(loopy, &s) == MI_ERR_COORDINATE_SUBGRASSMANNIAN);
  mi_matroid_free(u);
  mi_matroid_free(p);
  mi_matroid_free(loopy);
}

TEST_CASE("lifts and subdivisions") {
  mi_lift* l = nullptr;
  REQUIRE(mi_lift_from_json(R"({"n":4,"d":2,"values":[{"I":[1,2],"p":"1"},{"I":[1,3],"p":"0"},)"
                            R"({"I":[1,4],"p":"0"},{"I":[2,3],"p":"0"},{"I":[2,4],"p":"0"},{"I":[3,4],"p":"1"}]})",
                            &l) == MI_OK);
  char* s = nullptr;
  REQUIRE(mi_tplv_json(l, &s) == MI_OK);
  CHECK(take(s)["tropical_pluecker"] == true);
  mi_subdivision* sd = nullptr;
  REQUIRE(mi_subdivide(l, 1, &sd) == MI_OK);
  REQUIRE(mi_subdivision_fvector_json(sd, &s) == MI_OK);
  CHECK(take(s) == json::parse(R"({"1":2,"2":1})"));
  REQUIRE(mi_subdivision_bound_json(sd, &s) == MI_OK);
  json br = take(s);
  CHECK(br["equality"] == true);
  CHECK(br["all_series_parallel"] == true);
  REQUIRE(mi_subdivision_solve_g_json(sd, -1, &s) == MI_OK);
  CHECK(take(s)["g"] == json::parse(R"({"t":[["1",2],["2",1]]})"));
  REQUIRE(mi_valuative_json(sd, &s) == MI_OK);
  CHECK(take(s)["valuative"] == true);
  REQUIRE(mi_subdivision_matroidal_json(sd, &s) == MI_OK);
  CHECK(take(s)["matroidal"] == true);
  mi_subdivision_free(sd);
  mi_lift_free(l);

  REQUIRE(mi_lift_from_json(R"({"n":4,"d":2,"values":[{"I":[1,2],"p":"-1"},{"I":[1,3],"p":"0"},)"
                            R"({"I":[1,4],"p":"0"},{"I":[2,3],"p":"0"},{"I":[2,4],"p":"0"},{"I":[3,4],"p":"0"}]})",
                            &l) == MI_OK);
  REQUIRE(mi_tplv_json(l, &s) == MI_OK);
  json bad = take(s);
  CHECK(bad["tropical_pluecker"] == false);
  CHECK(bad.contains("witness"));
  mi_lift_free(l);
  CHECK(mi_lift_from_json(R"({"n":4,"d":2,"values":[]})", &l) != MI_OK);
}

TEST_CASE("K-classes through the C API") {
  mi_matroid* u = uniform(2, 4);
  char* s = nullptr;
  REQUIRE(mi_kclass_json(u, &s) == MI_OK);
  std::string cls = s;
  mi_string_free(s);
  json k = json::parse(cls);
  CHECK(k["fI"].size() == 6);
  REQUIRE(mi_gkm_json(cls.c_str(), &s) == MI_OK);
  json gk = take(s);
  CHECK(gk["gkm"] == true);
  CHECK(gk["degree_zero"] == true);
  // Perturb one fixed point.
  k["fI"][0]["terms"].push_back({{"exp", {1, -1, 0, 0}}, {"c", "1"}});
  REQUIRE(mi_gkm_json(k.dump().c_str(), &s) == MI_OK);
  CHECK(take(s)["gkm"] == false);
  REQUIRE(mi_brion_json(u, &s) == MI_OK);
  CHECK(take(s)["ok"] == true);
  mi_matroid_free(u);
}

TEST_CASE("corpus through the C API") {
  char* s = nullptr;
  REQUIRE(mi_corpus_verify_json(MATINV_CORPUS_DIR, 1, &s) == MI_OK);
  json r = take(s);
  CHECK(r["ok"] == true);
  REQUIRE(mi_corpus_verify_json("/nonexistent", 1, &s) == MI_OK);
  CHECK(take(s)["ok"] == false);
}
