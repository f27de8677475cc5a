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

#include "matinv/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "matinv/error.hpp"

namespace matinv {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json expected_for(const fs::path& dir, const std::string& name) {
  fs::path p = dir / "expected" / (name + ".json");
  if (!fs::exists(p)) return Json::object();
  return read_json_file(p.string());
}

std::string source_of(const Json& j) {
  return j.contains("source") ? j.at("source").get<std::string>() : std::string();
}

void add(CorpusReport& r, std::string name, bool passed, std::string detail) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Runs f, turning library errors into a failed check.
template <typename F>
void guarded(CorpusReport& r, const std::string& name, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    add(r, name, false, std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

void verify_matroid(CorpusReport& r, const CorpusEntry& e, std::mt19937_64& rng) {
  const Matroid& m = e.matroid;
  std::optional<GPolynomial> g;
  guarded(r, e.name + "/g", [&] {
    try {
      g = g_invariant(m).g;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kNotComputable && e.may_be_uncomputable) {
        add(r, e.name + "/g", true, "not computable; entry allows this");
        return;
      }
      throw;
    }
    if (e.expected_g) {
      add(r, e.name + "/g", *g == *e.expected_g,
          "computed " + g->to_string() + ", expected " + e.expected_g->to_string());
    } else {
      add(r, e.name + "/g", true, "computed " + g->to_string());
    }
  });
  guarded(r, e.name + "/beta", [&] {
    if (m.n() < 2) return;
    Integer b = beta(m);
    Integer tx = 0;
    TuttePolynomial t = tutte(m);
    if (auto it = t.find({1, 0}); it != t.end()) tx = it->second;
    bool ok = b == tx;
    std::string detail = "beta " + b.get_str() + ", [x]T " + tx.get_str();
    if (e.expected_beta) {
      ok = ok && b == *e.expected_beta;
      detail += ", expected " + e.expected_beta->get_str();
    }
    add(r, e.name + "/beta", ok, detail);
  });
  if (!g) return;
  guarded(r, e.name + "/sanity", [&] {
    auto checks = g_sanity(m, *g);
    std::string failed;
    for (const auto& c : checks) {
      if (!c.passed) failed += c.name + " (" + c.detail + ") ";
    }
    add(r, e.name + "/sanity", failed.empty(), failed.empty() ? "all identities hold" : failed);
  });
  guarded(r, e.name + "/dual", [&] {
    GPolynomial gd = g_invariant(dual(m)).g;
    add(r, e.name + "/dual", gd == *g, "g(dual) = " + gd.to_string());
  });
  guarded(r, e.name + "/extensions", [&] {
    std::string detail;
    bool ok = true;
    int done = 0;
    for (int k = 0; k < 5 && m.n() < kMaxGroundSet; ++k) {
      const int elem = static_cast<int>(rng() % m.n());
      const bool parallel = rng() % 2 == 0;
      Matroid ext = parallel ? parallel_ext(m, elem) : series_ext(m, elem);
      GPolynomial ge = g_invariant(ext).g;
      if (!(ge == *g)) {
        ok = false;
        detail += std::string(parallel ? "parallel" : "series") + " at " +
                  std::to_string(elem + 1) + " gives " + ge.to_string() + "; ";
      }
      ++done;
    }
    add(r, e.name + "/extensions", ok,
        ok ? std::to_string(done) + " random extensions agree" : detail);
  });
}

void verify_lift(CorpusReport& r, const LiftEntry& e) {
  const Json& x = e.expected;
  guarded(r, e.name + "/lift", [&] {
    PlueckerResult p = is_tropical_pluecker(e.lift);
    bool ok = true;
    std::string detail = std::string("tropical Pluecker ") + (p.ok ? "yes" : "no");
    if (x.contains("tropical_pluecker")) ok = ok && p.ok == x.at("tropical_pluecker").get<bool>();
    if (p.ok) {
      Subdivision s = regular_subdivision(e.lift);
      detail += ", " + std::to_string(s.facets.size()) + " facets";
      if (x.contains("facets")) ok = ok && static_cast<int>(s.facets.size()) == x.at("facets").get<int>();
      if (x.contains("f_vector")) {
        std::map<int, int> f = interior_f_vector(s);
        for (const auto& [c, count] : x.at("f_vector").items()) {
          const int got = f.count(std::stoi(c)) ? f.at(std::stoi(c)) : 0;
          ok = ok && got == count.get<int>();
          detail += ", f_" + c + "=" + std::to_string(got);
        }
      }
      if (x.contains("g_solved")) {
        const std::string which = x.value("unknown", "largest_facet");
        int unknown = which == "whole" ? -1 : largest_interior_face(s);
        SolvedG solved = solve_g_with_engine(s, unknown);
        GPolynomial want = poly_from_json(x.at("g_solved"));
        ok = ok && solved.g == want;
        detail += ", solved g = " + solved.g.to_string();
      }
    }
    add(r, e.name + "/lift", ok, detail);
  });
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::vector<CorpusEntry> out;
  for (const auto& p : json_files(fs::path(dir) / "matroids")) {
    Json j = read_json_file(p.string());
    const std::string name = p.stem().string();
    Json x = expected_for(dir, name);
    CorpusEntry e{name, matroid_from_json(j), std::nullopt, std::nullopt, source_of(x), false};
    if (x.contains("g")) e.expected_g = poly_from_json(x.at("g"));
    if (x.contains("beta")) e.expected_beta = Integer(x.at("beta").get<long>());
    e.may_be_uncomputable = x.value("may_be_uncomputable", false);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LiftEntry> load_lifts(const std::string& dir) {
  std::vector<LiftEntry> out;
  for (const auto& p : json_files(fs::path(dir) / "lifts")) {
    const std::string name = p.stem().string();
    Json x = expected_for(dir, name);
    out.push_back({name, lift_from_json(read_json_file(p.string())), x, source_of(x)});
  }
  return out;
}

bool CorpusReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CorpusReport corpus_verify(const std::string& dir, std::uint64_t seed) {
  CorpusReport r;
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> entries = load_corpus(dir);
  if (entries.empty()) add(r, "corpus", false, "no matroids found under " + dir);
  for (const auto& e : entries) verify_matroid(r, e, rng);
  for (const auto& e : load_lifts(dir)) verify_lift(r, e);
  return r;
}

Json report_to_json(const CorpusReport& r) {
  Json checks = Json::array();
  int failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) ++failed;
  }
  return Json{{"checks", checks}, {"ok", r.ok()}, {"failed", failed},
              {"total", static_cast<int>(r.checks.size())}};
}

}  // namespace matinv
