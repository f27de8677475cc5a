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

// Acceptance gate. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "matinv/corpus.hpp"
#include "matinv/error.hpp"
#include "matinv/invariants.hpp"
#include "matinv/json_io.hpp"
#include "matinv/ktheory.hpp"
#include "matinv/polytope.hpp"
#include "oracles.hpp"

using namespace matinv;

namespace {

const std::string kCorpus = MATINV_CORPUS_DIR;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  // Records a failure; the first few are kept in the detail line.
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << "first failure: " << what;
    ok = false;
  }
};

GPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return GPolynomial(v);
}

Matroid load(const std::string& name) {
  return matroid_from_json(read_json_file(kCorpus + "/matroids/" + name + ".json"));
}

oracle::Bases brute(const Matroid& m) {
  return {m.n(), m.rank(), std::set<Mask>(m.bases().begin(), m.bases().end())};
}

int ncomp(const Matroid& m) { return static_cast<int>(oracle::components(brute(m)).size()); }

std::vector<CorpusEntry> computable(const std::vector<CorpusEntry>& all) {
  std::vector<CorpusEntry> out;
  for (const auto& e : all) {
    if (loops(e.matroid) || coloops(e.matroid)) continue;
    try {
      g_invariant(e.matroid);
      out.push_back(e);
    } catch (const Error&) {
    }
  }
  return out;
}

void golden(Outcome& o) {
  const std::pair<std::string, std::pair<Matroid, GPolynomial>> cases[] = {
      {"U(2,4)", {uniform(2, 4), P({0, 2, 1})}},
      {"U(2,5)", {uniform(2, 5), P({0, 3, 2})}},
      {"U(2,6)", {uniform(2, 6), P({0, 4, 3})}},
      {"wheel(3)", {wheel(3), P({0, 2, 2, 1})}},
      {"whirl(3)", {whirl(3), P({0, 3, 3, 1})}},
      {"wheel(4)", {wheel(4), P({0, 3, 5, 4, 1})}},
      {"whirl(4)", {whirl(4), P({0, 4, 6, 4, 1})}},
      {"alpha-matrix", {load("whirl4"), P({0, 4, 6, 4, 1})}},
      {"Pappus", {load("pappus"), P({0, 12, 21, 10})}},
  };
  for (const auto& [name, mg] : cases) {
    GPolynomial g = g_invariant(mg.first).g;
    o.expect(g == mg.second, name + " gives " + g.to_string());
  }
  o.detail << (o.ok ? "9 exact matches" : "");
}

void uniform_routes(Outcome& o) {
  for (int n = 4; n <= 9; ++n) {
    o.expect(g_uniform(3, n) == g_rank3(uniform(3, n)), "U(3," + std::to_string(n) + ")");
  }
  Lift split = zero_lift(4, 2);
  split.values[bit(0) | bit(1)] = 1;
  split.values[bit(2) | bit(3)] = 1;
  Subdivision sd = regular_subdivision(split);
  auto solved = g_from_subdivision(sd, [](const Matroid& m) -> std::optional<GPolynomial> {
    if (m == uniform(2, 4)) return std::nullopt;
    return GPolynomial::monomial(ncomp(m));
  });
  o.expect(solved.size() == 1 && solved[0].face == -1 && solved[0].g == g_uniform(2, 4),
           "split does not give 2t+t^2");
  if (o.ok) o.detail << "U(3,4..9) flats formula = closed form; split t+t+t^2 = 2t+t^2";
}

void identity_suite(Outcome& o, const std::vector<CorpusEntry>& comp, std::mt19937_64& rng) {
  o.expect(comp.size() >= 15, "only " + std::to_string(comp.size()) + " computable matroids");
  for (const auto& e : comp) {
    const Matroid& m = e.matroid;
    const GPolynomial g = g_invariant(m).g;
    const int c = ncomp(m);
    o.expect(g.eval(-1) == (c % 2 ? -1 : 1), e.name + ": g(-1)");
    o.expect(g.coeff(1) == oracle::crapo_beta(brute(m)), e.name + ": [t]g != beta");
    o.expect(g.degree() <= std::min(m.rank(), m.n() - m.rank()), e.name + ": degree");
    for (const auto& x : g.coefficients()) o.expect(x >= 0, e.name + ": negative coefficient");
    o.expect(g_invariant(dual(m)).g == g, e.name + ": dual");
    Matroid x = m;
    for (int k = 0; k < 5; ++k) {
      const int el = static_cast<int>(rng() % x.n());
      if (x.n() >= kMaxGroundSet) break;
      x = (rng() & 1) ? series_ext(x, el) : parallel_ext(x, el);
      o.expect(g_invariant(x).g == g, e.name + ": extension " + std::to_string(k));
    }
  }
  if (o.ok) o.detail << comp.size() << " matroids, 6 identities each";
}

void multiplicativity(Outcome& o, const std::vector<CorpusEntry>& comp, std::mt19937_64& rng) {
  std::vector<const CorpusEntry*> small;
  for (const auto& e : comp)
    if (e.matroid.n() <= 8) small.push_back(&e);
  int pairs = 0;
  const GPolynomial t = P({0, 1});
  while (pairs < 20) {
    const CorpusEntry* a = small[rng() % small.size()];
    const CorpusEntry* b = small[rng() % small.size()];
    const Matroid& m1 = a->matroid;
    const Matroid& m2 = b->matroid;
    const GPolynomial g1 = g_invariant(m1).g, g2 = g_invariant(m2).g;
    const std::string tag = a->name + " & " + b->name;
    o.expect(g_invariant(direct_sum(m1, m2)).g == g1 * g2, tag + ": direct sum");
    const int e1 = static_cast<int>(rng() % m1.n()), e2 = static_cast<int>(rng() % m2.n());
    o.expect(t * g_invariant(two_sum(m1, e1, m2, e2)).g == g1 * g2, tag + ": 2-sum");
    ++pairs;
  }
  if (o.ok) o.detail << pairs << " pairs, both products exact";
}

void subdivisions(Outcome& o, std::mt19937_64& rng) {
  const int shapes[][2] = {{2, 4}, {2, 5}, {2, 6}, {3, 6}};
  std::uniform_int_distribution<int> dist(-3, 3);
  int all_sp = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = shapes[trial % 4][0], n = shapes[trial % 4][1];
    QMatrix a(d, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& x : row) x = dist(rng);
    Lift l = tropical_minors(a);
    Subdivision s = regular_subdivision(l);
    const std::string tag = "lift " + std::to_string(trial);
    o.expect(is_matroidal(s).ok, tag + ": not matroidal");
    Integer vol = 0;
    for (const auto& v : s.facet_det_sums) vol += v;
    o.expect(s.volume_checked && vol == d * oracle::eulerian(n - 1, d - 1), tag + ": volume");
    std::map<int, int> f;
    for (const auto& c : s.interior_faces) {
      const int comps = static_cast<int>(
          oracle::components({n, d, std::set<Mask>(c.vertices.begin(), c.vertices.end())}).size());
      o.expect(c.dim == n - comps, tag + ": dim != n - components");
      ++f[comps];
    }
    bool sp = true;
    for (const auto& c : s.facets) sp = sp && c.matroid && is_series_parallel(*c.matroid);
    all_sp += sp;
    for (int c = 1; c <= std::min(d, n - d); ++c) {
      const Integer bound = oracle::fvector_bound(d, n, c);
      o.expect(f[c] <= bound, tag + ": f_" + std::to_string(c) + " above the bound");
      if (sp) o.expect(f[c] == bound, tag + ": all facets SP but f_" + std::to_string(c) + " < bound");
    }
  }
  if (o.ok) o.detail << "200 lifts, " << all_sp << " with all facets series-parallel";
}

void pappus(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Matroid p = load("pappus");
  Lift l = indicator_lift(p);
  o.expect(is_tropical_pluecker(l).ok, "indicator lift is not tropical Pluecker");
  Subdivision s = regular_subdivision(l);
  o.expect(s.facets.size() == 10, std::to_string(s.facets.size()) + " facets");
  o.expect(s.f_vector[1] == 10 && s.f_vector[2] == 9, "f-vector");
  auto solved = g_from_subdivision(s, [&](const Matroid& m) -> std::optional<GPolynomial> {
    if (m == p) return std::nullopt;
    if (m == uniform(3, 9)) return g_uniform(3, 9);
    return g_invariant(m).g;
  });
  o.expect(solved.size() == 1 && solved[0].g == P({0, 12, 21, 10}), "additivity");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 300, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail << "10 facets, 9 walls, 12t+21t^2+10t^3 in " << secs << " s";
}

void ktheory(Outcome& o, const std::vector<CorpusEntry>& all) {
  int classes = 0;
  for (const auto& e : all) {
    if (e.matroid.n() > 6) continue;
    EquivariantClass k = localized_class(e.matroid);  // throws NotLaurent
    o.expect(is_degree_zero(k), e.name + ": degree");
    o.expect(check_gkm(k).ok, e.name + ": GKM");
    ++classes;
  }
  LaurentPoly f12 = LaurentPoly::constant(4, 1);
  f12.add_term({-1, -1, 1, 1}, -1);
  o.expect(localized_class(uniform(2, 4)).at(bit(0) | bit(1)) == f12, "f_12 of U(2,4)");
  int brion = 0;
  for (const Matroid& m : {uniform(1, 3), uniform(2, 4), uniform(1, 4), parallel_ext(uniform(2, 3), 0),
                           direct_sum(uniform(1, 2), uniform(1, 2)), uniform(2, 5)}) {
    o.expect(brion_check(m).ok, "Brion on " + describe(m));
    ++brion;
  }
  if (o.ok) o.detail << classes << " classes Laurent, degree zero, GKM; f_12 exact; Brion on " << brion;
}

void valuativity(Outcome& o, std::mt19937_64& rng) {
  const int shapes[][2] = {{2, 4}, {2, 5}, {3, 5}};
  std::uniform_int_distribution<int> dist(-2, 2);
  int done = 0, nontrivial = 0;
  auto run = [&](const Subdivision& s, const std::string& tag) {
    ValuativeReport r = check_valuative(s, uniform(s.d, s.n));
    for (const auto& row : r.rows) {
      if (!row.holds) {
        o.expect(false, tag + " at " + mask_to_string(row.basis) + ": " + row.lhs.to_string() +
                            " != " + row.rhs.to_string());
      }
    }
  };
  for (int trial = 0; done < 50; ++trial) {
    const int d = shapes[trial % 3][0], n = shapes[trial % 3][1];
    QMatrix a(d, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& x : row) x = dist(rng);
    Subdivision s = regular_subdivision(tropical_minors(a));
    run(s, "lift " + std::to_string(trial));
    nontrivial += s.facets.size() > 1;
    ++done;
  }
  Lift split = zero_lift(4, 2);
  split.values[bit(0) | bit(1)] = 1;
  split.values[bit(2) | bit(3)] = 1;
  run(regular_subdivision(split), "split");
  if (o.ok) o.detail << done << " random (" << nontrivial << " nontrivial) + the split, every fixed point";
}

void beta_tutte(Outcome& o, const std::vector<CorpusEntry>& all) {
  for (const auto& e : all) {
    const Integer b = beta(e.matroid);
    TuttePolynomial t = tutte(e.matroid);
    o.expect(b == t[{1, 0}], e.name + ": beta != [x]T");
    o.expect(b == t[{0, 1}] || e.matroid.n() < 2, e.name + ": beta != [y]T");
    if (is_connected(e.matroid) && e.matroid.n() >= 2) o.expect(b > 0, e.name + ": connected, beta 0");
  }
  if (o.ok) o.detail << all.size() << " corpus matroids";
}

}  // namespace

int main() {
  std::mt19937_64 rng(20260101);
  const auto all = load_corpus(kCorpus);
  const auto comp = computable(all);
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"golden g values", [&](Outcome& o) { golden(o); }},
      {"uniform closed form vs flats formula and split", [&](Outcome& o) { uniform_routes(o); }},
      {"identity suite on the corpus", [&](Outcome& o) { identity_suite(o, comp, rng); }},
      {"multiplicativity", [&](Outcome& o) { multiplicativity(o, comp, rng); }},
      {"subdivision engine on 200 lifts", [&](Outcome& o) { subdivisions(o, rng); }},
      {"Pappus end to end", [&](Outcome& o) { pappus(o); }},
      {"K-theory suite", [&](Outcome& o) { ktheory(o, all); }},
      {"valuativity", [&](Outcome& o) { valuativity(o, rng); }},
      {"beta vs Tutte", [&](Outcome& o) { beta_tutte(o, all); }},
  };
  int failed = 0, idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    Outcome o;
    try {
      c.run(o);
    } catch (const Error& e) {
      o.ok = false;
      o.detail << error_code_name(e.code()) << ": " << e.what();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << idx << " " << c.name << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
