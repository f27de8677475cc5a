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

#define MATINV_BUILDING_LIBRARY 1
#include "matinv/matinv.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "matinv/bitset.hpp"
#include "matinv/corpus.hpp"
#include "matinv/error.hpp"
#include "matinv/invariants.hpp"
#include "matinv/json_io.hpp"
#include "matinv/ktheory.hpp"
#include "matinv/matroid.hpp"
#include "matinv/polytope.hpp"

struct mi_matroid {
  matinv::Matroid m;
};
struct mi_lift {
  matinv::Lift l;
};
struct mi_subdivision {
  matinv::Subdivision s;
};

namespace {

using matinv::ErrorCode;
using matinv::Json;

thread_local std::string g_last_error;

template <typename F>
mi_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return MI_OK;
  } catch (const matinv::Error& e) {
    g_last_error = e.what();
    return static_cast<mi_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MI_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const Json& j, char** out) {
  if (out == nullptr) matinv::fail(ErrorCode::kInvalidInput, "out is null");
  *out = dup_string(j.dump());
}

void need(const void* p, const char* what) {
  if (p == nullptr) matinv::fail(ErrorCode::kInvalidInput, std::string(what) + " is null");
}

// 1-indexed element from the caller to 0-indexed.
int element(const matinv::Matroid& m, int e) {
  if (e < 1 || e > m.n()) {
    matinv::fail(ErrorCode::kInvalidInput,
                 "element " + std::to_string(e) + " outside 1.." + std::to_string(m.n()));
  }
  return e - 1;
}

template <typename F>
mi_status make_matroid(mi_matroid** out, F&& f) {
  return guarded([&] {
    need(out, "out");
    *out = new mi_matroid{f()};
  });
}

Json components_json(const matinv::Matroid& m) {
  Json blocks = Json::array();
  for (matinv::Mask b : matinv::components(m).blocks) blocks.push_back(matinv::mask_to_json(b));
  return blocks;
}

matinv::Matroid support_of(const matinv::Subdivision& s) {
  return s.support ? *s.support : matinv::uniform(s.d, s.n);
}

}  // namespace

extern "C" {

const char* mi_last_error(void) { return g_last_error.c_str(); }

const char* mi_status_name(mi_status status) {
  if (status == MI_OK) return "Ok";
  if (status < MI_ERR_INVALID_INPUT || status > MI_ERR_INTERNAL) return "Unknown";
  return matinv::error_code_name(static_cast<ErrorCode>(status));
}

void mi_string_free(char* s) { std::free(s); }

mi_status mi_matroid_from_json(const char* json, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(json, "json");
    return matinv::matroid_from_json(matinv::parse_json(json));
  });
}

mi_status mi_matroid_from_bases(int n, int rank, const uint32_t* bases, size_t count,
                                mi_matroid** out) {
  return make_matroid(out, [&] {
    if (count > 0) need(bases, "bases");
    return matinv::Matroid::from_bases(n, rank, std::vector<matinv::Mask>(bases, bases + count));
  });
}

mi_status mi_matroid_uniform(int rank, int n, mi_matroid** out) {
  return make_matroid(out, [&] { return matinv::uniform(rank, n); });
}

mi_status mi_matroid_wheel(int d, mi_matroid** out) {
  return make_matroid(out, [&] { return matinv::wheel(d); });
}

mi_status mi_matroid_whirl(int d, mi_matroid** out) {
  return make_matroid(out, [&] { return matinv::whirl(d); });
}

void mi_matroid_free(mi_matroid* m) { delete m; }

int mi_matroid_n(const mi_matroid* m) { return m ? m->m.n() : -1; }
int mi_matroid_rank(const mi_matroid* m) { return m ? m->m.rank() : -1; }
size_t mi_matroid_num_bases(const mi_matroid* m) { return m ? m->m.num_bases() : 0; }

mi_status mi_matroid_to_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    emit(matinv::matroid_to_json(m->m), out);
  });
}

mi_status mi_matroid_info_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    const auto& M = m->m;
    Json j;
    j["n"] = M.n();
    j["rank"] = M.rank();
    j["num_bases"] = M.num_bases();
    j["loops"] = matinv::mask_to_json(matinv::loops(M));
    j["coloops"] = matinv::mask_to_json(matinv::coloops(M));
    j["components"] = components_json(M);
    j["connected"] = matinv::is_connected(M);
    emit(j, out);
  });
}

mi_status mi_check_json(const char* json, char** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    Json in = matinv::parse_json(json);
    Json j;
    try {
      matinv::Matroid m = matinv::matroid_from_json(in);
      j["valid"] = true;
      j["n"] = m.n();
      j["rank"] = m.rank();
      j["num_bases"] = m.num_bases();
      j["connected"] = m.n() > 0 && matinv::is_connected(m);
      j["loops"] = matinv::mask_to_json(matinv::loops(m));
      j["coloops"] = matinv::mask_to_json(matinv::coloops(m));
    } catch (const matinv::Error& e) {
      if (e.code() == ErrorCode::kExchangeAxiomViolation) {
        const int n = in.at("n").get<int>();
        std::vector<matinv::Mask> bases;
        for (const auto& b : in.at("bases")) bases.push_back(matinv::mask_from_json(b, n));
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        auto v = matinv::find_exchange_violation(n, bases);
        if (!v) throw;
        j["valid"] = false;
        j["error"] = "ExchangeAxiomViolation";
        j["witness"] = {{"B1", matinv::mask_to_json(v->b1)},
                        {"B2", matinv::mask_to_json(v->b2)},
                        {"i", v->i + 1}};
      } else if (e.code() == ErrorCode::kEmptyBases) {
        j["valid"] = false;
        j["error"] = "EmptyBases";
      } else {
        throw;
      }
    }
    emit(j, out);
  });
}

mi_status mi_matroid_dual(const mi_matroid* m, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::dual(m->m);
  });
}

mi_status mi_matroid_delete(const mi_matroid* m, int e, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::delete_element(m->m, element(m->m, e));
  });
}

mi_status mi_matroid_contract(const mi_matroid* m, int e, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::contract_element(m->m, element(m->m, e));
  });
}

mi_status mi_matroid_direct_sum(const mi_matroid* a, const mi_matroid* b, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(a, "matroid");
    need(b, "matroid");
    return matinv::direct_sum(a->m, b->m);
  });
}

mi_status mi_matroid_two_sum(const mi_matroid* a, int e1, const mi_matroid* b, int e2,
                             mi_matroid** out) {
  return make_matroid(out, [&] {
    need(a, "matroid");
    need(b, "matroid");
    return matinv::two_sum(a->m, element(a->m, e1), b->m, element(b->m, e2));
  });
}

mi_status mi_matroid_parallel_ext(const mi_matroid* m, int e, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::parallel_ext(m->m, element(m->m, e));
  });
}

mi_status mi_matroid_series_ext(const mi_matroid* m, int e, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::series_ext(m->m, element(m->m, e));
  });
}

mi_status mi_matroid_simplify(const mi_matroid* m, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::simplify(m->m);
  });
}

mi_status mi_matroid_cosimplify(const mi_matroid* m, mi_matroid** out) {
  return make_matroid(out, [&] {
    need(m, "matroid");
    return matinv::cosimplify(m->m);
  });
}

mi_status mi_matroid_equal(const mi_matroid* a, const mi_matroid* b, int* out) {
  return guarded([&] {
    need(a, "matroid");
    need(b, "matroid");
    need(out, "out");
    *out = a->m == b->m ? 1 : 0;
  });
}

mi_status mi_matroid_isomorphic(const mi_matroid* a, const mi_matroid* b, int* out, int* perm) {
  return guarded([&] {
    need(a, "matroid");
    need(b, "matroid");
    need(out, "out");
    auto r = matinv::is_isomorphic(a->m, b->m);
    *out = r.isomorphic ? 1 : 0;
    if (perm != nullptr && r.isomorphic) {
      for (std::size_t i = 0; i < r.perm.size(); ++i) perm[i] = r.perm[i] + 1;
    }
  });
}

mi_status mi_tutte_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    emit(matinv::tutte_to_json(matinv::tutte(m->m)), out);
  });
}

mi_status mi_beta(const mi_matroid* m, int64_t* out) {
  return guarded([&] {
    need(m, "matroid");
    need(out, "out");
    matinv::Integer b = matinv::beta(m->m);
    if (!b.fits_slong_p()) matinv::fail(ErrorCode::kInternal, "beta does not fit in 64 bits");
    *out = b.get_si();
  });
}

mi_status mi_is_series_parallel(const mi_matroid* m, int* out) {
  return guarded([&] {
    need(m, "matroid");
    need(out, "out");
    *out = matinv::is_series_parallel(m->m) ? 1 : 0;
  });
}

mi_status mi_g_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    auto r = matinv::g_invariant(m->m);
    Json j;
    j["g"] = matinv::poly_to_json(r.g);
    j["derivation"] = r.derivation;
    emit(j, out);
  });
}

mi_status mi_g_derivations_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    Json list = Json::array();
    for (const auto& r : matinv::g_derivations(m->m)) {
      list.push_back({{"g", matinv::poly_to_json(r.g)}, {"derivation", r.derivation}});
    }
    emit(list, out);
  });
}

mi_status mi_g_sanity_json(const mi_matroid* m, const char* poly_json, char** out) {
  return guarded([&] {
    need(m, "matroid");
    need(poly_json, "poly_json");
    auto g = matinv::poly_from_json(matinv::parse_json(poly_json));
    auto checks = matinv::g_sanity(m->m, g);
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    emit({{"ok", matinv::all_passed(checks)}, {"checks", list}}, out);
  });
}

mi_status mi_lift_from_json(const char* json, mi_lift** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new mi_lift{matinv::lift_from_json(matinv::parse_json(json))};
  });
}

mi_status mi_lift_indicator(const mi_matroid* m, mi_lift** out) {
  return guarded([&] {
    need(m, "matroid");
    need(out, "out");
    *out = new mi_lift{matinv::indicator_lift(m->m)};
  });
}

void mi_lift_free(mi_lift* l) { delete l; }

mi_status mi_lift_to_json(const mi_lift* l, char** out) {
  return guarded([&] {
    need(l, "lift");
    emit(matinv::lift_to_json(l->l), out);
  });
}

mi_status mi_tplv_json(const mi_lift* l, char** out) {
  return guarded([&] {
    need(l, "lift");
    auto r = matinv::is_tropical_pluecker(l->l);
    Json j;
    j["tropical_pluecker"] = r.ok;
    if (r.witness) {
      const auto& w = *r.witness;
      j["witness"] = {{"S", matinv::mask_to_json(w.s)},
                      {"ijkl", {w.i + 1, w.j + 1, w.k + 1, w.l + 1}}};
    }
    emit(j, out);
  });
}

mi_status mi_subdivide(const mi_lift* l, int verify_volume, mi_subdivision** out) {
  return guarded([&] {
    need(l, "lift");
    need(out, "out");
    matinv::SubdivisionOptions opts;
    opts.verify_volume = verify_volume != 0;
    *out = new mi_subdivision{matinv::regular_subdivision(l->l, opts)};
  });
}

void mi_subdivision_free(mi_subdivision* s) { delete s; }

mi_status mi_subdivision_json(const mi_subdivision* s, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    emit(matinv::subdivision_to_json(s->s), out);
  });
}

mi_status mi_subdivision_fvector_json(const mi_subdivision* s, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    Json j = Json::object();
    for (const auto& [c, f] : matinv::interior_f_vector(s->s)) j[std::to_string(c)] = f;
    emit(j, out);
  });
}

mi_status mi_subdivision_bound_json(const mi_subdivision* s, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    emit(matinv::bound_report_to_json(matinv::check_fvector_bound(s->s)), out);
  });
}

mi_status mi_subdivision_matroidal_json(const mi_subdivision* s, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    auto r = matinv::is_matroidal(s->s);
    Json j;
    j["matroidal"] = r.ok;
    if (r.witness) {
      Json cell = Json::array();
      for (matinv::Mask v : *r.witness) cell.push_back(matinv::mask_to_json(v));
      j["witness"] = cell;
    }
    emit(j, out);
  });
}

mi_status mi_subdivision_solve_g_json(const mi_subdivision* s, int target, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    int unknown = target == -2 ? matinv::largest_interior_face(s->s) : target;
    if (unknown < -1 || unknown >= static_cast<int>(s->s.interior_faces.size())) {
      matinv::fail(ErrorCode::kInvalidInput, "no interior face " + std::to_string(target));
    }
    auto r = matinv::solve_g_with_engine(s->s, unknown);
    Json j;
    j["face"] = r.face;
    j["matroid"] = matinv::matroid_to_json(r.matroid);
    j["g"] = matinv::poly_to_json(r.g);
    emit(j, out);
  });
}

mi_status mi_kclass_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    emit(matinv::class_to_json(matinv::localized_class(m->m)), out);
  });
}

mi_status mi_gkm_json(const char* class_json, char** out) {
  return guarded([&] {
    need(class_json, "class_json");
    auto k = matinv::class_from_json(matinv::parse_json(class_json));
    auto r = matinv::check_gkm(k);
    Json j;
    j["gkm"] = r.ok;
    j["degree_zero"] = matinv::is_degree_zero(k);
    if (r.witness) {
      j["witness"] = {{"B", matinv::mask_to_json(r.witness->b)},
                      {"i", r.witness->i + 1},
                      {"j", r.witness->j + 1}};
    }
    emit(j, out);
  });
}

mi_status mi_valuative_json(const mi_subdivision* s, char** out) {
  return guarded([&] {
    need(s, "subdivision");
    auto r = matinv::check_valuative(s->s, support_of(s->s));
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json x;
      x["I"] = matinv::mask_to_json(row.basis);
      x["holds"] = row.holds;
      if (!row.holds) {
        x["lhs"] = matinv::laurent_to_json(row.lhs);
        x["rhs"] = matinv::laurent_to_json(row.rhs);
      }
      rows.push_back(std::move(x));
    }
    emit({{"valuative", r.ok}, {"rows", rows}}, out);
  });
}

mi_status mi_brion_json(const mi_matroid* m, char** out) {
  return guarded([&] {
    need(m, "matroid");
    auto r = matinv::brion_check(m->m);
    emit({{"ok", r.ok}, {"lattice_points", r.lattice_points}, {"vertices", r.vertices}}, out);
  });
}

mi_status mi_corpus_verify_json(const char* dir, uint64_t seed, char** out) {
  return guarded([&] {
    need(dir, "dir");
    emit(matinv::report_to_json(matinv::corpus_verify(dir, seed)), out);
  });
}

}  // extern "C"
