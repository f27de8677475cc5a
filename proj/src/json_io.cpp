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

#include "matinv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "matinv/error.hpp"

namespace matinv {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::kParse, std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorCode::kParse, "rational values must be strings like \"a/b\" or integers");
}

std::vector<std::vector<Rational>> rational_rows(const Json& rows) {
  if (!rows.is_array() || rows.empty()) fail(ErrorCode::kParse, "\"rows\" must be a nonempty array");
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) fail(ErrorCode::kParse, "each row must be an array");
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(as_rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json mask_to_json(Mask m) {
  Json a = Json::array();
  for (int e : elements(m)) a.push_back(e + 1);
  return a;
}

Mask mask_from_json(const Json& j, int n) {
  if (!j.is_array()) fail(ErrorCode::kParse, "subsets must be arrays of 1-indexed elements");
  Mask m = 0;
  for (const auto& x : j) {
    int e = as_int(x, "element");
    if (e < 1 || e > n) {
      fail(ErrorCode::kInvalidInput, "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    if (has(m, e - 1)) fail(ErrorCode::kInvalidInput, "repeated element " + std::to_string(e));
    m |= bit(e - 1);
  }
  return m;
}

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Mask b : m.bases()) bases.push_back(mask_to_json(b));
  return Json{{"n", m.n()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "expected a JSON object");
  if (j.contains("bases")) {
    const int n = as_int(field(j, "n"), "n");
    const int rank = as_int(field(j, "rank"), "rank");
    if (n < 0 || n > kMaxGroundSet) {
      fail(ErrorCode::kInvalidInput, "n must lie in 0..16");
    }
    std::vector<Mask> bases;
    const Json& list = field(j, "bases");
    if (!list.is_array()) fail(ErrorCode::kParse, "\"bases\" must be an array");
    for (const auto& b : list) bases.push_back(mask_from_json(b, n));
    return Matroid::from_bases(n, rank, std::move(bases));
  }
  if (j.contains("rows")) {
    std::string f = j.contains("field") ? field(j, "field").get<std::string>() : "Q";
    auto rows = rational_rows(field(j, "rows"));
    if (f == "Q") return from_matrix(rows);
    if (f.size() >= 5 && f.rfind("GF(", 0) == 0 && f.back() == ')') {
      int p = std::stoi(f.substr(3, f.size() - 4));
      std::vector<std::vector<std::int64_t>> ints;
      for (const auto& r : rows) {
        std::vector<std::int64_t> row;
        for (const auto& x : r) {
          if (x.get_den() != 1) fail(ErrorCode::kInvalidInput, "finite field entries must be integers");
          row.push_back(x.get_num().get_si());
        }
        ints.push_back(std::move(row));
      }
      return from_matrix_mod_p(ints, p);
    }
    fail(ErrorCode::kInvalidInput, "unknown field \"" + f + "\"");
  }
  if (j.contains("edges")) {
    std::vector<std::pair<int, int>> edges;
    const int vertices = j.contains("vertices") ? as_int(j.at("vertices"), "vertices") : -1;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::kParse, "edges must be vertex pairs");
      int u = as_int(e[0], "vertex"), v = as_int(e[1], "vertex");
      if (vertices >= 0 && (u < 1 || v < 1 || u > vertices || v > vertices)) {
        fail(ErrorCode::kInvalidInput, "edge endpoint outside 1.." + std::to_string(vertices));
      }
      edges.emplace_back(u, v);
    }
    return from_graph(edges);
  }
  fail(ErrorCode::kParse, "expected a matroid, matrix or graph object");
}

Json lift_to_json(const Lift& lift) {
  Json values = Json::array();
  for (const auto& [s, p] : lift.values) {
    values.push_back(Json{{"I", mask_to_json(s)}, {"p", format_rational(p)}});
  }
  Json j{{"n", lift.n}, {"d", lift.d}, {"values", values}};
  if (lift.support) j["support"] = matroid_to_json(*lift.support);
  return j;
}

Lift lift_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const int d = as_int(field(j, "d"), "d");
  if (n < 1 || n > kMaxGroundSet) fail(ErrorCode::kInvalidInput, "n must lie in 1..16");
  std::map<Mask, Rational> values;
  for (const auto& v : field(j, "values")) {
    Mask s = mask_from_json(field(v, "I"), n);
    if (!values.emplace(s, as_rational(field(v, "p"))).second) {
      fail(ErrorCode::kInvalidInput, "duplicate lift value for " + mask_to_string(s));
    }
  }
  std::optional<Matroid> support;
  if (j.contains("support")) support = matroid_from_json(j.at("support"));
  return make_lift(n, d, std::move(values), std::move(support));
}

Json poly_to_json(const GPolynomial& g) {
  Json t = Json::array();
  for (int i = 0; i <= g.degree(); ++i) {
    Integer c = g.coeff(i);
    if (c == 0) continue;
    Json coef = c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str());
    t.push_back(Json::array({std::to_string(i), coef}));
  }
  return Json{{"t", t}};
}

GPolynomial poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& term : field(j, "t")) {
    if (!term.is_array() || term.size() != 2) fail(ErrorCode::kParse, "terms are [exponent, coefficient]");
    int e = term[0].is_string() ? std::stoi(term[0].get<std::string>()) : as_int(term[0], "exponent");
    if (e < 0) fail(ErrorCode::kInvalidInput, "negative exponent");
    Integer v = term[1].is_string() ? Integer(term[1].get<std::string>()) : Integer(term[1].get<long>());
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, 0);
    c[e] += v;
  }
  return GPolynomial(std::move(c));
}

Json tutte_to_json(const TuttePolynomial& t) {
  Json xy = Json::array();
  for (const auto& [ij, c] : t) {
    Json coef = c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str());
    xy.push_back(Json::array({Json::array({ij.first, ij.second}), coef}));
  }
  return Json{{"xy", xy}};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) {
    terms.push_back(Json{{"exp", a}, {"c", format_rational(c)}});
  }
  return terms;
}

LaurentPoly laurent_from_json(const Json& j, int n) {
  LaurentPoly p(n);
  if (!j.is_array()) fail(ErrorCode::kParse, "\"terms\" must be an array");
  for (const auto& t : j) {
    Exponent a = field(t, "exp").get<Exponent>();
    if (static_cast<int>(a.size()) != n) fail(ErrorCode::kInvalidInput, "exponent has the wrong length");
    p.add_term(a, as_rational(field(t, "c")));
  }
  return p;
}

Json class_to_json(const EquivariantClass& k) {
  Json fi = Json::array();
  for (const auto& [s, p] : k.f) {
    fi.push_back(Json{{"I", mask_to_json(s)}, {"terms", laurent_to_json(p)}});
  }
  return Json{{"n", k.n}, {"d", k.d}, {"fI", fi}};
}

EquivariantClass class_from_json(const Json& j) {
  EquivariantClass k;
  k.n = as_int(field(j, "n"), "n");
  k.d = as_int(field(j, "d"), "d");
  if (k.n < 1 || k.n > kMaxGroundSet) fail(ErrorCode::kInvalidInput, "n must lie in 1..16");
  for (const auto& e : field(j, "fI")) {
    Mask s = mask_from_json(field(e, "I"), k.n);
    if (popcount(s) != k.d) fail(ErrorCode::kInvalidInput, "class index is not a d-subset");
    LaurentPoly p = laurent_from_json(field(e, "terms"), k.n);
    if (!p.is_zero()) k.f[s] = p;
  }
  return k;
}

Json cell_to_json(const Cell& c) {
  Json verts = Json::array();
  for (Mask v : c.vertices) verts.push_back(mask_to_json(v));
  Json j{{"vertices", verts}, {"dim", c.dim}, {"matroidal", c.matroid.has_value()}};
  if (c.matroid) j["components"] = c.components;
  return j;
}

Json subdivision_to_json(const Subdivision& s) {
  Json facets = Json::array();
  for (const auto& c : s.facets) facets.push_back(cell_to_json(c));
  Json interior = Json::array();
  for (const auto& c : s.interior_faces) interior.push_back(cell_to_json(c));
  Json fv = Json::object();
  for (const auto& [c, count] : s.f_vector) fv[std::to_string(c)] = count;
  Json j{{"n", s.n}, {"d", s.d}, {"facets", facets}, {"interior_faces", interior},
         {"f_vector", fv}};
  if (s.volume_checked) {
    Json vols = Json::array();
    for (const auto& v : s.facet_det_sums) vols.push_back(v.get_str());
    j["volume"] = Json{{"facet_det_sums", vols}, {"support_det_sum", s.support_det_sum.get_str()},
                       {"certified", true}};
  }
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"c", row.c}, {"f", row.f}, {"bound", row.bound.get_si()}, {"ok", row.ok}});
  }
  return Json{{"rows", rows}, {"all_ok", r.all_ok}, {"all_series_parallel", r.all_series_parallel},
              {"equality", r.equality}};
}

}  // namespace matinv
