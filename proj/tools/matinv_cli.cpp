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

// matinv command-line front end. Talks to the library only through matinv.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matinv/matinv.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_n = 16;
  std::string corpus = MATINV_DEFAULT_CORPUS;
};

// Thrown to unwind out of a subcommand with a finished exit code.
struct Finished {
  int code;
};

// Failures that reflect the mathematics rather than the request.
bool is_semantic(mi_status s) {
  switch (s) {
    case MI_ERR_EXCHANGE_AXIOM_VIOLATION:
    case MI_ERR_EMPTY_BASES:
    case MI_ERR_VOLUME_CERTIFICATE_FAILURE:
    case MI_ERR_NOT_MATROIDAL:
    case MI_ERR_DIM_COMPONENT_MISMATCH:
    case MI_ERR_FLAT_COUNT_MISMATCH:
    case MI_ERR_INCONSISTENT_SUM:
    case MI_ERR_NOT_LAURENT:
    case MI_ERR_NOT_COMPUTABLE:
    case MI_ERR_INTERNAL:
      return true;
    default:
      return false;
  }
}

// Coefficients arrive as numbers, or as strings when they overflow.
std::string num_text(const Json& c) { return c.is_string() ? c.get<std::string>() : c.dump(); }

std::string poly_text(const Json& p) {
  std::string out;
  for (const auto& term : p.at("t")) {
    int k = std::stoi(term[0].get<std::string>());
    std::string c = num_text(term[1]);
    if (!out.empty() && c[0] != '-') out += "+";
    if (k == 0) {
      out += c;
      continue;
    }
    if (c == "-1") out += "-";
    else if (c != "1") out += c;
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string set_text(const Json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].get<int>());
  }
  return out + "}";
}

void text_lines(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it->is_object() && it->contains("t") && it->size() == 1) {
        os << key << ": " << poly_text(*it) << "\n";
      } else {
        text_lines(*it, key, os);
      }
    }
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) &&
             !(j[0].is_array() && !j[0].empty() && j[0][0].is_number())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      text_lines(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else if (j.is_array() && !j.empty() && j[0].is_array()) {
    os << prefix << ":";
    for (const auto& s : j) os << " " << set_text(s);
    os << "\n";
  } else if (j.is_array() && (j.empty() || j[0].is_number())) {
    os << prefix << ": " << set_text(j) << "\n";
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

class Runner {
 public:
  explicit Runner(const Options& o) : opt_(o) {}

  void print(const Json& j) const {
    if (opt_.format == "text") {
      text_lines(j, "", std::cout);
    } else {
      std::cout << j.dump() << "\n";
    }
  }

  [[noreturn]] void die(mi_status s) const {
    Json j{{"error", mi_status_name(s)}, {"message", mi_last_error()}};
    std::cerr << "matinv: " << mi_status_name(s) << ": " << mi_last_error() << "\n";
    print(j);
    throw Finished{is_semantic(s) ? kCheckFailed : kUsage};
  }

  [[noreturn]] void usage(const std::string& msg) const {
    std::cerr << "matinv: " << msg << "\n";
    print(Json{{"error", "Usage"}, {"message", msg}});
    throw Finished{kUsage};
  }

  void ok(mi_status s) const {
    if (s != MI_OK) die(s);
  }

  // Takes ownership of a library string.
  Json take(char* s) const {
    std::unique_ptr<char, void (*)(char*)> guard(s, mi_string_free);
    return Json::parse(s);
  }

  std::string read(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  using MatroidPtr = std::unique_ptr<mi_matroid, void (*)(mi_matroid*)>;
  using LiftPtr = std::unique_ptr<mi_lift, void (*)(mi_lift*)>;
  using SubPtr = std::unique_ptr<mi_subdivision, void (*)(mi_subdivision*)>;

  MatroidPtr own(mi_matroid* m) const { return MatroidPtr(m, mi_matroid_free); }

  MatroidPtr matroid(const std::string& path) const {
    mi_matroid* m = nullptr;
    ok(mi_matroid_from_json(read(path).c_str(), &m));
    MatroidPtr p = own(m);
    cap(mi_matroid_n(m));
    return p;
  }

  LiftPtr lift(const std::string& path) const {
    mi_lift* l = nullptr;
    ok(mi_lift_from_json(read(path).c_str(), &l));
    LiftPtr p(l, mi_lift_free);
    char* s = nullptr;
    ok(mi_lift_to_json(l, &s));
    cap(take(s).at("n").get<int>());
    return p;
  }

  void cap(int n) const {
    if (n > opt_.max_n) {
      usage("ground set of size " + std::to_string(n) + " exceeds --max-n " +
            std::to_string(opt_.max_n));
    }
  }

  Json matroid_json(const mi_matroid* m) const {
    char* s = nullptr;
    ok(mi_matroid_to_json(m, &s));
    return take(s);
  }

  int check(const std::string& path) const {
    char* s = nullptr;
    ok(mi_check_json(read(path).c_str(), &s));
    Json j = take(s);
    if (j.contains("n")) cap(j["n"].get<int>());
    print(j);
    return j["valid"].get<bool>() ? kOk : kCheckFailed;
  }

  int unary(const std::string& path, mi_status (*op)(const mi_matroid*, mi_matroid**)) const {
    auto m = matroid(path);
    mi_matroid* r = nullptr;
    ok(op(m.get(), &r));
    auto rp = own(r);
    print(matroid_json(r));
    return kOk;
  }

  int elementwise(const std::string& path, int e,
                  mi_status (*op)(const mi_matroid*, int, mi_matroid**)) const {
    auto m = matroid(path);
    mi_matroid* r = nullptr;
    ok(op(m.get(), e, &r));
    auto rp = own(r);
    print(matroid_json(r));
    return kOk;
  }

  int dsum(const std::string& a, const std::string& b) const {
    auto ma = matroid(a);
    auto mb = matroid(b);
    mi_matroid* r = nullptr;
    ok(mi_matroid_direct_sum(ma.get(), mb.get(), &r));
    auto rp = own(r);
    print(matroid_json(r));
    return kOk;
  }

  int twosum(const std::string& a, int e1, const std::string& b, int e2) const {
    auto ma = matroid(a);
    auto mb = matroid(b);
    mi_matroid* r = nullptr;
    ok(mi_matroid_two_sum(ma.get(), e1, mb.get(), e2, &r));
    auto rp = own(r);
    print(matroid_json(r));
    return kOk;
  }

  int tutte(const std::string& path) const {
    auto m = matroid(path);
    char* s = nullptr;
    ok(mi_tutte_json(m.get(), &s));
    Json j = take(s);
    if (opt_.format == "text") {
      std::string out;
      for (const auto& term : j.at("xy")) {
        int i = term[0][0].get<int>(), k = term[0][1].get<int>();
        std::string c = num_text(term[1]);
        if (!out.empty()) out += "+";
        std::string mono;
        if (i) mono += i == 1 ? "x" : "x^" + std::to_string(i);
        if (k) mono += k == 1 ? "y" : "y^" + std::to_string(k);
        out += mono.empty() ? c : (c == "1" ? mono : c + mono);
      }
      std::cout << (out.empty() ? "0" : out) << "\n";
    } else {
      print(j);
    }
    return kOk;
  }

  int beta(const std::string& path) const {
    auto m = matroid(path);
    std::int64_t b = 0;
    ok(mi_beta(m.get(), &b));
    print(Json{{"beta", b}});
    return kOk;
  }

  int g(const std::string& path, bool derivation) const {
    auto m = matroid(path);
    char* s = nullptr;
    ok(mi_g_json(m.get(), &s));
    Json j = take(s);
    Json out{{"g", j["g"]}};
    if (derivation) out["derivation"] = j["derivation"];
    print(out);
    return kOk;
  }

  int tplv(const std::string& path) const {
    auto l = lift(path);
    char* s = nullptr;
    ok(mi_tplv_json(l.get(), &s));
    Json j = take(s);
    print(j);
    return j["tropical_pluecker"].get<bool>() ? kOk : kCheckFailed;
  }

  int subdivide(const std::string& path, bool fvector, bool bound, bool solve, int target,
                bool volume) const {
    auto l = lift(path);
    mi_subdivision* raw = nullptr;
    ok(mi_subdivide(l.get(), volume ? 1 : 0, &raw));
    SubPtr sub(raw, mi_subdivision_free);
    char* s = nullptr;
    ok(mi_subdivision_json(raw, &s));
    Json out{{"subdivision", take(s)}};
    int code = kOk;
    ok(mi_subdivision_matroidal_json(raw, &s));
    Json mat = take(s);
    out["matroidal"] = mat["matroidal"];
    if (mat.contains("witness")) out["witness"] = mat["witness"];
    if (!mat["matroidal"].get<bool>()) {
      print(out);
      return kCheckFailed;
    }
    if (fvector) {
      ok(mi_subdivision_fvector_json(raw, &s));
      out["f_vector"] = take(s);
    }
    if (bound) {
      ok(mi_subdivision_bound_json(raw, &s));
      Json b = take(s);
      if (!b["all_ok"].get<bool>()) code = kCheckFailed;
      out["bound"] = std::move(b);
    }
    if (solve) {
      ok(mi_subdivision_solve_g_json(raw, target, &s));
      out["solved"] = take(s);
    }
    print(out);
    return code;
  }

  int kclass(const std::string& path, bool gkm) const {
    auto m = matroid(path);
    char* s = nullptr;
    ok(mi_kclass_json(m.get(), &s));
    std::unique_ptr<char, void (*)(char*)> raw(s, mi_string_free);
    Json out{{"class", Json::parse(s)}};
    int code = kOk;
    if (gkm) {
      char* r = nullptr;
      ok(mi_gkm_json(s, &r));
      Json v = take(r);
      if (!v["gkm"].get<bool>() || !v["degree_zero"].get<bool>()) code = kCheckFailed;
      out["gkm"] = std::move(v);
    }
    print(out);
    return code;
  }

  int valuative(const std::string& path) const {
    auto l = lift(path);
    mi_subdivision* raw = nullptr;
    ok(mi_subdivide(l.get(), 1, &raw));
    SubPtr sub(raw, mi_subdivision_free);
    char* s = nullptr;
    ok(mi_valuative_json(raw, &s));
    Json j = take(s);
    print(j);
    return j["valuative"].get<bool>() ? kOk : kCheckFailed;
  }

  int corpus() const {
    char* s = nullptr;
    ok(mi_corpus_verify_json(opt_.corpus.c_str(), opt_.seed, &s));
    Json j = take(s);
    j["seed"] = opt_.seed;
    if (opt_.format == "text") {
      for (const auto& c : j["checks"]) {
        std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (!c["passed"].get<bool>()) std::cout << "  " << c["detail"].get<std::string>();
        std::cout << "\n";
      }
      std::cout << j["total"].get<int>() - j["failed"].get<int>() << "/" << j["total"].get<int>()
                << " passed\n";
    } else {
      print(j);
    }
    return j["ok"].get<bool>() ? kOk : kCheckFailed;
  }

 private:
  Options opt_;
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Matroid invariants, matroidal subdivisions and K-classes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--max-n", opt.max_n, "Refuse ground sets larger than this")
      ->check(CLI::Range(0, 16));
  app.add_option("--corpus", opt.corpus, "Corpus directory");

  std::function<int(Runner&)> action;
  std::string file, file2;
  int e1 = 0, e2 = 0;

  auto* check = app.add_subcommand("check", "Validate a matroid description");
  check->add_option("matroid", file)->required();
  check->callback([&] { action = [&](Runner& r) { return r.check(file); }; });

  auto* dual = app.add_subcommand("dual", "Dual matroid");
  dual->add_option("matroid", file)->required();
  dual->callback([&] { action = [&](Runner& r) { return r.unary(file, mi_matroid_dual); }; });

  struct ElementOp {
    const char* name;
    const char* help;
    mi_status (*op)(const mi_matroid*, int, mi_matroid**);
  };
  const ElementOp element_ops[] = {
      {"delete", "Delete an element", mi_matroid_delete},
      {"contract", "Contract an element", mi_matroid_contract},
      {"sext", "Series extension at an element", mi_matroid_series_ext},
      {"pext", "Parallel extension at an element", mi_matroid_parallel_ext},
  };
  for (const auto& eo : element_ops) {
    auto* sc = app.add_subcommand(eo.name, eo.help);
    sc->add_option("matroid", file)->required();
    sc->add_option("element", e1, "1-indexed element")->required();
    auto op = eo.op;
    sc->callback([&, op] { action = [&, op](Runner& r) { return r.elementwise(file, e1, op); }; });
  }

  auto* dsum = app.add_subcommand("dsum", "Direct sum");
  dsum->add_option("first", file)->required();
  dsum->add_option("second", file2)->required();
  dsum->callback([&] { action = [&](Runner& r) { return r.dsum(file, file2); }; });

  auto* twosum = app.add_subcommand("twosum", "2-sum along two basepoints");
  twosum->add_option("first", file)->required();
  twosum->add_option("e1", e1)->required();
  twosum->add_option("second", file2)->required();
  twosum->add_option("e2", e2)->required();
  twosum->callback([&] { action = [&](Runner& r) { return r.twosum(file, e1, file2, e2); }; });

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  tutte->add_option("matroid", file)->required();
  tutte->callback([&] { action = [&](Runner& r) { return r.tutte(file); }; });

  auto* beta = app.add_subcommand("beta", "Beta invariant");
  beta->add_option("matroid", file)->required();
  beta->callback([&] { action = [&](Runner& r) { return r.beta(file); }; });

  bool derivation = false;
  auto* g = app.add_subcommand("g", "g-invariant");
  g->add_option("matroid", file)->required();
  g->add_flag("--derivation", derivation, "Also print how the value was obtained");
  g->callback([&] { action = [&](Runner& r) { return r.g(file, derivation); }; });

  auto* tplv = app.add_subcommand("tplv", "Tropical Pluecker vectors");
  tplv->require_subcommand(1);
  auto* tplv_check = tplv->add_subcommand("check", "Check the three-term relations");
  tplv_check->add_option("lift", file)->required();
  tplv_check->callback([&] { action = [&](Runner& r) { return r.tplv(file); }; });

  bool fvector = false, bound = false, solve = false, no_volume = false;
  int target = -2;
  auto* subdivide = app.add_subcommand("subdivide", "Regular subdivision induced by a lift");
  subdivide->add_option("lift", file)->required();
  subdivide->add_flag("--fvector", fvector, "Interior f-vector with component checks");
  subdivide->add_flag("--verify-bound", bound, "Compare the f-vector with its upper bound");
  subdivide->add_flag("--solve-g", solve, "Solve for one unknown g by additivity");
  subdivide->add_option("--target", target,
                        "Face left unknown by --solve-g: index, -1 whole polytope, -2 largest");
  subdivide->add_flag("--no-volume", no_volume, "Skip the volume certificate");
  subdivide->callback([&] {
    action = [&](Runner& r) { return r.subdivide(file, fvector, bound, solve, target, !no_volume); };
  });

  bool gkm = false;
  auto* kclass = app.add_subcommand("kclass", "Localized equivariant K-class");
  kclass->add_option("matroid", file)->required();
  kclass->add_flag("--verify-gkm", gkm, "Check the GKM congruences");
  kclass->callback([&] { action = [&](Runner& r) { return r.kclass(file, gkm); }; });

  auto* valuative = app.add_subcommand("valuative", "Fixed-point valuativity check");
  valuative->add_option("lift", file)->required();
  valuative->callback([&] { action = [&](Runner& r) { return r.valuative(file); }; });

  auto* corpus = app.add_subcommand("corpus", "Golden corpus");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "Run the golden and identity checks");
  verify->callback([&] { action = [&](Runner& r) { return r.corpus(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (!action) return kUsage;
  Runner runner(opt);
  try {
    return action(runner);
  } catch (const Finished& f) {
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "matinv: unexpected library output: " << e.what() << "\n";
    return kCheckFailed;
  }
}
