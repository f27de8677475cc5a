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

#ifndef MATINV_JSON_IO_HPP_
#define MATINV_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "matinv/invariants.hpp"
#include "matinv/ktheory.hpp"
#include "matinv/matroid.hpp"
#include "matinv/polytope.hpp"

namespace matinv {

using Json = nlohmann::json;

// Throws kParse with the byte offset on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json matroid_to_json(const Matroid& m);
// Accepts a matroid ({"n","rank","bases"}), a matrix ({"field","rows"}) or
// a graph ({"vertices","edges"}).
Matroid matroid_from_json(const Json& j);

Json lift_to_json(const Lift& lift);
Lift lift_from_json(const Json& j);

Json poly_to_json(const GPolynomial& g);
GPolynomial poly_from_json(const Json& j);

Json tutte_to_json(const TuttePolynomial& t);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, int n);
Json class_to_json(const EquivariantClass& k);
EquivariantClass class_from_json(const Json& j);

Json mask_to_json(Mask m);
Mask mask_from_json(const Json& j, int n);

Json cell_to_json(const Cell& c);
Json subdivision_to_json(const Subdivision& s);
Json bound_report_to_json(const BoundReport& r);

}  // namespace matinv

#endif  // MATINV_JSON_IO_HPP_
