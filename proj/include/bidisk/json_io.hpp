/*
 * Copyright 2026 The bidisk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bidisk/agler.hpp"
#include "bidisk/boundary.hpp"
#include "bidisk/gram.hpp"
#include "bidisk/ideal.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/oracle.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polynomial read from the JSON format; pf is always populated.
struct PolyInput {
  bool exact = false;
  Poly2<GQ> pe;
  Poly2<cd> pf;
};

PolyInput parse_poly(const json &j);
PolyInput read_poly_file(const std::string &path);
json read_json_file(const std::string &path);

json to_json(const Poly2<GQ> &p);
json to_json(const Poly2<cd> &p);
json cplx(cd z);
json exact_str(const GQ &z);

json to_json(const SemistabilityReport &r);
json to_json(const IntersectionReport &r);
json to_json(const VecPoly &A);
json to_json(const AglerSystem &s);
json to_json(const Realization &r);
json to_json(const IdealDescription &d);
json to_json(const MembershipResult &r);
json to_json(const BoundaryAnalysis &a);
json to_json(const ConvergenceVerdict &v);
json to_json(const FourierReport &f);
json to_json(const ResultantMultiplicity &r);
json to_json(const GramReport &g);

// Indented key: value rendering of a report; coefficient arrays are omitted.
std::string render_text(const json &j);

} // namespace bidisk
