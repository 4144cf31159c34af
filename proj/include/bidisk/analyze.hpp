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

#include <string>
#include <vector>

#include "bidisk/json_io.hpp"

namespace bidisk {

// Every tunable default, overridable from a JSON config file.
struct Config {
  unsigned long seed = 1;
  StabilityOptions stability;
  AglerOptions agler;
  MembershipOptions membership;
  LadderOptions ladder;
  L2Options l2{128, 2048, 0.01, 0.1, Exec::Parallel};
  GramOptions gram;
  double identity_tol = 1e-8;
  double torus_identity_tol = 1e-8;
  double unitarity_tol = 1e-9;
  double transfer_tol = 1e-8;
  double nu_tol = 1e-8;
  int realization_points = 100;
};

Config load_config(const json &j);
json to_json(const Config &c);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnalysisBundle {
  json report;
  std::vector<Check> checks;
  bool any_fail() const;
};

// Runs every module on p. exact selects the exact pipeline (requires exact input).
AnalysisBundle analyze(const PolyInput &in, bool exact, const Config &cfg);

} // namespace bidisk
