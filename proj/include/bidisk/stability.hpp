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

#include <vector>

#include "bidisk/kernels.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

struct SemistabilityReport {
  bool gcd_trivial = false;
  // "exact" when computed by the exact gcd; "bezout" when inferred for FLOAT input
  // from a finite common-zero count of (p, reflect(p)).
  std::string gcd_method = "exact";
  bool zero_free_verified = false;
  int radii = 64, angles = 512;
  double collar = 1e-6;
  // smallest root modulus over all sampled slices (both variables)
  double min_modulus_observed = 0;
  std::vector<std::pair<cd, cd>> witnesses; // (z1, z2) with a slice root near or inside the disk
  bool semistable() const { return gcd_trivial && zero_free_verified; }
};

struct StabilityOptions {
  int radii = 64;
  int angles = 512;
  double collar = 1e-6;
  Exec exec = Exec::Parallel;
};

// Sampled certificate that p has no zeros in the open bidisk (never a proof).
SemistabilityReport zero_free_sweep(const Poly2<cd> &p, const StabilityOptions &opt = {});
SemistabilityReport check_semistable(const Poly2<GQ> &p, const StabilityOptions &opt = {});
SemistabilityReport check_semistable(const Poly2<cd> &p, const StabilityOptions &opt = {});

} // namespace bidisk
