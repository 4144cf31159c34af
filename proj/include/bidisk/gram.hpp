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

#include <utility>
#include <vector>

#include "bidisk/agler.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

struct JointEigen {
  cd l1, l2;
  int multiplicity = 1;
};

struct GramReport {
  int grid = 0;            // final quadrature size N
  double grid_change = 0;  // max Gram change at the last doubling
  int dim_G = 0;
  MatC Gamma;              // Gram matrix over monomials of bidegree <= (n,m)
  MatC T1, T2adj;          // on G in the monomial basis
  double commutator = 0;   // |T1 T2* - T2* T1|
  std::vector<JointEigen> joint;     // spectrum of (T1, T2*)
  std::vector<JointEigen> disk_zeros; // common zeros of flip2 pair in D^2
  double spectrum_mismatch = 0;      // max distance between matched points
  bool spectrum_match = false;
  int intersect_count = 0;           // N_{D^2}(q, q~)
  MatC K_E1;                         // reproducing kernel of E1 from the Gram data
  double e1_kernel_diff = -1;        // vs the canonical system; -1 when not compared
};

struct GramOptions {
  int start_grid = 256;
  int max_grid = 4096;
  double tol = 1e-9;
  Exec exec = Exec::Parallel;
};

GramReport gram_model(const Poly2<GQ> &p, const GramOptions &opt = {});
GramReport gram_model(const Poly2<cd> &p, const GramOptions &opt = {});

} // namespace bidisk
