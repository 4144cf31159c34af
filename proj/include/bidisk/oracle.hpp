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

#include "bidisk/kernels.hpp"
#include "bidisk/linalg.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

enum class Verdict { Convergent, Divergent, Inconclusive };
const char *verdict_name(Verdict v);

struct ConvergenceVerdict {
  std::vector<std::pair<int, double>> estimates; // (grid, integral of |q/p|^2)
  Verdict verdict = Verdict::Inconclusive;
  double growth_exponent = 0; // slope of log estimate vs log grid over the last doublings
  double last_change = 0;     // relative change over the last two doublings
};

struct L2Options {
  int start_grid = 128;
  int max_grid = 2048;
  double converge_tol = 0.01;
  double diverge_slope = 0.1;
  Exec exec = Exec::Parallel;
};

ConvergenceVerdict l2_quadrature(const Poly2<cd> &q, const Poly2<cd> &p, const L2Options &opt = {});

struct FourierReport {
  int J = 0, K = 0, grid = 0;
  MatC coef;                  // (J+1) x (K+1), entry (j,k) multiplies z1^j z2^k
  std::vector<int> boxes;     // nested square boxes [0,s]^2
  std::vector<double> l1, l2; // partial sums of |a| and |a|^2
  std::vector<double> weighted; // partial sums of (j+1)^2 (k+1)^2 |a|^2
  double l1_growth = 0, l2_growth = 0, weighted_growth = 0; // last increment / previous increment
  bool l1_plateau = false, l2_plateau = false, weighted_plateau = false;
};

struct FourierOptions {
  int grid = 0; // 0 selects the smallest power of two >= max(64, 4 max(J,K))
  double plateau_ratio = 0.5;
  double plateau_rel = 0.01;
  Exec exec = Exec::Parallel;
};

FourierReport fourier_report(const Poly2<cd> &q, const Poly2<cd> &p, int J, int K, const FourierOptions &opt = {});

// Taylor coefficients of q/p at the origin up to (J,K), exact. Needs p(0,0) != 0.
std::vector<std::vector<GQ>> taylor_coefficients(const Poly2<GQ> &q, const Poly2<GQ> &p, int J, int K);

struct ResultantMultiplicity {
  int multiplicity = 0;
  unsigned long seed = 0;
  std::vector<std::pair<GQ, int>> trials; // (shear, order)
  std::string route;                      // "translate" or "squarefree"
};

// Order of Res_{v}(p1, p2) at the sheared image of the point; the shear is
// (z1, z2) = (u + s v, v) with s a seeded Gaussian integer, 1 <= |s| <= 7.
ResultantMultiplicity resultant_multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2,
                                             unsigned long seed = 1);
ResultantMultiplicity resultant_multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, cd l1, cd l2,
                                             unsigned long seed = 1);

// Univariate resultant polynomial of the sheared pair (exposed for tests).
UPoly<GQ> sheared_resultant(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &s);

} // namespace bidisk
