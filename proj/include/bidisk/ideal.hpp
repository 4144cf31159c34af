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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bidisk/agler.hpp"
#include "bidisk/groebner.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/kernels.hpp"

namespace bidisk {

struct TorusPoint {
  cd z1, z2;
  bool exact = false;
  GQ e1, e2;
  int multiplicity = 0; // N(p, p~) at the point
  int order = 0;        // vanishing order M of p
};

// Exact ideal data: annihilating functionals of I_p in P_{n,m} and a Groebner basis.
struct ExactIdeal {
  bool ok = false;
  std::string note;
  QMat functionals;          // rows over monomials of bidegree <= (n,m)
  std::vector<SPoly> basis;  // reduced Groebner basis of I_p
};

struct IdealDescription {
  int n = 0, m = 0;
  std::vector<Poly2<cd>> generators; // entries of E1, F1, F2
  int torus_count = 0;
  std::vector<TorusPoint> torus_points;
  UPoly<cd> linfty_g; // in z2
  UPoly<cd> linfty_h; // in z1
  bool generator_orders_ok = false;
  AglerSystem system;
  mutable std::shared_ptr<ExactIdeal> exact_cache;
  int dim(int j, int k) const;
};

IdealDescription generators(const Poly2<GQ> &p);
IdealDescription generators(const Poly2<cd> &p);

// (j+1)(k+1) - N/2; refuses j < n-1 or k < m-1.
int dim_formula(int n, int m, int torus_count, int j, int k);
int dim_P(const Poly2<GQ> &p, int j, int k);
int dim_P(const Poly2<cd> &p, int j, int k);

enum class MemberMode { Exact, Numeric };

struct LocalOrderCheck {
  cd z1, z2;
  int M = 0;        // order of p
  int q_order = 0;  // order of q (-1 encodes q == 0)
  bool ok = false;
};

struct MembershipResult {
  bool member = false;
  std::string mode_used;             // "exact" or "numeric"
  std::string exact_note;            // why the exact route was not used, if it was not
  std::vector<LocalOrderCheck> local;
  // numeric route
  std::vector<std::pair<int, double>> ratios; // (grid, max |q|^2 / W)
  double growth_per_doubling = 0;
  bool bounded = false;
  // exact route
  int annihilator_rank = -1;
  std::string remainder;             // normal form of q
};

ExactIdeal exact_ideal(const IdealDescription &d, const Poly2<GQ> &p);

struct MembershipOptions {
  int start_grid = 64;
  int doublings = 4;
  double growth_tol = 0.05;
  Exec exec = Exec::Parallel;
};

MembershipResult membership(const IdealDescription &d, const Poly2<GQ> &p, const Poly2<GQ> &q, MemberMode mode,
                            const MembershipOptions &opt = {});
MembershipResult membership(const IdealDescription &d, const Poly2<cd> &p, const Poly2<cd> &q,
                            const MembershipOptions &opt = {});

// Torus-root factors of det E1(z2) and det E2(z1), normalized to value 1 at 0.
std::pair<UPoly<cd>, UPoly<cd>> linfty_multiplier(const AglerSystem &sys);

// Order of vanishing of q at a torus point (-1 when q == 0).
int local_order(const Poly2<cd> &q, cd z1, cd z2, double tol = 1e-9);
int local_order(const Poly2<GQ> &q, const GQ &z1, const GQ &z2);

} // namespace bidisk
