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

#include <optional>
#include <string>
#include <vector>

#include "bidisk/poly.hpp"

namespace bidisk {

// Approach region AR_c at a torus point: zeta in RHP^d with |zeta_j| and
// Re zeta_j pairwise comparable within the factor c.
struct ApproachRegion {
  double c = 2.0;
  std::vector<cd> base;
  int d = 2;
  bool contains(const std::vector<cd> &zeta) const;
};

template <class S> int vanishing_order(const Poly2<S> &p, const std::vector<S> &pt);
template <class S> int vanishing_order(const MPoly<S> &p, const std::vector<S> &pt);

struct BottomForm {
  int M = 0;
  HForm<cd> form;
  std::string text;
  bool zero_free = false;   // verdict
  double min_scaled = 0;    // min |P_M(zeta)| / (|P_M| |zeta|^M) over the samples
  int samples = 0;
};

template <class S> BottomForm bottom_form_check(const Poly2<S> &p, const std::vector<S> &pt, unsigned seed = 3);
template <class S> BottomForm bottom_form_check(const MPoly<S> &p, const std::vector<S> &pt, unsigned seed = 3);

template <class S> bool nontangential_bounded(const Poly2<S> &q, const Poly2<S> &p, const std::vector<S> &pt);

struct NTLimit {
  bool bounded = false;
  int M = 0, q_order = 0;
  std::optional<cd> value;
  std::string text;
};

// bounded == false when q vanishes to lower order than p.
template <class S> NTLimit nontangential_limit(const Poly2<S> &q, const Poly2<S> &p, const std::vector<S> &pt);

struct RemainderFit {
  int rays = 0;
  std::vector<double> radii;
  double min_exponent = 0; // worst fitted exponent over the rays
  double max_residual = 0;
};

struct BoundaryAnalysis {
  cd z1, z2;
  int M = 0;
  std::string bottom_form;
  bool bottom_ok = false;
  std::optional<cd> nu;
  std::string nu_text;
  double nu_modulus_error = 0;
  double phase_residual = 0; // max |Im| of nu P_M after phase normalization
  int k = -1;                // -1 when nu does not exist
  int k_max = 0;
  bool next_fails = false;   // division for F_{k+1} failed (as opposed to reaching k_max)
  std::vector<HForm<cd>> terms;
  std::vector<std::string> term_text;
  int multiplicity_floor = 0;
  int intersection = 0;      // N at the point from intersect
  bool floor_ok = false;
  RemainderFit fit;
  bool fit_ok = false;
};

struct LadderOptions {
  int k_max = -1;            // -1 selects 2nm
  double aperture = 2.0;
  int rays = 20;
  int r_lo = 4, r_hi = 12;   // radii 2^-r_lo .. 2^-r_hi
  unsigned seed = 5;
  double float_tol = 1e-9;
  bool fit = true;
};

template <class S>
BoundaryAnalysis regularity_ladder(const Poly2<S> &p, const std::vector<S> &pt, const LadderOptions &opt = {});

// Parses "a,b" with Gaussian rational entries, e.g. "3/5+4/5i,1".
std::vector<GQ> parse_point(const std::string &s);

} // namespace bidisk
