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

// Grid kernels. Every kernel has a serial reference path and an OpenMP path; both
// reduce per-row partial results in row order, so the outputs are identical.

#include <functional>
#include <vector>

#include "bidisk/linalg.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

enum class Exec { Serial, Parallel };

// Smallest |z2| root of z2 -> p(z1, z2) over z1 = r e^{it}; r from 0 to 1-collar.
struct SweepSample {
  cd z1;
  double min_root = 0; // +inf when the slice has no roots; 0 when the slice vanishes
};
std::vector<SweepSample> stability_sweep(const Poly2<cd> &p, int radii, int angles, double collar,
                                         Exec ex = Exec::Parallel);

// Integral of |q/p|^2 over T^2 (normalized measure): midpoint rule with N nodes in
// the z1 angle, exact integral over the z2 circle at each node. Needs p zero free on D^2.
double torus_l2(const Poly2<cd> &q, const Poly2<cd> &p, int N, Exec ex = Exec::Parallel);

// max over the half-offset N x N torus grid of num(z)/den(z).
double torus_ratio_max(const std::function<double(cd, cd)> &num,
                       const std::function<double(cd, cd)> &den, int N, Exec ex = Exec::Parallel);

// Fourier coefficients of w = 1/|p|^2 on T^2 for |j| <= J, |k| <= K (N x N rule).
// Result (2J+1) x (2K+1), entry (j+J, k+K).
MatC weight_fourier(const Poly2<cd> &p, int J, int K, int N, Exec ex = Exec::Parallel);

// Samples of f on the half-offset N x N torus grid (row i: z1 angle, column j: z2 angle).
MatC torus_samples(const std::function<cd(cd, cd)> &f, int N, Exec ex = Exec::Parallel);

} // namespace bidisk
