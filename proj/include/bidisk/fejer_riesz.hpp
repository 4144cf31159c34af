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
#include <utility>
#include <vector>

#include "bidisk/linalg.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

// Matrix Laurent polynomial sum_{k=-d}^{d} c[k+d] z^k.
struct LaurentMat {
  int N = 0, d = 0;
  std::vector<MatC> c;
  LaurentMat() = default;
  LaurentMat(int N_, int d_) : N(N_), d(d_), c(2 * d_ + 1, MatC::Zero(N_, N_)) {}
  MatC coef(int k) const { return (k >= -d && k <= d) ? c[k + d] : MatC::Zero(N, N); }
  MatC eval(cd z) const;
};

struct ExactLaurent {
  int N = 0, d = 0;
  std::vector<QMat> c;
  LaurentMat to_float() const;
};

// Matrix polynomial sum_k c[k] z^k.
struct MatPoly {
  int rows = 0, cols = 0;
  std::vector<MatC> c;
  MatPoly() = default;
  MatPoly(int r, int cl, int deg) : rows(r), cols(cl), c(deg + 1, MatC::Zero(r, cl)) {}
  int degree() const { return int(c.size()) - 1; }
  MatC eval(cd z) const;
};
MatPoly operator*(const MatPoly &a, const MatPoly &b);
MatPoly operator*(const MatC &a, const MatPoly &b);

// T1(z2) = R* R - S* S built from the z1-coefficients of p.
ExactLaurent build_T1(const Poly2<GQ> &p);
LaurentMat build_T1(const Poly2<cd> &p);

// Roots of z^{Nd} det T(z) with multiplicities (zero roots omitted).
std::vector<std::pair<cd, int>> det_roots(const ExactLaurent &T);
std::vector<std::pair<cd, int>> det_roots(const LaurentMat &T, double cluster_tol = 1e-7);

struct FROptions {
  double tol = 1e-6;
  int samples = 1024;
  double torus_tol = 1e-6;
};

struct FRResult {
  MatPoly E;
  double residual = 0;
  std::string method; // "peel" or "ladder"
  int peels = 0;
};

// T = E* E on the circle with det E zero-free on the open disk.
FRResult fejer_riesz(const LaurentMat &T, const FROptions &opt = {});
FRResult fejer_riesz(const LaurentMat &T, const std::vector<std::pair<cd, int>> &roots,
                     const FROptions &opt = {});
FRResult fejer_riesz(const ExactLaurent &T, const FROptions &opt = {});

double factor_residual(const LaurentMat &T, const MatPoly &E, int samples = 1024);

// Canonical representative of {U C : U unitary}: R from C = QR with a
// nonnegative real pivot diagonal.
MatC canonicalize_rows(const MatC &C, double tol = 1e-12);

} // namespace bidisk
