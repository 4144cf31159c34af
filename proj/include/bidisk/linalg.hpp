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

#include <Eigen/Dense>

#include "bidisk/poly.hpp"

namespace bidisk {

using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

// Dense exact matrix over Q(i), row-major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<GQ> v;
  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), v(size_t(r) * c) {}
  static QMat identity(int n);
  GQ &operator()(int i, int j) { return v[size_t(i) * cols + j]; }
  const GQ &operator()(int i, int j) const { return v[size_t(i) * cols + j]; }
  MatC to_float() const;
};

QMat operator*(const QMat &a, const QMat &b);
QMat operator+(const QMat &a, const QMat &b);
QMat operator-(const QMat &a, const QMat &b);
QMat scaled(const QMat &a, const GQ &s);
QMat shifted(const QMat &a, const GQ &s); // a - s I
QMat power(const QMat &a, int e);
QMat vstack(const QMat &a, const QMat &b);
int rank(QMat a);
// Basis of the right kernel, as columns.
QMat kernel(QMat a);
// Characteristic polynomial det(tI - A) (Berkowitz, division free).
UPoly<GQ> charpoly(const QMat &a);
// p(A)
QMat poly_eval(const UPoly<GQ> &p, const QMat &a);
GQ trace(const QMat &a);

// --------------------------------------------------------------- float helpers

// All roots (with repetition) of a univariate polynomial via companion eigenvalues.
std::vector<cd> roots(const UPoly<cd> &p);
// Newton polish of a simple root.
cd polish_root(const UPoly<cd> &p, cd z, int iters = 8);
// Taylor coefficients of p at z (p(z+t) = sum c_k t^k).
std::vector<cd> taylor_shift(const UPoly<cd> &p, cd z);

struct RootCluster {
  cd center;
  int multiplicity = 0;
};
// Group the roots of p into clusters. Two clusters merge when the numerical order of p
// at the merged centroid (Taylor coefficients below tol * scale) equals the merged size.
std::vector<RootCluster> cluster_roots(const UPoly<cd> &p, const std::vector<cd> &rts,
                                       double tol = 1e-7);
std::vector<RootCluster> cluster_roots(const UPoly<cd> &p, double tol = 1e-7);

// Numerical rank with relative singular value threshold.
int numerical_rank(const MatC &a, double rel_tol);
// Orthonormal basis of the numerical kernel.
MatC numerical_kernel(const MatC &a, double rel_tol);

} // namespace bidisk
