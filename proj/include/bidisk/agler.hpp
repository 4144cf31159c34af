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

#include "bidisk/fejer_riesz.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

// Vector polynomial: row i holds the coefficients of entry i,
// column j*(m+1)+k multiplies z1^j z2^k.
struct VecPoly {
  int n = 0, m = 0;
  MatC C;
  VecPoly() = default;
  VecPoly(int dim, int n_, int m_) : n(n_), m(m_), C(MatC::Zero(dim, (n_ + 1) * (m_ + 1))) {}
  int dim() const { return int(C.rows()); }
  int col(int j, int k) const { return j * (m + 1) + k; }
  cd coef(int i, int j, int k) const {
    return (j >= 0 && j <= n && k >= 0 && k <= m) ? C(i, col(j, k)) : cd(0);
  }
  VecC eval(cd z1, cd z2) const;
  Poly2<cd> entry(int i) const;
  static VecPoly from_entries(const std::vector<Poly2<cd>> &e, int n, int m);
};

VecPoly reflect(const VecPoly &A, int n, int m);
VecPoly canonicalize(const VecPoly &A);
VecPoly embed(const VecPoly &A, int n, int m);

// Polarized kernel A(w)^* A(z) as a coefficient matrix over monomials of the (n,m) grid.
MatC kernel_matrix(const VecPoly &A, int n, int m);
MatC kernel_matrix(const Poly2<cd> &p, int n, int m);
// K -> (1 - conj(w_j) z_j) K on the same grid
MatC times_one_minus(const MatC &K, int n, int m, int var);

struct AglerSystem {
  int n = 0, m = 0;
  VecPoly E1, F1, E2, F2, G;
  MatPoly E1m, F1m; // in z2, n x n
  MatPoly E2m, F2m; // in z1, m x m
  double identity_residual = 0;
  double fr_residual = 0;
  std::string fr_method;
  bool unique_pair = false;
  int dim_G() const { return G.dim(); }
};

struct AglerOptions {
  double rank_tol = 1e-9;
  FROptions fr;
};

AglerSystem canonical_system(const Poly2<GQ> &p, const AglerOptions &opt = {});
AglerSystem canonical_system(const Poly2<cd> &p, const AglerOptions &opt = {});

// Max coefficient of |p|^2 - |p~|^2 - sum_j (1-|z_j|^2)|A_j|^2 after polarization.
double verify_agler(const Poly2<cd> &p, const VecPoly &A1, const VecPoly &A2);

// Exact check for vectors with rational weights: |A|^2 = sum_i w_i |a_i|^2.
struct WeightedVec {
  std::vector<Poly2<GQ>> entries;
  std::vector<mpq_class> weights;
};
bool verify_agler_exact(const Poly2<GQ> &p, const WeightedVec &A1, const WeightedVec &A2);

// Isometry V with V A(z) = B(z); throws when |A|^2 != |B|^2.
MatC intertwine(const VecPoly &A, const VecPoly &B, double tol = 1e-8);

struct Realization {
  MatC U;
  int N = 0, M = 0;
  cd A;
  MatC B, C, D;
  double unitarity_residual = 0;
  double transfer_residual = 0;
  double spectral_radius_D = 0;
  cd transfer(cd z1, cd z2) const;
};

Realization realize(const Poly2<cd> &p, const VecPoly &A1, const VecPoly &A2, unsigned seed = 1,
                    int points = 100);

// Torus identity check |E1|^2 = n|p|^2 - 2 Re(conj(p) z1 d1 p) on random samples.
double e_on_torus_residual(const Poly2<cd> &p, const VecPoly &E1, int samples = 1000, unsigned seed = 7);

// Matrix-form helpers
MatPoly matrix_form_z2(const VecPoly &A); // A(z) = A(z2) Lambda_n(z1), n = A.n + 1
MatPoly matrix_form_z1(const VecPoly &A); // A(z) = A(z1) Lambda_m(z2), m = A.m + 1

} // namespace bidisk
