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
#include "bidisk/agler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace bidisk {

VecC VecPoly::eval(cd z1, cd z2) const {
  VecC mono((n + 1) * (m + 1));
  cd a = 1;
  for (int j = 0; j <= n; ++j) {
    cd b = a;
    for (int k = 0; k <= m; ++k) {
      mono(col(j, k)) = b;
      b *= z2;
    }
    a *= z1;
  }
  return C * mono;
}

Poly2<cd> VecPoly::entry(int i) const {
  Poly2<cd> p(n, m);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= m; ++k) p.at(j, k) = C(i, col(j, k));
  return p;
}

VecPoly VecPoly::from_entries(const std::vector<Poly2<cd>> &e, int n, int m) {
  VecPoly A(int(e.size()), n, m);
  for (size_t i = 0; i < e.size(); ++i)
    for (int j = 0; j <= e[i].n; ++j)
      for (int k = 0; k <= e[i].m; ++k) {
        if (e[i].at(j, k) == cd(0)) continue;
        if (j > n || k > m) throw std::invalid_argument("entry exceeds vector bidegree");
        A.C(i, A.col(j, k)) = e[i].at(j, k);
      }
  return A;
}

VecPoly reflect(const VecPoly &A, int n, int m) {
  VecPoly R(A.dim(), n, m);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j <= A.n; ++j)
      for (int k = 0; k <= A.m; ++k) {
        cd v = A.C(i, A.col(j, k));
        if (v == cd(0)) continue;
        if (j > n || k > m) throw std::invalid_argument("reflection degree below vector degree");
        R.C(i, R.col(n - j, m - k)) = std::conj(v);
      }
  return R;
}

VecPoly embed(const VecPoly &A, int n, int m) {
  VecPoly R(A.dim(), n, m);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j <= A.n; ++j)
      for (int k = 0; k <= A.m; ++k) {
        cd v = A.C(i, A.col(j, k));
        if (v == cd(0)) continue;
        if (j > n || k > m) throw std::invalid_argument("embedding grid too small");
        R.C(i, R.col(j, k)) = v;
      }
  return R;
}

VecPoly canonicalize(const VecPoly &A) {
  VecPoly R = A;
  if (A.dim() > 0) R.C = canonicalize_rows(A.C);
  return R;
}

MatC kernel_matrix(const VecPoly &A, int n, int m) {
  VecPoly E = embed(A, n, m);
  return E.C.adjoint() * E.C;
}

MatC kernel_matrix(const Poly2<cd> &p, int n, int m) {
  return kernel_matrix(VecPoly::from_entries({p}, p.n, p.m), n, m);
}

MatC times_one_minus(const MatC &K, int n, int m, int var) {
  MatC R = K;
  int da = var == 1 ? 1 : 0, db = var == 2 ? 1 : 0;
  auto idx = [&](int j, int k) { return j * (m + 1) + k; };
  for (int j1 = 0; j1 <= n; ++j1)
    for (int k1 = 0; k1 <= m; ++k1)
      for (int j2 = 0; j2 <= n; ++j2)
        for (int k2 = 0; k2 <= m; ++k2) {
          int a1 = j1 - da, b1 = k1 - db, a2 = j2 - da, b2 = k2 - db;
          if (a1 < 0 || b1 < 0 || a2 < 0 || b2 < 0) continue;
          R(idx(j1, k1), idx(j2, k2)) -= K(idx(a1, b1), idx(a2, b2));
        }
  return R;
}

namespace {

// Q with (1 - conj(w_v) z_v) Q = K; rem collects entries that leave the reduced grid.
MatC divide_one_minus(const MatC &K, int n, int m, int var, double &rem) {
  int S = (n + 1) * (m + 1);
  MatC Q = MatC::Zero(S, S);
  int da = var == 1 ? 1 : 0, db = var == 2 ? 1 : 0;
  auto idx = [&](int j, int k) { return j * (m + 1) + k; };
  for (int j1 = 0; j1 <= n; ++j1)
    for (int k1 = 0; k1 <= m; ++k1)
      for (int j2 = 0; j2 <= n; ++j2)
        for (int k2 = 0; k2 <= m; ++k2) {
          cd v = K(idx(j1, k1), idx(j2, k2));
          int a1 = j1 - da, b1 = k1 - db, a2 = j2 - da, b2 = k2 - db;
          if (a1 >= 0 && b1 >= 0 && a2 >= 0 && b2 >= 0) v += Q(idx(a1, b1), idx(a2, b2));
          Q(idx(j1, k1), idx(j2, k2)) = v;
        }
  // entries with the top power of the divided variable must vanish
  for (int j1 = 0; j1 <= n; ++j1)
    for (int k1 = 0; k1 <= m; ++k1)
      for (int j2 = 0; j2 <= n; ++j2)
        for (int k2 = 0; k2 <= m; ++k2) {
          bool top = var == 1 ? (j1 == n || j2 == n) : (k1 == m || k2 == m);
          if (top) rem = std::max(rem, std::abs(Q(idx(j1, k1), idx(j2, k2))));
        }
  return Q;
}

// restrict a kernel on grid (n,m) to the subgrid (n2,m2)
MatC restrict_kernel(const MatC &K, int, int m, int n2, int m2) {
  int S2 = (n2 + 1) * (m2 + 1);
  MatC R(S2, S2);
  for (int j1 = 0; j1 <= n2; ++j1)
    for (int k1 = 0; k1 <= m2; ++k1)
      for (int j2 = 0; j2 <= n2; ++j2)
        for (int k2 = 0; k2 <= m2; ++k2)
          R(j1 * (m2 + 1) + k1, j2 * (m2 + 1) + k2) = K(j1 * (m + 1) + k1, j2 * (m + 1) + k2);
  return R;
}

// K = C^* C with C of the given rank (top eigenvalues; ties by index).
std::string sci(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", x);
  return b;
}

MatC psd_factor(const MatC &K, int rank, double &tail, double &neg) {
  Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (K + K.adjoint()));
  auto ev = es.eigenvalues();
  int S = int(ev.size());
  std::vector<int> order(S);
  for (int i = 0; i < S; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ev(a) > ev(b); });
  MatC C(rank, S);
  for (int r = 0; r < rank; ++r) {
    double l = std::max(ev(order[r]), 0.0);
    C.row(r) = std::sqrt(l) * es.eigenvectors().col(order[r]).adjoint();
  }
  tail = rank < S ? ev(order[rank]) : 0.0;
  neg = S > 0 ? std::max(0.0, -ev(order[S - 1])) : 0.0;
  return C;
}

int psd_rank(const MatC &K, double rel, double scale) {
  Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (K + K.adjoint()), Eigen::EigenvaluesOnly);
  int r = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > rel * scale) ++r;
  return r;
}

FRResult run_fr(const Poly2<GQ> &p, const FROptions &o) { return fejer_riesz(build_T1(p), o); }
FRResult run_fr(const Poly2<cd> &p, const FROptions &o) { return fejer_riesz(build_T1(p), o); }

Poly2<cd> as_float(const Poly2<GQ> &p) { return to_float(p); }
Poly2<cd> as_float(const Poly2<cd> &p) { return p; }

template <class S> AglerSystem canonical_impl(const Poly2<S> &p0, const AglerOptions &opt) {
  Poly2<cd> p = as_float(p0);
  int n = p.n, m = p.m;
  AglerSystem sys;
  sys.n = n;
  sys.m = m;
  sys.E1 = VecPoly(0, std::max(n - 1, 0), m);
  if (n >= 1) {
    FRResult fr = run_fr(p0, opt.fr);
    sys.fr_residual = fr.residual;
    sys.fr_method = fr.method;
    VecPoly E(n, n - 1, m);
    for (int k = 0; k <= std::min(fr.E.degree(), m); ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E.C(i, E.col(j, k)) = fr.E.c[k](i, j);
    sys.E1 = canonicalize(E);
    sys.F1 = canonicalize(reflect(sys.E1, n - 1, m));
  } else {
    sys.F1 = sys.E1;
  }
  Poly2<cd> pt = reflect(p);
  MatC Kp = kernel_matrix(p, n, m), Kpt = kernel_matrix(pt, n, m);
  MatC KE1 = kernel_matrix(sys.E1, n, m), KF1 = kernel_matrix(sys.F1, n, m);
  MatC num = Kp - Kpt - times_one_minus(KE1, n, m, 1);
  double scale = std::max(1.0, Kp.cwiseAbs().maxCoeff());
  if (m >= 1) {
    double rem = 0;
    MatC Q = divide_one_minus(num, n, m, 2, rem);
    MatC H = restrict_kernel(Q, n, m, n, m - 1);
    double tail = 0, neg = 0;
    MatC J = psd_factor(H, m, tail, neg);
    // rank m is known; only ask for a clear gap below the m-th eigenvalue
    double lm = J.row(m - 1).squaredNorm();
    double floor = std::max(opt.rank_tol * scale, 1e-6 * lm);
    if (tail > floor || neg > floor || rem > std::max(1e-7 * scale, 1e-6 * lm))
      throw CrossCheckError("F2 kernel is not of rank m (" + sci(tail) + ", " + sci(neg) + ", " + sci(rem) + ")");
    VecPoly F2(m, n, m - 1);
    F2.C = J;
    sys.F2 = canonicalize(F2);
    sys.E2 = canonicalize(reflect(sys.F2, n, m - 1));
  } else {
    sys.F2 = VecPoly(0, n, 0);
    sys.E2 = sys.F2;
  }
  MatC KF2 = kernel_matrix(sys.F2, n, m), KE2 = kernel_matrix(sys.E2, n, m);
  // G from (K_E1 - K_F1) / (1 - conj(w2) z2)
  MatC KG = MatC::Zero((n + 1) * (m + 1), (n + 1) * (m + 1));
  sys.G = VecPoly(0, std::max(n - 1, 0), std::max(m - 1, 0));
  if (n >= 1 && m >= 1) {
    double rem = 0;
    MatC Qg = divide_one_minus(KE1 - KF1, n, m, 2, rem);
    MatC Hg = restrict_kernel(Qg, n, m, n - 1, m - 1);
    int r = psd_rank(Hg, opt.rank_tol, scale);
    double tail = 0, neg = 0;
    VecPoly G(r, n - 1, m - 1);
    G.C = psd_factor(Hg, r, tail, neg);
    sys.G = canonicalize(G);
    KG = kernel_matrix(sys.G, n, m);
  }
  MatC base = Kp - Kpt;
  double r1 = (base - times_one_minus(KE1, n, m, 1) - times_one_minus(KF2, n, m, 2)).cwiseAbs().maxCoeff();
  double r2 = (base - times_one_minus(KF1, n, m, 1) - times_one_minus(KE2, n, m, 2)).cwiseAbs().maxCoeff();
  double r3 = (base - times_one_minus(KF1, n, m, 1) - times_one_minus(KF2, n, m, 2) -
               times_one_minus(times_one_minus(KG, n, m, 1), n, m, 2))
                  .cwiseAbs()
                  .maxCoeff();
  sys.identity_residual = std::max({r1, r2, r3});
  sys.unique_pair = sys.G.dim() == 0;
  if (n >= 1) {
    sys.E1m = matrix_form_z2(sys.E1);
    sys.F1m = matrix_form_z2(sys.F1);
  }
  if (m >= 1) {
    sys.E2m = matrix_form_z1(sys.E2);
    sys.F2m = matrix_form_z1(sys.F2);
  }
  return sys;
}

std::pair<int, int> grid_for(const Poly2<cd> &p, const VecPoly &A1, const VecPoly &A2) {
  int n = p.n, m = p.m;
  if (A1.dim() > 0) { n = std::max(n, A1.n + 1); m = std::max(m, A1.m); }
  if (A2.dim() > 0) { n = std::max(n, A2.n); m = std::max(m, A2.m + 1); }
  return {n, m};
}

} // namespace

AglerSystem canonical_system(const Poly2<GQ> &p, const AglerOptions &opt) { return canonical_impl(p, opt); }
AglerSystem canonical_system(const Poly2<cd> &p, const AglerOptions &opt) { return canonical_impl(p, opt); }

MatPoly matrix_form_z2(const VecPoly &A) {
  MatPoly M(A.dim(), A.n + 1, A.m);
  for (int k = 0; k <= A.m; ++k)
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j <= A.n; ++j) M.c[k](i, j) = A.coef(i, j, k);
  return M;
}

MatPoly matrix_form_z1(const VecPoly &A) {
  MatPoly M(A.dim(), A.m + 1, A.n);
  for (int j = 0; j <= A.n; ++j)
    for (int i = 0; i < A.dim(); ++i)
      for (int k = 0; k <= A.m; ++k) M.c[j](i, k) = A.coef(i, j, k);
  return M;
}

double verify_agler(const Poly2<cd> &p, const VecPoly &A1, const VecPoly &A2) {
  auto [n, m] = grid_for(p, A1, A2);
  Poly2<cd> pt = reflect(p);
  MatC R = kernel_matrix(p.with_bidegree(n, m), n, m) - kernel_matrix(pt.with_bidegree(n, m), n, m) -
           times_one_minus(kernel_matrix(A1, n, m), n, m, 1) - times_one_minus(kernel_matrix(A2, n, m), n, m, 2);
  return R.cwiseAbs().maxCoeff();
}

bool verify_agler_exact(const Poly2<GQ> &p, const WeightedVec &A1, const WeightedVec &A2) {
  int n = p.n, m = p.m;
  for (auto &e : A1.entries) { n = std::max(n, e.n + 1); m = std::max(m, e.m); }
  for (auto &e : A2.entries) { n = std::max(n, e.n); m = std::max(m, e.m + 1); }
  int S = (n + 1) * (m + 1);
  auto idx = [&](int j, int k) { return j * (m + 1) + k; };
  std::vector<GQ> K(size_t(S) * S);
  auto add = [&](const Poly2<GQ> &f, const GQ &w, int sa, int sb) {
    // w * conj(f(w) shifted) f(z) shifted by (sa,sb)
    for (int j1 = 0; j1 <= f.n; ++j1)
      for (int k1 = 0; k1 <= f.m; ++k1) {
        if (f.at(j1, k1).is_zero()) continue;
        for (int j2 = 0; j2 <= f.n; ++j2)
          for (int k2 = 0; k2 <= f.m; ++k2) {
            if (f.at(j2, k2).is_zero()) continue;
            GQ v = w * f.at(j1, k1).conj() * f.at(j2, k2);
            K[size_t(idx(j1 + sa, k1 + sb)) * S + idx(j2 + sa, k2 + sb)] += v;
          }
      }
  };
  add(p, GQ(1), 0, 0);
  add(reflect(p), GQ(-1), 0, 0);
  for (size_t i = 0; i < A1.entries.size(); ++i) {
    add(A1.entries[i], GQ(-A1.weights[i]), 0, 0);
    add(A1.entries[i], GQ(A1.weights[i]), 1, 0);
  }
  for (size_t i = 0; i < A2.entries.size(); ++i) {
    add(A2.entries[i], GQ(-A2.weights[i]), 0, 0);
    add(A2.entries[i], GQ(A2.weights[i]), 0, 1);
  }
  for (auto &v : K)
    if (!v.is_zero()) return false;
  return true;
}

MatC intertwine(const VecPoly &A, const VecPoly &B, double tol) {
  int n = std::max(A.n, B.n), m = std::max(A.m, B.m);
  VecPoly a = embed(A, n, m), b = embed(B, n, m);
  MatC KA = a.C.adjoint() * a.C, KB = b.C.adjoint() * b.C;
  double scale = std::max(1.0, KA.cwiseAbs().maxCoeff());
  if ((KA - KB).cwiseAbs().maxCoeff() > tol * scale) throw PreconditionError("norm identity fails");
  int ra = a.dim(), rb = b.dim();
  Eigen::JacobiSVD<MatC> sa(a.C, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::JacobiSVD<MatC> sb(b.C, Eigen::ComputeFullU | Eigen::ComputeFullV);
  auto sv = sa.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * std::max(sv(0), 1e-300)) ++r;
  if (rb - r < ra - r) throw PreconditionError("target dimension too small for an isometry");
  MatC Ua = sa.matrixU(), W = sa.matrixV();
  MatC V = MatC::Zero(rb, ra);
  if (r > 0) {
    MatC P = b.C * W.leftCols(r);
    for (int i = 0; i < r; ++i) P.col(i) /= sv(i);
    V += P * Ua.leftCols(r).adjoint();
  }
  if (ra > r) V += sb.matrixU().middleCols(r, ra - r) * Ua.rightCols(ra - r).adjoint();
  return V;
}

cd Realization::transfer(cd z1, cd z2) const {
  int K = N + M;
  if (K == 0) return A;
  MatC Dl = MatC::Zero(K, K);
  for (int i = 0; i < N; ++i) Dl(i, i) = z1;
  for (int i = N; i < K; ++i) Dl(i, i) = z2;
  MatC X = (MatC::Identity(K, K) - D * Dl).partialPivLu().solve(C);
  return A + (B * Dl * X)(0, 0);
}

Realization realize(const Poly2<cd> &p, const VecPoly &A1, const VecPoly &A2, unsigned seed, int points) {
  auto [n, m] = grid_for(p, A1, A2);
  int N = A1.dim(), M = A2.dim();
  VecPoly L(1 + N + M, n, m), R(1 + N + M, n, m);
  Poly2<cd> pt = reflect(p);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) {
      L.C(0, L.col(j, k)) = p.at(j, k);
      R.C(0, R.col(j, k)) = pt.at(j, k);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= A1.n; ++j)
      for (int k = 0; k <= A1.m; ++k) {
        L.C(1 + i, L.col(j + 1, k)) = A1.coef(i, j, k);
        R.C(1 + i, R.col(j, k)) = A1.coef(i, j, k);
      }
  for (int i = 0; i < M; ++i)
    for (int j = 0; j <= A2.n; ++j)
      for (int k = 0; k <= A2.m; ++k) {
        L.C(1 + N + i, L.col(j, k + 1)) = A2.coef(i, j, k);
        R.C(1 + N + i, R.col(j, k)) = A2.coef(i, j, k);
      }
  Realization re;
  re.N = N;
  re.M = M;
  re.U = intertwine(L, R);
  int K = N + M;
  re.A = re.U(0, 0);
  re.B = re.U.block(0, 1, 1, K);
  re.C = re.U.block(1, 0, K, 1);
  re.D = re.U.block(1, 1, K, K);
  re.unitarity_residual =
      (re.U.adjoint() * re.U - MatC::Identity(K + 1, K + 1)).cwiseAbs().maxCoeff();
  re.spectral_radius_D = 0;
  if (K > 0) {
    Eigen::ComplexEigenSolver<MatC> es(re.D, false);
    for (int i = 0; i < K; ++i) re.spectral_radius_D = std::max(re.spectral_radius_D, std::abs(es.eigenvalues()(i)));
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int s = 0; s < points; ++s) {
    cd z1 = std::polar(0.99 * std::sqrt(U(rng)), 2 * M_PI * U(rng));
    cd z2 = std::polar(0.99 * std::sqrt(U(rng)), 2 * M_PI * U(rng));
    cd want = pt.eval(z1, z2) / p.eval(z1, z2);
    re.transfer_residual = std::max(re.transfer_residual, std::abs(re.transfer(z1, z2) - want));
  }
  if (re.transfer_residual > 1e-8) throw CrossCheckError("transfer function residual above 1e-8");
  return re;
}

double e_on_torus_residual(const Poly2<cd> &p, const VecPoly &E1, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 2 * M_PI);
  Poly2<cd> dp = d1(p);
  double r = 0;
  for (int s = 0; s < samples; ++s) {
    cd z1 = std::polar(1.0, U(rng)), z2 = std::polar(1.0, U(rng));
    cd pv = p.eval(z1, z2);
    double rhs = p.n * std::norm(pv) - 2 * std::real(std::conj(pv) * z1 * dp.eval(z1, z2));
    double lhs = E1.dim() ? E1.eval(z1, z2).squaredNorm() : 0.0;
    r = std::max(r, std::abs(lhs - rhs));
  }
  return r;
}

} // namespace bidisk
