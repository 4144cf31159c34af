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
#include "bidisk/fejer_riesz.hpp"

#include <cmath>
#include <limits>

namespace bidisk {

MatC LaurentMat::eval(cd z) const {
  MatC r = MatC::Zero(N, N);
  for (int k = -d; k <= d; ++k) r += c[k + d] * std::pow(z, k);
  return r;
}

LaurentMat ExactLaurent::to_float() const {
  LaurentMat r(N, d);
  for (int k = 0; k <= 2 * d; ++k) r.c[k] = c[k].to_float();
  return r;
}

MatC MatPoly::eval(cd z) const {
  MatC r = MatC::Zero(rows, cols);
  for (int k = degree(); k >= 0; --k) r = (r * z + c[k]).eval();
  return r;
}

MatPoly operator*(const MatPoly &a, const MatPoly &b) {
  MatPoly r(a.rows, b.cols, a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

MatPoly operator*(const MatC &a, const MatPoly &b) {
  MatPoly r(int(a.rows()), b.cols, b.degree());
  for (int k = 0; k <= b.degree(); ++k) r.c[k] = a * b.c[k];
  return r;
}

namespace {

// p~_j(z2) = z2^m conj(p_j(1/conj z2))
template <class S> std::vector<std::vector<S>> t1_blocks(const Poly2<S> &p, bool tilde) {
  std::vector<std::vector<S>> out(p.n + 1, std::vector<S>(p.m + 1, S(0)));
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k)
      out[j][k] = tilde ? ScalarTraits<S>::conj(p.at(j, p.m - k)) : p.at(j, k);
  return out;
}

// coefficients R_a (a = 0..m) of R(z2) and S_a of S(z2); both n x n upper triangular Toeplitz
template <class S, class M, class Set>
void build_RS(const Poly2<S> &p, std::vector<M> &R, std::vector<M> &Sm, Set set) {
  int n = p.n, m = p.m;
  auto P = t1_blocks(p, false), Pt = t1_blocks(p, true);
  for (int a = 0; a <= m; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        set(R[a], i, j, P[j - i][a]);
        set(Sm[a], i, j, Pt[n - (j - i)][a]);
      }
}

} // namespace

ExactLaurent build_T1(const Poly2<GQ> &p) {
  int n = p.n, m = p.m;
  if (n == 0) throw PreconditionError("T1 needs n >= 1");
  std::vector<QMat> R(m + 1, QMat(n, n)), S(m + 1, QMat(n, n));
  build_RS(p, R, S, [](QMat &M, int i, int j, const GQ &v) { M(i, j) = v; });
  ExactLaurent T;
  T.N = n;
  T.d = m;
  T.c.assign(2 * m + 1, QMat(n, n));
  auto adj = [](const QMat &A) {
    QMat B(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
      for (int j = 0; j < A.cols; ++j) B(j, i) = A(i, j).conj();
    return B;
  };
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      // R_b^* R_a contributes to z^{a-b}
      T.c[a - b + m] = T.c[a - b + m] + adj(R[b]) * R[a] - adj(S[b]) * S[a];
    }
  return T;
}

LaurentMat build_T1(const Poly2<cd> &p) {
  int n = p.n, m = p.m;
  if (n == 0) throw PreconditionError("T1 needs n >= 1");
  std::vector<MatC> R(m + 1, MatC::Zero(n, n)), S(m + 1, MatC::Zero(n, n));
  build_RS(p, R, S, [](MatC &M, int i, int j, const cd &v) { M(i, j) = v; });
  LaurentMat T(n, m);
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) T.c[a - b + m] += R[b].adjoint() * R[a] - S[b].adjoint() * S[a];
  return T;
}

namespace {

GQ qdet(const QMat &A) {
  // Gaussian elimination over Q(i)
  QMat M = A;
  int n = M.rows;
  GQ det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!M(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) return GQ(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(c, j));
      det = -det;
    }
    det *= M(c, c);
    GQ inv = M(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (M(r, c).is_zero()) continue;
      GQ f = M(r, c) * inv;
      for (int j = c; j < n; ++j) M(r, j) -= f * M(c, j);
    }
  }
  return det;
}

// Newton interpolation through (x_i, y_i)
UPoly<GQ> interpolate(const std::vector<GQ> &x, std::vector<GQ> y) {
  int K = int(x.size());
  for (int j = 1; j < K; ++j)
    for (int i = K - 1; i >= j; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - j]);
  UPoly<GQ> r = UPoly<GQ>::constant(y[K - 1]);
  for (int i = K - 2; i >= 0; --i) {
    r = r * UPoly<GQ>(std::vector<GQ>{-x[i], GQ(1)});
    r = r + UPoly<GQ>::constant(y[i]);
  }
  return r;
}

bool is_torus(cd t, double tol) { return std::abs(std::abs(t) - 1.0) <= tol; }

// Laurent scalar: coefficients c[k - lo] of z^k
struct LPoly {
  int lo = 0;
  std::vector<cd> c;
};

LPoly lp_from(const LaurentMat &T, int i, int j) {
  LPoly f;
  f.lo = -T.d;
  for (int k = -T.d; k <= T.d; ++k) f.c.push_back(T.c[k + T.d](i, j));
  return f;
}

// divide z^lo g(z) by (z - a); remainder discarded, returned in rem
LPoly lp_div_linear(const LPoly &f, cd a, double &rem) {
  int n = int(f.c.size()) - 1;
  LPoly q;
  q.lo = f.lo;
  if (n < 1) {
    rem = std::max(rem, n == 0 ? std::abs(f.c[0]) : 0.0);
    return q;
  }
  q.c.assign(n, 0);
  if (std::abs(a) <= 1) {
    q.c[n - 1] = f.c[n];
    for (int k = n - 1; k >= 1; --k) q.c[k - 1] = f.c[k] + a * q.c[k];
    rem = std::max(rem, std::abs(f.c[0] + a * q.c[0]));
  } else {
    q.c[0] = -f.c[0] / a;
    for (int k = 1; k < n; ++k) q.c[k] = (q.c[k - 1] - f.c[k]) / a;
    rem = std::max(rem, std::abs(q.c[n - 1] - f.c[n]));
  }
  return q;
}

// divide by (1/z - conj t) = -conj(t) (z - 1/conj t) / z
LPoly lp_div_reflected(const LPoly &f, cd t, double &rem) {
  cd ct = std::conj(t);
  LPoly g = lp_div_linear(f, 1.0 / ct, rem);
  g.lo += 1;
  for (auto &v : g.c) v /= -ct;
  return g;
}

LaurentMat from_entries(const std::vector<std::vector<LPoly>> &E, int N) {
  int lo = 0, hi = 0;
  double mx = 0;
  for (auto &row : E)
    for (auto &f : row)
      for (auto &v : f.c) mx = std::max(mx, std::abs(v));
  for (auto &row : E)
    for (auto &f : row)
      for (size_t k = 0; k < f.c.size(); ++k)
        if (std::abs(f.c[k]) > 1e-14 * mx) {
          lo = std::min(lo, f.lo + int(k));
          hi = std::max(hi, f.lo + int(k));
        }
  int d = std::max(-lo, hi);
  LaurentMat T(N, d);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (size_t k = 0; k < E[i][j].c.size(); ++k) {
        int e = E[i][j].lo + int(k);
        if (e >= -d && e <= d) T.c[e + d](i, j) = E[i][j].c[k];
      }
  // restore exact self-adjointness
  for (int k = -d; k <= 0; ++k) {
    MatC avg = 0.5 * (T.c[k + d] + T.c[-k + d].adjoint());
    T.c[k + d] = avg;
    T.c[-k + d] = avg.adjoint();
  }
  return T;
}

// One peel at root t: returns T^ and the unitary V (first column spans ker T(t)).
LaurentMat peel(const LaurentMat &T, cd t, MatC &V, double &rem) {
  int N = T.N;
  Eigen::JacobiSVD<MatC> svd(T.eval(t), Eigen::ComputeFullV);
  VecC v = svd.matrixV().col(N - 1);
  MatC vm = v;
  Eigen::HouseholderQR<MatC> qr(vm);
  V = qr.householderQ() * MatC::Identity(N, N);
  LaurentMat M(N, T.d);
  for (int k = 0; k <= 2 * T.d; ++k) M.c[k] = V.adjoint() * T.c[k] * V;
  std::vector<std::vector<LPoly>> E(N, std::vector<LPoly>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      LPoly f = lp_from(M, i, j);
      if (i == 0) f = lp_div_reflected(f, t, rem);
      if (j == 0) f = lp_div_linear(f, t, rem);
      E[i][j] = f;
    }
  return from_entries(E, N);
}

// Outer factor of a strictly positive symbol via the one-step predictor on a finite section.
bool predictor_factor(const LaurentMat &T, int L, MatPoly &E) {
  int N = T.N, d = T.d;
  if (d == 0) {
    Eigen::LLT<MatC> llt(T.c[0]);
    if (llt.info() != Eigen::Success) return false;
    E = MatPoly(N, N, 0);
    E.c[0] = llt.matrixU();
    return true;
  }
  MatC G(L * N, L * N), rhs(L * N, N);
  for (int i = 1; i <= L; ++i) {
    for (int j = 1; j <= L; ++j) G.block((i - 1) * N, (j - 1) * N, N, N) = T.coef(i - j);
    rhs.block((i - 1) * N, 0, N, N) = -T.coef(i);
  }
  MatC X = G.ldlt().solve(rhs);
  MatC K = T.coef(0);
  for (int j = 1; j <= L; ++j) K += T.coef(-j) * X.block((j - 1) * N, 0, N, N);
  K = 0.5 * (K + K.adjoint()).eval();
  Eigen::LLT<MatC> llt(K);
  if (llt.info() != Eigen::Success) return false;
  MatC U = llt.matrixU();
  // E = U x^{-1}, x = I + sum X_j z^j
  std::vector<MatC> Y(d + 1);
  Y[0] = MatC::Identity(N, N);
  for (int k = 1; k <= d; ++k) {
    Y[k] = MatC::Zero(N, N);
    for (int j = 1; j <= std::min(k, L); ++j) Y[k] -= X.block((j - 1) * N, 0, N, N) * Y[k - j];
  }
  E = MatPoly(N, N, d);
  for (int k = 0; k <= d; ++k) E.c[k] = U * Y[k];
  return true;
}

bool finish(const LaurentMat &T, MatPoly &R, const FROptions &opt) {
  for (int L = std::max(4, 2 * T.d + 2); L <= 512; L *= 2) {
    MatPoly E;
    if (!predictor_factor(T, L, E)) return false;
    if (factor_residual(T, E, opt.samples) <= 0.1 * opt.tol) {
      R = E;
      return true;
    }
    if (T.d == 0) return false;
  }
  return false;
}

MatPoly trim_degree(const MatPoly &E, int deg) {
  MatPoly r = E;
  if (r.degree() > deg) r.c.resize(deg + 1);
  return r;
}

// coefficients k = 0..d of T - E^* E on the torus
std::vector<MatC> coef_residual(const LaurentMat &T, const MatPoly &E) {
  int d = T.d;
  std::vector<MatC> R(d + 1);
  for (int k = 0; k <= d; ++k) {
    R[k] = T.coef(k);
    for (int j = 0; j + k <= E.degree(); ++j) R[k] -= E.c[j].adjoint() * E.c[j + k];
  }
  return R;
}

// Levenberg-Marquardt on the coefficient equations of E^* E = T. Near torus zeros of
// det T the solution is singular and convergence is only linear, hence the budget.
MatPoly polish(const LaurentMat &T, MatPoly E, int samples, double &res) {
  int N = T.N, d = E.degree(), nu = N * N * (d + 1);
  auto flat = [&](const std::vector<MatC> &R) {
    Eigen::VectorXd v(2 * N * N * (T.d + 1));
    int i = 0;
    for (auto &M : R)
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          v(i++) = M(a, b).real();
          v(i++) = M(a, b).imag();
        }
    return v;
  };
  auto moved = [&](const MatPoly &F, const Eigen::VectorXd &x) {
    MatPoly G = F;
    for (int u = 0; u < nu; ++u) {
      int j = u / (N * N), a = (u % (N * N)) / N, b = u % N;
      G.c[j](a, b) += cd(x(2 * u), x(2 * u + 1));
    }
    return G;
  };
  const MatPoly E0 = E;
  Eigen::VectorXd r = flat(coef_residual(T, E));
  double mu = 1e-3;
  for (int it = 0; it < 60 && r.norm() > 0; ++it) {
    Eigen::MatrixXd J(r.size(), 2 * nu);
    for (int u = 0; u < 2 * nu; ++u) {
      int q = u / 2, j = q / (N * N), a = (q % (N * N)) / N, b = q % N;
      cd dir = u % 2 ? cd(0, 1) : cd(1, 0);
      std::vector<MatC> L(T.d + 1, MatC::Zero(N, N));
      // derivative of sum_j E_j^* E_{j+k} along entry (a,b) of E_j
      for (int k = 0; k <= T.d; ++k) {
        if (j + k <= d) L[k].row(b) += std::conj(dir) * E.c[j + k].row(a);
        if (j - k >= 0) L[k].col(b) += dir * E.c[j - k].adjoint().col(a);
      }
      J.col(u) = flat(L);
    }
    Eigen::MatrixXd A = J.transpose() * J;
    Eigen::VectorXd g = J.transpose() * r;
    double top = A.diagonal().maxCoeff();
    bool improved = false;
    for (int t = 0; t < 12 && !improved; ++t) {
      Eigen::MatrixXd Am = A;
      Am.diagonal().array() += mu * top;
      MatPoly F = moved(E, Am.ldlt().solve(g));
      Eigen::VectorXd rf = flat(coef_residual(T, F));
      if (rf.norm() < r.norm()) {
        E = F;
        r = rf;
        mu = std::max(mu / 10, 1e-15);
        improved = true;
      } else {
        mu *= 10;
      }
    }
    if (!improved) break;
  }
  double fr = factor_residual(T, E, samples);
  if (fr > res) return E0;
  res = fr;
  return E;
}

FRResult ladder(const LaurentMat &T, const FROptions &opt) {
  const double eps[3] = {1e-4, 1e-6, 1e-8};
  std::vector<MatPoly> Es;
  for (double e : eps) {
    LaurentMat Te = T;
    Te.c[T.d] += e * MatC::Identity(T.N, T.N);
    MatPoly E;
    bool ok = false;
    for (int L = 8; L <= 1024 && !ok; L *= 2) {
      if (!predictor_factor(Te, L, E)) break;
      ok = factor_residual(Te, E, opt.samples) <= opt.tol;
    }
    if (!ok) break;
    Es.push_back(E);
  }
  FRResult r;
  r.method = "ladder";
  if (Es.empty()) throw std::runtime_error("Fejer-Riesz ladder failed");
  r.E = Es.back();
  if (Es.size() >= 2) {
    // errors scale like sqrt(eps)
    const MatPoly &a = Es[Es.size() - 2], &b = Es.back();
    double sa = std::sqrt(eps[Es.size() - 2]), sb = std::sqrt(eps[Es.size() - 1]);
    MatPoly x = b;
    for (int k = 0; k <= x.degree(); ++k) x.c[k] = (b.c[k] * sa - a.c[k] * sb) / (sa - sb);
    if (factor_residual(T, x, opt.samples) < factor_residual(T, b, opt.samples)) r.E = x;
  }
  r.residual = factor_residual(T, r.E, opt.samples);
  r.E = polish(T, r.E, opt.samples, r.residual);
  if (r.residual > opt.tol) throw std::runtime_error("Fejer-Riesz residual not met at the end of the ladder");
  return r;
}

} // namespace

std::vector<std::pair<cd, int>> det_roots(const ExactLaurent &T) {
  int deg = 2 * T.N * T.d;
  std::vector<GQ> xs, ys;
  for (int s = 1; s <= deg + 1; ++s) {
    GQ z(s);
    QMat M(T.N, T.N);
    GQ zi = z.inv(), pw(1);
    for (int k = 0; k < T.d; ++k) pw *= zi;
    for (int k = -T.d; k <= T.d; ++k) {
      M = M + scaled(T.c[k + T.d], pw);
      pw *= z;
    }
    GQ dt = qdet(M);
    for (int k = 0; k < T.N * T.d; ++k) dt *= z;
    xs.push_back(z);
    ys.push_back(dt);
  }
  UPoly<GQ> P = interpolate(xs, ys);
  if (P.is_zero()) throw PreconditionError("det T vanishes identically");
  std::vector<std::pair<cd, int>> out;
  auto sf = squarefree(P);
  for (size_t i = 0; i < sf.size(); ++i) {
    if (sf[i].degree() < 1) continue;
    UPoly<cd> f = to_float(monic(sf[i]));
    for (cd r : roots(f)) {
      if (std::abs(r) < 1e-300) continue;
      if (sf[i].c[0].is_zero() && std::abs(r) < 1e-12) continue;
      out.push_back({polish_root(f, r, 20), int(i) + 1});
    }
  }
  return out;
}

std::vector<std::pair<cd, int>> det_roots(const LaurentMat &T, double cluster_tol) {
  int deg = 2 * T.N * T.d, K = deg + 1;
  std::vector<cd> vals(K), c(K);
  for (int s = 0; s < K; ++s) {
    cd z = std::polar(1.0, 2 * M_PI * s / K);
    vals[s] = T.eval(z).determinant() * std::pow(z, T.N * T.d);
  }
  double mx = 0;
  for (int j = 0; j < K; ++j) {
    cd v = 0;
    for (int s = 0; s < K; ++s) v += vals[s] * std::polar(1.0, -2 * M_PI * double(j) * s / K);
    c[j] = v / double(K);
    mx = std::max(mx, std::abs(c[j]));
  }
  if (mx == 0) throw PreconditionError("det T vanishes identically");
  for (auto &v : c)
    if (std::abs(v) < 1e-13 * mx) v = 0;
  UPoly<cd> P(c);
  std::vector<std::pair<cd, int>> out;
  for (auto &cl : cluster_roots(P, roots(P), cluster_tol))
    if (std::abs(cl.center) > 1e-10) out.push_back({cl.center, cl.multiplicity});
  return out;
}

double factor_residual(const LaurentMat &T, const MatPoly &E, int samples) {
  double r = 0;
  for (int s = 0; s < samples; ++s) {
    cd z = std::polar(1.0, 2 * M_PI * (s + 0.5) / samples);
    MatC e = E.eval(z);
    r = std::max(r, (T.eval(z) - e.adjoint() * e).norm());
  }
  return r;
}

FRResult fejer_riesz(const LaurentMat &T, const std::vector<std::pair<cd, int>> &rts, const FROptions &opt) {
  int N = T.N;
  LaurentMat cur = T;
  // left factor accumulates D_k V_k^* ... D_1 V_1^*
  MatPoly acc(N, N, 0);
  acc.c[0] = MatC::Identity(N, N);
  double rem = 0;
  int peels = 0;
  bool ok = true;
  for (auto &[t, mult] : rts) {
    int times = 0;
    if (is_torus(t, opt.torus_tol)) {
      if (mult % 2) { ok = false; break; }
      times = mult / 2;
    } else if (std::abs(t) > 1) {
      times = mult;
    }
    cd tt = is_torus(t, opt.torus_tol) ? t / std::abs(t) : t;
    for (int q = 0; q < times; ++q) {
      MatC V;
      cur = peel(cur, tt, V, rem);
      MatPoly DV(N, N, 1);
      DV.c[0] = V.adjoint();
      DV.c[0].row(0) *= -tt;
      DV.c[1].row(0) = V.adjoint().row(0);
      acc = DV * acc;
      ++peels;
    }
  }
  FRResult res;
  res.peels = peels;
  MatPoly R;
  if (ok && finish(cur, R, opt)) {
    res.E = trim_degree(R * acc, T.d);
    res.residual = factor_residual(T, res.E, opt.samples);
    res.E = polish(T, res.E, opt.samples, res.residual);
    res.method = "peel";
    if (res.residual <= opt.tol) return res;
  }
  return ladder(T, opt);
}

FRResult fejer_riesz(const LaurentMat &T, const FROptions &opt) {
  if (T.d == 0) return fejer_riesz(T, {}, opt);
  return fejer_riesz(T, det_roots(T), opt);
}

FRResult fejer_riesz(const ExactLaurent &T, const FROptions &opt) {
  LaurentMat F = T.to_float();
  if (T.d == 0) return fejer_riesz(F, {}, opt);
  return fejer_riesz(F, det_roots(T), opt);
}

MatC canonicalize_rows(const MatC &C0, double tol) {
  MatC C = C0;
  int r = int(C.rows()), cols = int(C.cols());
  double scale = std::max(C.norm(), 1e-300);
  int row = 0;
  for (int j = 0; j < cols && row < r; ++j) {
    VecC x = C.block(row, j, r - row, 1);
    double nx = x.norm();
    if (nx <= tol * scale) {
      C.block(row, j, r - row, 1).setZero();
      continue;
    }
    // Householder reflector mapping x to alpha e1
    cd x0 = x(0);
    cd ph = std::abs(x0) > 0 ? x0 / std::abs(x0) : cd(1);
    VecC u = x;
    u(0) += ph * nx;
    double nu = u.norm();
    if (nu > 0) {
      u /= nu;
      MatC blk = C.block(row, 0, r - row, cols);
      blk -= 2.0 * u * (u.adjoint() * blk);
      C.block(row, 0, r - row, cols) = blk;
    }
    // pivot now -ph*nx; rotate to a positive real
    cd piv = C(row, j);
    if (std::abs(piv) > 0) C.row(row) *= std::conj(piv) / std::abs(piv);
    C.block(row + 1, j, r - row - 1, 1).setZero();
    ++row;
  }
  for (int i = row; i < r; ++i) C.row(i).setZero();
  return C;
}

} // namespace bidisk
