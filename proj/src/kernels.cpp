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
#include "bidisk/kernels.hpp"

#include <cmath>
#include <limits>

#include <omp.h>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace bidisk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

template <class F> void for_rows(int rows, Exec ex, F &&f) {
  if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < rows; ++i) f(i);
  } else {
    for (int i = 0; i < rows; ++i) f(i);
  }
}

// z2-coefficients of p(z1, .)
std::vector<cd> slice(const Poly2<cd> &p, cd z1) {
  std::vector<cd> c(p.m + 1);
  for (int k = 0; k <= p.m; ++k) {
    cd s = 0;
    for (int j = p.n; j >= 0; --j) s = s * z1 + p.at(j, k);
    c[k] = s;
  }
  return c;
}

double slice_min_root(const Poly2<cd> &p, cd z1) {
  std::vector<cd> c = slice(p, z1);
  double scale = 0;
  for (auto &x : c) scale = std::max(scale, std::abs(x));
  UPoly<cd> u(c);
  u.trim(1e-14 * std::max(scale, 1e-300));
  if (u.is_zero()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (cd r : roots(u)) best = std::min(best, std::abs(r));
  return best;
}

// (1/2pi) int |q/p|^2 over the circle, i.e. the H^2 norm of the Taylor series of q/p,
// which needs p zero free on the open disk. Once past deg q the coefficients obey the
// recurrence of p; the tail is x0^* P x0 with P from the Stein equation P - A P A^* = x0 x0^*.
// NaN when a root of p(z1, .) is within roundoff of the circle.
double slice_h2(std::vector<cd> qc, std::vector<cd> pc) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double ps = 0, qs = 0;
  for (auto &x : pc) ps = std::max(ps, std::abs(x));
  for (auto &x : qc) qs = std::max(qs, std::abs(x));
  while (!qc.empty() && std::abs(qc.back()) <= 1e-14 * qs) qc.pop_back();
  if (qc.empty()) return 0.0;
  while (!pc.empty() && std::abs(pc.back()) <= 1e-14 * ps) pc.pop_back();
  if (pc.empty() || std::abs(pc[0]) <= 1e-14 * ps) return inf;
  int m = int(pc.size()) - 1, dq = int(qc.size()) - 1;
  int K0 = std::max(dq - m + 1, 0);
  std::vector<cd> c(K0 + m);
  for (int k = 0; k < K0 + m; ++k) {
    cd v = k <= dq ? qc[k] : cd(0);
    for (int i = 1; i <= std::min(k, m); ++i) v -= pc[i] * c[k - i];
    c[k] = v / pc[0];
  }
  double head = 0;
  for (int k = 0; k < K0; ++k) head += std::norm(c[k]);
  if (m == 0) return head;
  MatC A = MatC::Zero(m, m);
  for (int r = 0; r + 1 < m; ++r) A(r, r + 1) = 1;
  for (int j = 0; j < m; ++j) A(m - 1, j) = -pc[m - j] / pc[0];
  Eigen::ComplexEigenSolver<MatC> es(A, false);
  double rho = es.eigenvalues().cwiseAbs().maxCoeff();
  if (rho > 1.0 + 1e-8) return inf;
  if (rho >= 1.0 - 1e-12) return std::numeric_limits<double>::quiet_NaN();
  VecC x0(m);
  for (int j = 0; j < m; ++j) x0(j) = c[K0 + j];
  MatC X = x0 * x0.adjoint();
  MatC S = MatC::Identity(m * m, m * m) - Eigen::kroneckerProduct(A.conjugate(), A).eval();
  VecC v = S.fullPivLu().solve(Eigen::Map<VecC>(X.data(), m * m));
  double tail = v(0).real();
  if (!std::isfinite(tail) || tail < 0) return std::numeric_limits<double>::quiet_NaN();
  return head + tail;
}

} // namespace

std::vector<SweepSample> stability_sweep(const Poly2<cd> &p, int radii, int angles, double collar,
                                         Exec ex) {
  std::vector<SweepSample> out(size_t(radii) * angles);
  for_rows(radii, ex, [&](int i) {
    double r = radii > 1 ? (1.0 - collar) * double(i) / double(radii - 1) : 0.0;
    for (int j = 0; j < angles; ++j) {
      double t = kTwoPi * double(j) / double(angles);
      cd z1 = std::polar(r, t);
      out[size_t(i) * angles + j] = {z1, slice_min_root(p, z1)};
    }
  });
  return out;
}

double torus_l2(const Poly2<cd> &q, const Poly2<cd> &p, int N, Exec ex) {
  const double h = kTwoPi / N;
  std::vector<double> rows(N, 0.0);
  for_rows(N, ex, [&](int i) {
    cd z1 = std::polar(1.0, h * (i + 0.5));
    rows[i] = slice_h2(slice(q, z1), slice(p, z1));
  });
  // unresolved rows take the value of the nearest resolved row
  std::vector<double> fixed(rows);
  for (int i = 0; i < N; ++i) {
    if (!std::isnan(rows[i])) continue;
    fixed[i] = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= N / 2; ++d) {
      double a = rows[(i + d) % N], b = rows[(i - d + N) % N];
      if (!std::isnan(a) || !std::isnan(b)) {
        fixed[i] = std::isnan(a) ? b : std::isnan(b) ? a : std::max(a, b);
        break;
      }
    }
  }
  double total = 0;
  for (double r : fixed) total += r;
  return total / N;
}

double torus_ratio_max(const std::function<double(cd, cd)> &num,
                       const std::function<double(cd, cd)> &den, int N, Exec ex) {
  const double h = kTwoPi / N;
  std::vector<double> rows(N, 0.0);
  for_rows(N, ex, [&](int i) {
    cd a = std::polar(1.0, h * (i + 0.5));
    double mx = 0;
    for (int j = 0; j < N; ++j) {
      cd b = std::polar(1.0, h * (j + 0.5));
      double nv = num(a, b), dv = den(a, b);
      double r = dv > 0 ? nv / dv : (nv > 0 ? std::numeric_limits<double>::infinity() : 0.0);
      mx = std::max(mx, r);
    }
    rows[i] = mx;
  });
  double mx = 0;
  for (double r : rows) mx = std::max(mx, r);
  return mx;
}

MatC weight_fourier(const Poly2<cd> &p, int J, int K, int N, Exec ex) {
  const double h = kTwoPi / N;
  // S(a, k) = sum_b w(a,b) e^{-i k phi_b}
  MatC S(N, 2 * K + 1);
  for_rows(N, ex, [&](int a) {
    cd z1 = std::polar(1.0, h * a);
    std::vector<cd> acc(2 * K + 1, 0.0);
    for (int b = 0; b < N; ++b) {
      cd z2 = std::polar(1.0, h * b);
      double w = 1.0 / std::norm(p.eval(z1, z2));
      for (int k = -K; k <= K; ++k) acc[k + K] += w * std::polar(1.0, -h * double(k) * b);
    }
    for (int k = 0; k <= 2 * K; ++k) S(a, k) = acc[k];
  });
  MatC W = MatC::Zero(2 * J + 1, 2 * K + 1);
  for (int j = -J; j <= J; ++j)
    for (int k = 0; k <= 2 * K; ++k) {
      cd s = 0;
      for (int a = 0; a < N; ++a) s += S(a, k) * std::polar(1.0, -h * double(j) * a);
      W(j + J, k) = s / (double(N) * N);
    }
  return W;
}

MatC torus_samples(const std::function<cd(cd, cd)> &f, int N, Exec ex) {
  const double h = kTwoPi / N;
  MatC out(N, N);
  for_rows(N, ex, [&](int i) {
    cd a = std::polar(1.0, h * (i + 0.5));
    for (int j = 0; j < N; ++j) out(i, j) = f(a, std::polar(1.0, h * (j + 0.5)));
  });
  return out;
}

} // namespace bidisk
