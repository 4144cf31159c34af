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
#include "bidisk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <tuple>

namespace bidisk {

QMat QMat::identity(int n) {
  QMat r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = GQ(1);
  return r;
}

MatC QMat::to_float() const {
  MatC m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).to_cd();
  return m;
}

QMat operator*(const QMat &a, const QMat &b) {
  if (a.cols != b.rows) throw std::invalid_argument("QMat shape mismatch");
  QMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const GQ &x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}
QMat operator+(const QMat &a, const QMat &b) {
  QMat r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}
QMat operator-(const QMat &a, const QMat &b) {
  QMat r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
  return r;
}
QMat scaled(const QMat &a, const GQ &s) {
  QMat r = a;
  for (auto &x : r.v) x *= s;
  return r;
}
QMat shifted(const QMat &a, const GQ &s) {
  QMat r = a;
  for (int i = 0; i < std::min(r.rows, r.cols); ++i) r(i, i) -= s;
  return r;
}
QMat power(const QMat &a, int e) {
  QMat r = QMat::identity(a.rows), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}
QMat vstack(const QMat &a, const QMat &b) {
  QMat r(a.rows + b.rows, a.cols);
  std::copy(a.v.begin(), a.v.end(), r.v.begin());
  std::copy(b.v.begin(), b.v.end(), r.v.begin() + a.v.size());
  return r;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat &a) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int p = -1;
    for (int i = r; i < a.rows; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a(p, j), a(r, j));
    GQ inv = a(r, c).inv();
    for (int j = c; j < a.cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      GQ f = a(i, c);
      for (int j = c; j < a.cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}
} // namespace

int rank(QMat a) { return int(rref(a).size()); }

QMat kernel(QMat a) {
  auto piv = rref(a);
  std::vector<int> is_piv(a.cols, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = int(i);
  std::vector<int> free;
  for (int c = 0; c < a.cols; ++c)
    if (is_piv[c] < 0) free.push_back(c);
  QMat k(a.cols, int(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], int(f)) = GQ(1);
    for (size_t i = 0; i < piv.size(); ++i) k(piv[i], int(f)) = -a(int(i), free[f]);
  }
  return k;
}

UPoly<GQ> charpoly(const QMat &A) {
  // Berkowitz: returns coefficients of det(tI - A)
  int n = A.rows;
  if (n == 0) return UPoly<GQ>::constant(GQ(1));
  std::vector<GQ> vect{GQ(1), -A(0, 0)}; // highest power first
  for (int r = 1; r < n; ++r) {
    // C = A[r, 0:r], R = A[0:r, r], Asub = A[0:r,0:r], a = A[r,r]
    std::vector<GQ> col(r);
    for (int i = 0; i < r; ++i) col[i] = A(i, r);
    std::vector<GQ> q(r + 2);
    q[0] = GQ(1);
    q[1] = -A(r, r);
    // Toeplitz column entries: -C A^k R
    std::vector<GQ> cur = col;
    for (int k = 0; k < r; ++k) {
      GQ s;
      for (int i = 0; i < r; ++i) s += A(r, i) * cur[i];
      q[k + 2] = -s;
      std::vector<GQ> nxt(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (!A(i, j).is_zero() && !cur[j].is_zero()) nxt[i] += A(i, j) * cur[j];
      cur.swap(nxt);
    }
    // multiply lower-triangular Toeplitz matrix (first column q) by vect
    std::vector<GQ> out(r + 2);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, int(vect.size()) - 1); ++j) out[i] += q[i - j] * vect[j];
    vect.swap(out);
  }
  std::reverse(vect.begin(), vect.end());
  return UPoly<GQ>(vect);
}

QMat poly_eval(const UPoly<GQ> &p, const QMat &a) {
  QMat r(a.rows, a.cols);
  for (int k = p.degree(); k >= 0; --k) {
    r = r * a;
    for (int i = 0; i < a.rows; ++i) r(i, i) += p.c[k];
  }
  return r;
}

GQ trace(const QMat &a) {
  GQ t;
  for (int i = 0; i < a.rows; ++i) t += a(i, i);
  return t;
}

// --------------------------------------------------------------- float

std::vector<cd> roots(const UPoly<cd> &p0) {
  UPoly<cd> p = p0;
  p.trim();
  int d = p.degree();
  std::vector<cd> out;
  if (d <= 0) return out;
  // leading zeros at the origin
  int z = 0;
  while (z < d && p.c[z] == cd(0)) ++z;
  for (int i = 0; i < z; ++i) out.push_back(0);
  int dd = d - z;
  if (dd == 0) return out;
  MatC C = MatC::Zero(dd, dd);
  cd lc = p.c[d];
  for (int i = 0; i < dd; ++i) C(0, i) = -p.c[d - 1 - i] / lc;
  for (int i = 1; i < dd; ++i) C(i, i - 1) = 1;
  Eigen::ComplexEigenSolver<MatC> es(C, false);
  for (int i = 0; i < dd; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

cd polish_root(const UPoly<cd> &p, cd z, int iters) {
  UPoly<cd> dp = p.derivative();
  for (int i = 0; i < iters; ++i) {
    cd f = p.eval(z), g = dp.eval(z);
    if (std::abs(g) == 0) break;
    cd step = f / g;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

std::vector<cd> taylor_shift(const UPoly<cd> &p, cd z) {
  std::vector<cd> c = p.c;
  int n = int(c.size());
  for (int k = 0; k < n; ++k)
    for (int j = n - 2; j >= k; --j) c[j] += z * c[j + 1];
  return c;
}

namespace {
int numerical_order(const UPoly<cd> &p, cd z, double tol) {
  auto t = taylor_shift(p, z);
  double scale = 0;
  double rz = std::max(1.0, std::abs(z));
  for (size_t k = 0; k < t.size(); ++k) scale = std::max(scale, std::abs(t[k]) * std::pow(rz, double(k)));
  for (size_t k = 0; k < t.size(); ++k)
    if (std::abs(t[k]) * std::pow(rz, double(k)) > tol * scale) return int(k);
  return int(t.size());
}
} // namespace

std::vector<RootCluster> cluster_roots(const UPoly<cd> &p, const std::vector<cd> &rts, double tol) {
  int n = int(rts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::tuple<double, int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(std::abs(rts[i] - rts[j]), i, j);
  std::sort(pairs.begin(), pairs.end());
  auto members = [&](int root) {
    std::vector<int> mm;
    for (int i = 0; i < n; ++i)
      if (find(i) == root) mm.push_back(i);
    return mm;
  };
  for (auto &[dist, i, j] : pairs) {
    int a = find(i), b = find(j);
    if (a == b) continue;
    if (dist > 0.5 * std::max(1.0, std::abs(rts[i]))) break;
    auto ma = members(a), mb = members(b);
    cd c = 0;
    for (int k : ma) c += rts[k];
    for (int k : mb) c += rts[k];
    int sz = int(ma.size() + mb.size());
    c /= double(sz);
    if (dist <= tol * std::max(1.0, std::abs(c)) || numerical_order(p, c, tol) >= sz) parent[b] = a;
  }
  std::vector<RootCluster> out;
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (seen[r]) continue;
    seen[r] = 1;
    auto mm = members(r);
    cd c = 0;
    for (int k : mm) c += rts[k];
    c /= double(mm.size());
    if (mm.size() == 1) c = polish_root(p, c);
    out.push_back({c, int(mm.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster &x, const RootCluster &y) {
    if (x.center.real() != y.center.real()) return x.center.real() < y.center.real();
    return x.center.imag() < y.center.imag();
  });
  return out;
}

std::vector<RootCluster> cluster_roots(const UPoly<cd> &p, double tol) {
  return cluster_roots(p, roots(p), tol);
}

int numerical_rank(const MatC &a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<MatC> svd(a);
  auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

MatC numerical_kernel(const MatC &a, double rel_tol) {
  int n = int(a.cols());
  if (a.rows() == 0) return MatC::Identity(n, n);
  Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullV);
  auto s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * std::max(s(0), 1e-300)) ++r;
  return svd.matrixV().rightCols(n - r);
}

} // namespace bidisk
