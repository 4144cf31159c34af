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
#include "bidisk/gram.hpp"

#include <cmath>
#include <limits>

#include "bidisk/intersect.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

namespace {

struct Grid {
  int n, m;
  int idx(int a, int b) const { return a * (m + 1) + b; }
  int size() const { return (n + 1) * (m + 1); }
};

MatC gram_from_weight(const MatC &W, const Grid &g) {
  int S = g.size();
  MatC G(S, S);
  for (int a1 = 0; a1 <= g.n; ++a1)
    for (int b1 = 0; b1 <= g.m; ++b1)
      for (int a2 = 0; a2 <= g.n; ++a2)
        for (int b2 = 0; b2 <= g.m; ++b2)
          // <z^alpha, z^beta> = w^(beta - alpha)
          G(g.idx(a2, b2), g.idx(a1, b1)) = W(a2 - a1 + g.n, b2 - b1 + g.m);
  return G;
}

std::vector<int> box(const Grid &g, int a0, int a1, int b0, int b1) {
  std::vector<int> s;
  for (int a = a0; a <= a1; ++a)
    for (int b = b0; b <= b1; ++b) s.push_back(g.idx(a, b));
  return s;
}

MatC sub(const MatC &G, const std::vector<int> &r, const std::vector<int> &c) {
  MatC M(r.size(), c.size());
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) M(i, j) = G(r[i], c[j]);
  return M;
}

// kernel matrix (w^beta z^alpha convention) of span of the monomials in s
MatC space_kernel(const MatC &G, const std::vector<int> &s, int S) {
  MatC inv = sub(G, s, s).inverse();
  MatC K = MatC::Zero(S, S);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) K(s[j], s[i]) = inv(i, j);
  return K;
}

std::vector<std::pair<cd, int>> clustered_eigs(const MatC &A) {
  std::vector<std::pair<cd, int>> out;
  if (A.rows() == 0) return out;
  Eigen::ComplexEigenSolver<MatC> es(A, false);
  std::vector<cd> ev;
  for (int i = 0; i < A.rows(); ++i) ev.push_back(es.eigenvalues()(i));
  std::vector<int> used(ev.size(), 0);
  for (size_t i = 0; i < ev.size(); ++i) {
    if (used[i]) continue;
    cd c = ev[i];
    int k = 1;
    used[i] = 1;
    for (size_t j = i + 1; j < ev.size(); ++j)
      if (!used[j] && std::abs(ev[j] - ev[i]) < 1e-4) {
        used[j] = 1;
        c += ev[j];
        ++k;
      }
    out.push_back({c / double(k), k});
  }
  return out;
}

template <class S> GramReport gram_impl(const Poly2<S> &p0, const GramOptions &opt) {
  Poly2<cd> p = [&] {
    if constexpr (std::is_same_v<S, GQ>) return to_float(p0);
    else return p0;
  }();
  StabilityOptions so;
  so.exec = opt.exec;
  auto sr = zero_free_sweep(p, so);
  if (!sr.zero_free_verified || !sr.witnesses.empty())
    throw PreconditionError("weight non-integrable: zeros on or near the closed bidisk");
  int n = p.n, m = p.m;
  Grid g{n, m};
  GramReport rep;
  MatC Gm;
  int N = opt.start_grid;
  Gm = gram_from_weight(weight_fourier(p, n, m, N, opt.exec), g);
  for (;;) {
    int N2 = 2 * N;
    MatC G2 = gram_from_weight(weight_fourier(p, n, m, N2, opt.exec), g);
    rep.grid_change = (G2 - Gm).cwiseAbs().maxCoeff();
    Gm = G2;
    N = N2;
    if (rep.grid_change < opt.tol || N >= opt.max_grid) break;
  }
  rep.grid = N;
  rep.Gamma = Gm;
  int Ssz = g.size();
  std::vector<int> sG = (n >= 1 && m >= 1) ? box(g, 0, n - 1, 0, m - 1) : std::vector<int>{};
  rep.dim_G = int(sG.size());
  if (rep.dim_G > 0) {
    std::vector<int> s1, s2;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b) {
        s1.push_back(g.idx(a + 1, b));
        s2.push_back(g.idx(a, b + 1));
      }
    MatC GG = sub(Gm, sG, sG);
    Eigen::PartialPivLU<MatC> lu(GG);
    rep.T1 = lu.solve(sub(Gm, sG, s1));
    MatC T2 = lu.solve(sub(Gm, sG, s2));
    rep.T2adj = lu.solve(T2.adjoint() * GG);
    rep.commutator = (rep.T1 * rep.T2adj - rep.T2adj * rep.T1).norm();
    // joint spectrum by matching eigenvalues of a generic combination
    const cd gam(0.7351, 0.2213);
    auto X = clustered_eigs(rep.T1), Y = clustered_eigs(rep.T2adj);
    auto L = clustered_eigs(rep.T1 + gam * rep.T2adj);
    for (auto &[th, k] : L) {
      double best = std::numeric_limits<double>::infinity();
      cd bx, by;
      for (auto &x : X)
        for (auto &y : Y) {
          double e = std::abs(x.first + gam * y.first - th);
          if (e < best) { best = e; bx = x.first; by = y.first; }
        }
      rep.joint.push_back({bx, by, k});
    }
  }
  // common zeros of (q, q~) in the open bidisk
  Poly2<S> q = flip2(p0);
  auto ir = common_zeros(q, reflect(q));
  for (auto &z : ir.zeros)
    if (in_open_bidisk(z.z1, z.z2)) rep.disk_zeros.push_back({z.z1.v, z.z2.v, z.multiplicity});
  rep.intersect_count = ir.disk_total;
  rep.spectrum_match = rep.disk_zeros.size() == rep.joint.size();
  for (auto &z : rep.disk_zeros) {
    double best = std::numeric_limits<double>::infinity();
    int km = 0;
    for (auto &j : rep.joint) {
      double e = std::max(std::abs(j.l1 - z.l1), std::abs(j.l2 - z.l2));
      if (e < best) { best = e; km = j.multiplicity; }
    }
    rep.spectrum_mismatch = std::max(rep.spectrum_mismatch, best);
    if (km != z.multiplicity) rep.spectrum_match = false;
  }
  if (rep.spectrum_mismatch > 1e-6) rep.spectrum_match = false;
  // E1 = P_{n-1,m} minus z2 P_{n-1,m-1}
  if (n >= 1) {
    MatC K = space_kernel(Gm, box(g, 0, n - 1, 0, m), Ssz);
    if (m >= 1) K -= space_kernel(Gm, box(g, 0, n - 1, 1, m), Ssz);
    rep.K_E1 = K;
    try {
      AglerSystem sys = canonical_system(p0);
      rep.e1_kernel_diff = (kernel_matrix(sys.E1, n, m) - K).cwiseAbs().maxCoeff();
    } catch (const std::exception &) {
      rep.e1_kernel_diff = -1;
    }
  }
  return rep;
}

} // namespace

GramReport gram_model(const Poly2<GQ> &p, const GramOptions &opt) { return gram_impl(p, opt); }
GramReport gram_model(const Poly2<cd> &p, const GramOptions &opt) { return gram_impl(p, opt); }

} // namespace bidisk
