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
#include "bidisk/intersect.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace bidisk {

namespace {

constexpr double kPointTol = 1e-8;

struct ChartPt {
  cd x, y;
  int mult = 0;
  bool exact = false;
  GQ ex, ey;
};

template <class S> S ipow(const S &b, int e) {
  S r(1);
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

template <class S> Poly2<S> translate_impl(const Poly2<S> &p, const S &l1, const S &l2) {
  // binomial tables
  int N = std::max(p.n, p.m);
  std::vector<std::vector<long>> C(N + 1, std::vector<long>(N + 1, 0));
  for (int i = 0; i <= N; ++i) {
    C[i][0] = 1;
    for (int k = 1; k <= i; ++k) C[i][k] = C[i - 1][k - 1] + (k <= i - 1 ? C[i - 1][k] : 0);
  }
  std::vector<S> P1(p.n + 1), P2(p.m + 1);
  for (int e = 0; e <= p.n; ++e) P1[e] = ipow(l1, e);
  for (int e = 0; e <= p.m; ++e) P2[e] = ipow(l2, e);
  Poly2<S> r(p.n, p.m);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) {
      if (ScalarTraits<S>::is_zero(p.at(j, k))) continue;
      for (int a = 0; a <= j; ++a)
        for (int b = 0; b <= k; ++b)
          r.at(a, b) += p.at(j, k) * S(C[j][a] * C[k][b]) * P1[j - a] * P2[k - b];
    }
  return r;
}

double chordal(const SphereCoord &a, const SphereCoord &b) {
  if (a.inf && b.inf) return 0;
  if (a.inf) return 2.0 / std::sqrt(1 + std::norm(b.v));
  if (b.inf) return 2.0 / std::sqrt(1 + std::norm(a.v));
  return 2.0 * std::abs(a.v - b.v) / std::sqrt((1 + std::norm(a.v)) * (1 + std::norm(b.v)));
}

SphereCoord to_sphere(cd x, bool flipped, bool exact, const GQ &ex) {
  SphereCoord s;
  if (!flipped) {
    s.v = x;
    if (exact) s.exact = ex;
    return s;
  }
  if (exact ? ex.is_zero() : std::abs(x) < 1e-13) {
    s.inf = true;
    return s;
  }
  s.v = exact ? ex.inv().to_cd() : 1.0 / x;
  if (exact) s.exact = ex.inv();
  return s;
}

// Distinct roots of an exact polynomial with their squarefree index.
std::vector<std::pair<cd, int>> roots_with_index(const UPoly<GQ> &chi) {
  std::vector<std::pair<cd, int>> out;
  auto sf = squarefree(chi);
  for (size_t i = 0; i < sf.size(); ++i) {
    if (sf[i].degree() < 1) continue;
    UPoly<cd> f = to_float(monic(sf[i]));
    for (cd r : roots(f)) out.push_back({polish_root(f, r, 20), int(i) + 1});
  }
  return out;
}

const std::vector<GQ> &gammas() {
  static const std::vector<GQ> g = {GQ(3, 1), GQ(2, -5), GQ(7, 3), GQ(-4, 9), GQ(11, 6),
                                    GQ(5, -13), GQ(17, 2), GQ(-9, -19), GQ(23, 7), GQ(1, 29)};
  return g;
}

bool verify_exact(const Poly2<GQ> &f1, const Poly2<GQ> &f2, cd x, cd y, GQ &ex, GQ &ey) {
  if (!rationalize(x, 100000, 1e-9, ex) || !rationalize(y, 100000, 1e-9, ey)) return false;
  return f1(ex, ey).is_zero() && f2(ex, ey).is_zero();
}

std::vector<ChartPt> solve_exact_chart(const Poly2<GQ> &f1, const Poly2<GQ> &f2) {
  Quotient Q = quotient_ring({f1, f2});
  int D = Q.dim();
  std::vector<ChartPt> out;
  if (D == 0) return out;
  auto X = roots_with_index(charpoly(Q.M1));
  auto Y = roots_with_index(charpoly(Q.M2));
  double sx = 0, sy = 0;
  for (auto &v : X) sx = std::max(sx, std::abs(v.first));
  for (auto &v : Y) sy = std::max(sy, std::abs(v.first));
  for (const GQ &g : gammas()) {
    cd gc = g.to_cd();
    double scale = 1 + sx + std::abs(gc) * sy;
    QMat L = Q.M1 + scaled(Q.M2, g);
    auto T = roots_with_index(charpoly(L));
    std::vector<ChartPt> pts;
    bool ok = true;
    std::vector<std::pair<int, int>> used;
    for (auto &[th, idx] : T) {
      double e1 = std::numeric_limits<double>::infinity(), e2 = e1;
      int bi = -1, bj = -1;
      for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < Y.size(); ++j) {
          double e = std::abs(X[i].first + gc * Y[j].first - th);
          if (e < e1) { e2 = e1; e1 = e; bi = int(i); bj = int(j); }
          else if (e < e2) e2 = e;
        }
      if (bi < 0 || e1 > 1e-7 * scale || e2 < 1e-5 * scale) { ok = false; break; }
      for (auto &u : used)
        if (u.first == bi && u.second == bj) ok = false;
      if (!ok) break;
      used.push_back({bi, bj});
      ChartPt c;
      c.x = X[bi].first;
      c.y = Y[bj].first;
      c.mult = idx;
      pts.push_back(c);
    }
    if (!ok) continue;
    for (auto &c : pts) {
      GQ ex, ey;
      if (verify_exact(f1, f2, c.x, c.y, ex, ey)) {
        c.exact = true;
        c.ex = ex;
        c.ey = ey;
        c.x = ex.to_cd();
        c.y = ey.to_cd();
        if (multiplicity_from_quotient(Q, ex, ey) != c.mult)
          throw CrossCheckError("multiplicity mismatch between quotient routes");
      }
    }
    return pts;
  }
  throw CrossCheckError("no generic separating combination found");
}

UPoly<cd> slice_y(const Poly2<cd> &f, cd x) {
  std::vector<cd> c(f.m + 1);
  for (int k = 0; k <= f.m; ++k) {
    cd v = 0;
    for (int j = f.n; j >= 0; --j) v = v * x + f.at(j, k);
    c[k] = v;
  }
  return UPoly<cd>(c);
}

// Res_y with formal y-degrees, sampled on the unit circle and interpolated.
UPoly<cd> float_resultant(const Poly2<cd> &f1, const Poly2<cd> &f2) {
  int m1 = f1.m, m2 = f2.m, N = m1 + m2;
  int B = f1.n * m2 + f2.n * m1;
  int K = B + 1;
  std::vector<cd> vals(K);
  for (int s = 0; s < K; ++s) {
    cd x = std::polar(1.0, 2 * M_PI * s / K);
    if (N == 0) { vals[s] = 1; continue; }
    MatC S = MatC::Zero(N, N);
    std::vector<cd> a(m1 + 1), b(m2 + 1);
    for (int k = 0; k <= m1; ++k) { cd v = 0; for (int j = f1.n; j >= 0; --j) v = v * x + f1.at(j, k); a[k] = v; }
    for (int k = 0; k <= m2; ++k) { cd v = 0; for (int j = f2.n; j >= 0; --j) v = v * x + f2.at(j, k); b[k] = v; }
    for (int r = 0; r < m2; ++r)
      for (int k = 0; k <= m1; ++k) S(r, r + m1 - k) = a[k];
    for (int r = 0; r < m1; ++r)
      for (int k = 0; k <= m2; ++k) S(m2 + r, r + m2 - k) = b[k];
    vals[s] = Eigen::FullPivLU<MatC>(S).determinant();
  }
  std::vector<cd> c(K);
  double mx = 0;
  for (int j = 0; j < K; ++j) {
    cd v = 0;
    for (int s = 0; s < K; ++s) v += vals[s] * std::polar(1.0, -2 * M_PI * double(j) * s / K);
    c[j] = v / double(K);
    mx = std::max(mx, std::abs(c[j]));
  }
  double nf = std::pow(1 + max_abs(f1), m2) * std::pow(1 + max_abs(f2), m1);
  if (mx < 1e-11 * nf) throw PreconditionError("common factor: resultant vanishes identically");
  for (auto &v : c)
    if (std::abs(v) < 1e-13 * mx) v = 0;
  return UPoly<cd>(c);
}

std::vector<ChartPt> solve_float_chart(const Poly2<cd> &f1, const Poly2<cd> &f2) {
  std::vector<ChartPt> out;
  UPoly<cd> R = float_resultant(f1, f2);
  if (R.degree() < 1) return out;
  double n1 = max_abs(f1), n2 = max_abs(f2);
  for (auto &cl : cluster_roots(R, roots(R), 1e-7)) {
    cd a = cl.center;
    if (std::abs(a) > 1 + 1e-6) continue;
    UPoly<cd> g1 = slice_y(f1, a), g2 = slice_y(f2, a);
    g1.trim(1e-12 * n1);
    g2.trim(1e-12 * n2);
    const UPoly<cd> &g = (g1.degree() >= 1) ? g1 : g2;
    if (g.degree() < 1) continue;
    int acc = 0;
    for (auto &yc : cluster_roots(g, roots(g), 1e-7)) {
      cd b = yc.center;
      if (std::abs(f1.eval(a, b)) > 1e-6 * (1 + n1) || std::abs(f2.eval(a, b)) > 1e-6 * (1 + n2)) continue;
      int mu = dual_space_multiplicity(f1, f2, a, b);
      if (mu == 0) continue;
      acc += mu;
      if (std::abs(b) > 1 + 1e-6) continue;
      ChartPt c;
      c.x = a;
      c.y = b;
      c.mult = mu;
      out.push_back(c);
    }
    if (acc > cl.multiplicity) throw CrossCheckError("local multiplicities exceed resultant cluster size");
  }
  return out;
}

template <class S, class Solver>
IntersectionReport assemble(const Poly2<S> &p1, const Poly2<S> &p2, Solver solve, const char *route) {
  if (p1.is_zero() || p2.is_zero()) throw PreconditionError("zero polynomial");
  IntersectionReport rep;
  rep.route = route;
  rep.bideg1 = {p1.n, p1.m};
  rep.bideg2 = {p2.n, p2.m};
  rep.bezout = p1.n * p2.m + p2.n * p1.m;
  for (int chart = 0; chart < 4; ++chart) {
    auto pts = solve(to_chart(p1, chart), to_chart(p2, chart));
    for (auto &c : pts) {
      if (std::abs(c.x) > 1 + kPointTol || std::abs(c.y) > 1 + kPointTol) continue;
      LocatedZero z;
      z.z1 = to_sphere(c.x, chart & 1, c.exact, c.ex);
      z.z2 = to_sphere(c.y, chart & 2, c.exact, c.ey);
      bool dup = false;
      for (auto &o : rep.zeros)
        if (chordal(o.z1, z.z1) < kPointTol && chordal(o.z2, z.z2) < kPointTol) {
          dup = true;
          if (o.multiplicity != c.mult) throw CrossCheckError("chart multiplicities disagree");
        }
      if (dup) continue;
      z.multiplicity = c.mult;
      z.chart = chart;
      z.x = c.x;
      z.y = c.y;
      z.exact = c.exact;
      z.ex = c.ex;
      z.ey = c.ey;
      z.region = classify(z.z1, z.z2);
      rep.zeros.push_back(z);
    }
  }
  for (auto &z : rep.zeros) {
    rep.total += z.multiplicity;
    if (z.region == Region::Torus) rep.torus_total += z.multiplicity;
    if (in_open_bidisk(z.z1, z.z2)) rep.disk_total += z.multiplicity;
  }
  if (rep.total != rep.bezout)
    throw CrossCheckError("intersection total " + std::to_string(rep.total) + " differs from Bezout count " +
                          std::to_string(rep.bezout));
  return rep;
}

Poly2<GQ> trimmed(const Poly2<GQ> &p) {
  auto nb = p.natural_bidegree();
  if (nb.first < 0) return Poly2<GQ>(0, 0);
  return p.with_bidegree(nb.first, nb.second);
}

UPoly<GQ> restrict_y0(const Poly2<GQ> &p) { return p.col(0); }

int order_at_zero(const UPoly<GQ> &u) {
  int k = 0;
  while (k <= u.degree() && u.c[k].is_zero()) ++k;
  return k;
}

Poly2<GQ> divide_by_y(const Poly2<GQ> &p) {
  Poly2<GQ> r(p.n, std::max(p.m - 1, 0));
  for (int j = 0; j <= p.n; ++j)
    for (int k = 1; k <= p.m; ++k) r.at(j, k - 1) = p.at(j, k);
  return r;
}

} // namespace

std::string region_name(Region r) {
  switch (r) {
  case Region::DxDinv: return "DxDinv";
  case Region::Torus: return "T2";
  case Region::DinvxD: return "DinvxD";
  default: return "other";
  }
}

Region classify(const SphereCoord &a, const SphereCoord &b, double tol) {
  double ra = a.modulus(), rb = b.modulus();
  auto on = [&](double r) { return std::abs(r - 1) <= tol; };
  if (on(ra) && on(rb)) return Region::Torus;
  if (ra < 1 - tol && rb > 1 + tol) return Region::DxDinv;
  if (ra > 1 + tol && rb < 1 - tol) return Region::DinvxD;
  return Region::Other;
}

bool in_open_bidisk(const SphereCoord &a, const SphereCoord &b, double tol) {
  return a.modulus() < 1 - tol && b.modulus() < 1 - tol;
}

Poly2<GQ> translate(const Poly2<GQ> &p, const GQ &l1, const GQ &l2) { return translate_impl(p, l1, l2); }
Poly2<cd> translate(const Poly2<cd> &p, cd l1, cd l2) { return translate_impl(p, l1, l2); }

IntersectionReport common_zeros(const Poly2<GQ> &p1, const Poly2<GQ> &p2, unsigned) {
  return assemble(p1, p2, solve_exact_chart, "groebner");
}

IntersectionReport common_zeros(const Poly2<cd> &p1, const Poly2<cd> &p2, unsigned) {
  return assemble(p1, p2, solve_float_chart, "float");
}

int multiplicity_from_quotient(const Quotient &Q, const GQ &l1, const GQ &l2) {
  int D = Q.dim();
  if (D == 0) return 0;
  QMat A = power(shifted(Q.M1, l1), D), B = power(shifted(Q.M2, l2), D);
  return D - rank(vstack(A, B));
}

int multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2) {
  return multiplicity_from_quotient(quotient_ring({p1, p2}), l1, l2);
}

int multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, cd l1, cd l2) {
  GQ e1, e2;
  if (rationalize(l1, 100000, 1e-12, e1) && rationalize(l2, 100000, 1e-12, e2) && p1(e1, e2).is_zero() &&
      p2(e1, e2).is_zero())
    return multiplicity(p1, p2, e1, e2);
  for (auto &c : solve_exact_chart(p1, p2))
    if (std::abs(c.x - l1) < 1e-6 * (1 + std::abs(l1)) && std::abs(c.y - l2) < 1e-6 * (1 + std::abs(l2)))
      return c.mult;
  return 0;
}

int multiplicity(const Poly2<cd> &p1, const Poly2<cd> &p2, cd l1, cd l2, double tol) {
  return dual_space_multiplicity(p1, p2, l1, l2, tol);
}

int dual_space_multiplicity(const Poly2<cd> &p1, const Poly2<cd> &p2, cd l1, cd l2, double tol, int dmax) {
  Poly2<cd> g[2] = {translate(p1, l1, l2), translate(p2, l1, l2)};
  for (auto &q : g) {
    double s = max_abs(q);
    if (s == 0) throw PreconditionError("zero polynomial");
    if (std::abs(q.at(0, 0)) > 1e-6 * s) return 0;
    for (auto &v : q.a) v /= s;
    q.at(0, 0) = 0;
  }
  int prev = 1;
  for (int d = 1; d <= dmax; ++d) {
    // monomials of total degree <= d
    std::map<std::pair<int, int>, int> col;
    for (int t = 0; t <= d; ++t)
      for (int a = t; a >= 0; --a) col[{a, t - a}] = int(col.size());
    std::vector<std::vector<std::pair<int, cd>>> rows;
    for (auto &q : g)
      for (int t = 0; t <= d - 1; ++t)
        for (int a = 0; a <= t; ++a) {
          int b = t - a;
          std::vector<std::pair<int, cd>> row;
          for (int j = 0; j <= q.n; ++j)
            for (int k = 0; k <= q.m; ++k) {
              if (q.at(j, k) == cd(0) || j + a + k + b > d) continue;
              row.push_back({col[{j + a, k + b}], q.at(j, k)});
            }
          rows.push_back(row);
        }
    MatC S = MatC::Zero(std::max<int>(1, int(rows.size())), int(col.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (auto &[c, v] : rows[r]) S(r, c) = v;
    // entries are normalized to max 1, so the threshold is absolute
    Eigen::JacobiSVD<MatC> svd(S);
    int rk = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > tol) ++rk;
    int nul = int(col.size()) - rk;
    if (nul == prev) return nul;
    prev = nul;
  }
  throw CrossCheckError("dual space did not stabilize");
}

int fulton_reduce(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2, int step_budget) {
  Poly2<GQ> F = trimmed(translate(p1, l1, l2)), G = trimmed(translate(p2, l1, l2));
  int acc = 0;
  for (int step = 0; step < step_budget; ++step) {
    if (F.is_zero() || G.is_zero()) throw PreconditionError("zero polynomial in reduction");
    if (!F.at(0, 0).is_zero() || !G.at(0, 0).is_zero()) return acc;
    UPoly<GQ> f = restrict_y0(F), g = restrict_y0(G);
    int r = f.degree(), s = g.degree();
    if (r < 0 && s < 0) throw PreconditionError("common component through the point");
    if (r < 0) {
      acc += order_at_zero(g);
      F = trimmed(divide_by_y(F));
      continue;
    }
    if (s < 0) {
      acc += order_at_zero(f);
      G = trimmed(divide_by_y(G));
      continue;
    }
    if (r > s) {
      std::swap(F, G);
      std::swap(f, g);
      std::swap(r, s);
    }
    G = trimmed(f.lead() * G - g.lead() * shift(F, s - r, 0));
  }
  throw PreconditionError("Fulton reduction exceeded its step budget");
}

template <class S> static TorusTotal torus_total_impl(const Poly2<S> &p) {
  TorusTotal t;
  auto r = common_zeros(p, reflect(p));
  t.torus_total = r.torus_total;
  Poly2<S> q = flip2(p);
  auto r2 = common_zeros(q, reflect(q));
  t.disk_total = r2.disk_total;
  t.via_disk = 2 * p.n * p.m - 2 * t.disk_total;
  t.agree = t.via_disk == t.torus_total;
  return t;
}

TorusTotal torus_multiplicity_total(const Poly2<GQ> &p) { return torus_total_impl(p); }
TorusTotal torus_multiplicity_total(const Poly2<cd> &p) { return torus_total_impl(p); }

} // namespace bidisk
