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
#include "bidisk/ideal.hpp"

#include <cmath>

#include "bidisk/stability.hpp"

namespace bidisk {

namespace {

Poly2<cd> as_float(const Poly2<GQ> &p) { return to_float(p); }
Poly2<cd> as_float(const Poly2<cd> &p) { return p; }

UPoly<cd> det_poly(const MatPoly &A) {
  int N = A.rows;
  int deg = N * A.degree(), K = deg + 1;
  std::vector<cd> vals(K), c(K);
  for (int s = 0; s < K; ++s) vals[s] = A.eval(std::polar(1.0, 2 * M_PI * s / K)).determinant();
  double mx = 0;
  for (int j = 0; j < K; ++j) {
    cd v = 0;
    for (int s = 0; s < K; ++s) v += vals[s] * std::polar(1.0, -2 * M_PI * double(j) * s / K);
    c[j] = v / double(K);
    mx = std::max(mx, std::abs(c[j]));
  }
  for (auto &v : c)
    if (std::abs(v) < 1e-12 * mx) v = 0;
  return UPoly<cd>(c);
}

UPoly<cd> torus_factor(const MatPoly &A) {
  UPoly<cd> out = UPoly<cd>::constant(1);
  if (A.rows == 0) return out;
  UPoly<cd> d = det_poly(A);
  if (d.degree() < 1) return out;
  for (auto &cl : cluster_roots(d, roots(d), 1e-7)) {
    if (std::abs(std::abs(cl.center) - 1) > 1e-8) continue;
    cd t = cl.center / std::abs(cl.center);
    UPoly<cd> f(std::vector<cd>{1, -std::conj(t)});
    for (int k = 0; k < cl.multiplicity; ++k) out = out * f;
  }
  return out;
}

template <class S> IdealDescription generators_impl(const Poly2<S> &p) {
  auto sr = check_semistable(p);
  if (!sr.semistable()) throw PreconditionError("input is not semi-stable");
  IdealDescription d;
  d.n = p.n;
  d.m = p.m;
  d.system = canonical_system(p);
  for (auto *A : {&d.system.E1, &d.system.F1, &d.system.F2})
    for (int i = 0; i < A->dim(); ++i) d.generators.push_back(A->entry(i));
  auto rz = common_zeros(p, reflect(p));
  Poly2<S> q = flip2(p);
  auto rq = common_zeros(q, reflect(q));
  if (rz.torus_total != 2 * p.n * p.m - 2 * rq.disk_total)
    throw CrossCheckError("torus count routes disagree");
  d.torus_count = rz.torus_total;
  Poly2<cd> pf = as_float(p);
  d.generator_orders_ok = true;
  for (auto &z : rz.zeros) {
    if (z.region != Region::Torus) continue;
    TorusPoint t;
    t.z1 = z.z1.v / std::abs(z.z1.v);
    t.z2 = z.z2.v / std::abs(z.z2.v);
    t.exact = z.z1.exact.has_value() && z.z2.exact.has_value();
    if (t.exact) {
      t.e1 = *z.z1.exact;
      t.e2 = *z.z2.exact;
    }
    t.multiplicity = z.multiplicity;
    if constexpr (std::is_same_v<S, GQ>) {
      t.order = t.exact ? local_order(p, t.e1, t.e2) : local_order(pf, t.z1, t.z2);
    } else {
      t.order = local_order(pf, t.z1, t.z2);
    }
    for (auto &g : d.generators) {
      int o = local_order(g, t.z1, t.z2, 1e-7);
      if (o >= 0 && o < t.order) d.generator_orders_ok = false;
    }
    d.torus_points.push_back(t);
  }
  auto gh = linfty_multiplier(d.system);
  d.linfty_g = gh.first;
  d.linfty_h = gh.second;
  return d;
}

std::vector<LocalOrderCheck> local_checks(const IdealDescription &d, const Poly2<cd> &qf, const Poly2<GQ> *qe) {
  std::vector<LocalOrderCheck> out;
  for (auto &t : d.torus_points) {
    LocalOrderCheck c;
    c.z1 = t.z1;
    c.z2 = t.z2;
    c.M = t.order;
    c.q_order = (qe && t.exact) ? local_order(*qe, t.e1, t.e2) : local_order(qf, t.z1, t.z2);
    c.ok = c.q_order < 0 || c.q_order >= c.M;
    out.push_back(c);
  }
  return out;
}

void numeric_route(const IdealDescription &, const Poly2<cd> &p, const Poly2<cd> &q, const MembershipOptions &opt,
                   MembershipResult &r) {
  r.mode_used = "numeric";
  Poly2<cd> p1 = d1(p), p2 = d2(p);
  int nm = p.n + p.m;
  auto W = [&](cd z1, cd z2) {
    cd pv = p.eval(z1, z2);
    cd t = z1 * p1.eval(z1, z2) + z2 * p2.eval(z1, z2);
    return std::max(0.0, nm * std::norm(pv) - 2 * std::real(std::conj(pv) * t));
  };
  auto Q = [&](cd z1, cd z2) { return std::norm(q.eval(z1, z2)); };
  int N = opt.start_grid;
  for (int i = 0; i <= opt.doublings; ++i, N *= 2) r.ratios.push_back({N, torus_ratio_max(Q, W, N, opt.exec)});
  size_t L = r.ratios.size();
  double a = r.ratios[L - 3].second, b = r.ratios[L - 1].second;
  if (b == 0) {
    r.growth_per_doubling = 0;
  } else if (a == 0 || !std::isfinite(b)) {
    r.growth_per_doubling = std::numeric_limits<double>::infinity();
  } else {
    r.growth_per_doubling = std::sqrt(b / a) - 1;
  }
  r.bounded = r.growth_per_doubling < opt.growth_tol;
  bool local_ok = true;
  for (auto &c : r.local) local_ok = local_ok && c.ok;
  r.member = r.bounded && local_ok;
}

// Gauss-Jordan reduced row echelon form with partial pivoting.
MatC rref_float(MatC A, double tol) {
  int rows = int(A.rows()), cols = int(A.cols()), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    for (int i = r; i < rows; ++i)
      if (std::abs(A(i, c)) > std::abs(A(piv, c))) piv = i;
    if (std::abs(A(piv, c)) < tol) continue;
    A.row(r).swap(A.row(piv));
    A.row(r) /= A(r, c);
    for (int i = 0; i < rows; ++i)
      if (i != r) A.row(i) -= A(i, c) * A.row(r);
    ++r;
  }
  return A.topRows(r);
}

} // namespace

IdealDescription generators(const Poly2<GQ> &p) { return generators_impl(p); }
IdealDescription generators(const Poly2<cd> &p) { return generators_impl(p); }

int IdealDescription::dim(int j, int k) const { return dim_formula(n, m, torus_count, j, k); }

int dim_formula(int n, int m, int torus_count, int j, int k) {
  if (j < n - 1 || k < m - 1) throw PreconditionError("dimension formula needs j >= n-1 and k >= m-1");
  if (torus_count % 2) throw CrossCheckError("odd torus intersection count");
  return (j + 1) * (k + 1) - torus_count / 2;
}

int dim_P(const Poly2<GQ> &p, int j, int k) {
  if (j < p.n - 1 || k < p.m - 1) throw PreconditionError("dimension formula needs j >= n-1 and k >= m-1");
  if (!check_semistable(p).semistable()) throw PreconditionError("input is not semi-stable");
  auto t = torus_multiplicity_total(p);
  if (!t.agree) throw CrossCheckError("torus count routes disagree");
  return dim_formula(p.n, p.m, t.torus_total, j, k);
}

int dim_P(const Poly2<cd> &p, int j, int k) {
  if (j < p.n - 1 || k < p.m - 1) throw PreconditionError("dimension formula needs j >= n-1 and k >= m-1");
  if (!check_semistable(p).semistable()) throw PreconditionError("input is not semi-stable");
  auto t = torus_multiplicity_total(p);
  if (!t.agree) throw CrossCheckError("torus count routes disagree");
  return dim_formula(p.n, p.m, t.torus_total, j, k);
}

int local_order(const Poly2<cd> &q, cd z1, cd z2, double tol) {
  return homog_expand(q, std::vector<cd>{z1 / std::abs(z1), z2 / std::abs(z2)}, tol).M;
}

int local_order(const Poly2<GQ> &q, const GQ &z1, const GQ &z2) {
  return homog_expand(q, std::vector<GQ>{z1, z2}).M;
}

std::pair<UPoly<cd>, UPoly<cd>> linfty_multiplier(const AglerSystem &sys) {
  UPoly<cd> g = UPoly<cd>::constant(1), h = UPoly<cd>::constant(1);
  if (sys.n >= 1) g = torus_factor(sys.E1m);
  if (sys.m >= 1) h = torus_factor(sys.E2m);
  return {g, h};
}

ExactIdeal exact_ideal(const IdealDescription &d, const Poly2<GQ> &p) {
  if (d.exact_cache) return *d.exact_cache;
  ExactIdeal ei;
  int n = d.n, m = d.m, S = (n + 1) * (m + 1);
  auto idx = [&](int j, int k) { return j * (m + 1) + k; };
  std::vector<VecC> cols;
  auto push = [&](const Poly2<cd> &g, int sa, int sb) {
    VecC v = VecC::Zero(S);
    for (int j = 0; j <= g.n; ++j)
      for (int k = 0; k <= g.m; ++k)
        if (g.at(j, k) != cd(0) && j + sa <= n && k + sb <= m) v(idx(j + sa, k + sb)) = g.at(j, k);
    cols.push_back(v);
  };
  // every monomial multiple of a generator that stays inside P_{n,m}
  for (auto &g : d.generators) {
    double scale = max_abs(g);
    int gn = -1, gm = -1;
    for (int j = 0; j <= g.n; ++j)
      for (int k = 0; k <= g.m; ++k)
        if (std::abs(g.at(j, k)) > 1e-9 * scale) {
          gn = std::max(gn, j);
          gm = std::max(gm, k);
        }
    if (gn < 0) continue;
    for (int a = 0; a + gn <= n; ++a)
      for (int b = 0; b + gm <= m; ++b) push(g, a, b);
  }
  Poly2<GQ> pt = reflect(p);
  push(to_float(pt), 0, 0);
  MatC V(S, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) V.col(c) = cols[c];
  MatC K = numerical_kernel(V.transpose(), 1e-9);
  int c = int(K.cols());
  if (2 * c != d.torus_count) {
    ei.note = "annihilator dimension " + std::to_string(c) + " does not match the torus count";
    d.exact_cache = std::make_shared<ExactIdeal>(ei);
    return ei;
  }
  QMat F(c, S);
  if (c > 0) {
    MatC R = rref_float(K.transpose(), 1e-8);
    if (R.rows() != c) {
      ei.note = "annihilator rank deficient";
      d.exact_cache = std::make_shared<ExactIdeal>(ei);
      return ei;
    }
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < S; ++j) {
        GQ v;
        if (!rationalize(R(i, j), 10000, 1e-7, v)) {
          ei.note = "annihilating functionals are not Gaussian rational";
          d.exact_cache = std::make_shared<ExactIdeal>(ei);
          return ei;
        }
        F(i, j) = v;
      }
    // exact and numerical consistency
    MatC resid = F.to_float() * V;
    if (resid.cwiseAbs().maxCoeff() > 1e-6 * std::max(1.0, V.cwiseAbs().maxCoeff())) {
      ei.note = "rationalized functionals do not annihilate the generators";
      d.exact_cache = std::make_shared<ExactIdeal>(ei);
      return ei;
    }
    for (int i = 0; i < c; ++i) {
      GQ s;
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= m; ++k) s += F(i, idx(j, k)) * pt.at(j, k);
      if (!s.is_zero()) {
        ei.note = "rationalized functionals fail on the reflection";
        d.exact_cache = std::make_shared<ExactIdeal>(ei);
        return ei;
      }
    }
  }
  QMat B = c > 0 ? kernel(F) : QMat::identity(S);
  std::vector<SPoly> gens;
  for (int col = 0; col < B.cols; ++col) {
    Poly2<GQ> g(n, m);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= m; ++k) g.at(j, k) = B(idx(j, k), col);
    gens.push_back(to_spoly(g));
  }
  ei.functionals = F;
  ei.basis = groebner(gens);
  ei.ok = true;
  d.exact_cache = std::make_shared<ExactIdeal>(ei);
  return ei;
}

MembershipResult membership(const IdealDescription &d, const Poly2<GQ> &p, const Poly2<GQ> &q, MemberMode mode,
                            const MembershipOptions &opt) {
  MembershipResult r;
  Poly2<cd> qf = to_float(q);
  r.local = local_checks(d, qf, &q);
  if (mode == MemberMode::Exact) {
    ExactIdeal ei = exact_ideal(d, p);
    if (ei.ok) {
      r.mode_used = "exact";
      r.annihilator_rank = ei.functionals.rows;
      SPoly nf = normal_form(to_spoly(q), ei.basis);
      r.member = nf.is_zero();
      r.remainder = nf.is_zero() ? "0" : to_string(to_poly2(nf));
      return r;
    }
    r.exact_note = ei.note;
  }
  numeric_route(d, to_float(p), qf, opt, r);
  return r;
}

MembershipResult membership(const IdealDescription &d, const Poly2<cd> &p, const Poly2<cd> &q,
                            const MembershipOptions &opt) {
  MembershipResult r;
  r.local = local_checks(d, q, nullptr);
  r.exact_note = "float input";
  numeric_route(d, p, q, opt, r);
  return r;
}

} // namespace bidisk
