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
#include "bidisk/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include <unsupported/Eigen/FFT>

#include "bidisk/intersect.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Convergent: return "CONVERGENT";
  case Verdict::Divergent: return "DIVERGENT";
  default: return "INCONCLUSIVE";
  }
}

namespace {

double slope(const std::vector<double> &x, const std::vector<double> &y) {
  double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void require_zero_free(const Poly2<cd> &p) {
  auto r = zero_free_sweep(p);
  if (!r.zero_free_verified) throw PreconditionError("denominator has zeros in the bidisk");
}

GQ det(QMat a) {
  int n = a.rows;
  GQ d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GQ(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      d = -d;
    }
    d *= a(c, c);
    GQ inv = a(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      GQ f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

// p(u + s v, v) as a polynomial in (u, v).
Poly2<GQ> shear(const Poly2<GQ> &p, const GQ &s) {
  int D = p.n + p.m;
  Poly2<GQ> out(D, D);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) {
      if (p.at(j, k).is_zero()) continue;
      // (u + s v)^j v^k
      GQ sp(1);
      std::vector<GQ> spow(j + 1);
      for (int i = 0; i <= j; ++i) {
        spow[i] = sp;
        sp *= s;
      }
      mpz_class b = 1;
      for (int i = 0; i <= j; ++i) {
        // C(j,i) u^(j-i) (s v)^i
        out.at(j - i, i + k) += p.at(j, k) * GQ(mpq_class(b)) * spow[i];
        b = b * (j - i) / (i + 1);
      }
    }
  return out;
}

int vdeg(const Poly2<GQ> &p) {
  for (int k = p.m; k >= 0; --k)
    for (int j = 0; j <= p.n; ++j)
      if (!p.at(j, k).is_zero()) return k;
  return -1;
}

int udeg(const Poly2<GQ> &p) {
  for (int j = p.n; j >= 0; --j)
    for (int k = 0; k <= p.m; ++k)
      if (!p.at(j, k).is_zero()) return j;
  return -1;
}

UPoly<GQ> interpolate(const std::vector<GQ> &x, std::vector<GQ> y) {
  int n = int(x.size());
  // Newton divided differences
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - j]);
  UPoly<GQ> out = UPoly<GQ>::constant(y[n - 1]);
  for (int i = n - 2; i >= 0; --i) {
    out = out * UPoly<GQ>(std::vector<GQ>{-x[i], GQ(1)});
    out = out + UPoly<GQ>::constant(y[i]);
  }
  out.trim();
  return out;
}

GQ random_shear(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> d(-7, 7);
  for (;;) {
    int a = d(rng), b = d(rng);
    int r2 = a * a + b * b;
    if (r2 >= 1 && r2 <= 49) return GQ(mpq_class(a), mpq_class(b));
  }
}

template <class F> ResultantMultiplicity with_shears(unsigned long seed, const char *route, F order) {
  ResultantMultiplicity out;
  out.seed = seed;
  out.route = route;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 5; ++t) {
    GQ s = random_shear(rng);
    int o = order(s);
    for (auto &prev : out.trials)
      if (prev.second == o) {
        out.trials.push_back({s, o});
        out.multiplicity = o;
        return out;
      }
    out.trials.push_back({s, o});
  }
  throw CrossCheckError("sheared resultant orders disagree after 5 shears");
}

} // namespace

ConvergenceVerdict l2_quadrature(const Poly2<cd> &q, const Poly2<cd> &p, const L2Options &opt) {
  require_zero_free(p);
  ConvergenceVerdict v;
  for (int N = opt.start_grid; N <= opt.max_grid; N *= 2) v.estimates.push_back({N, torus_l2(q, p, N, opt.exec)});
  size_t L = v.estimates.size();
  if (L < 3) return v;
  double a = v.estimates[L - 3].second, c = v.estimates[L - 1].second;
  if (c == 0 && a == 0) {
    v.verdict = Verdict::Convergent;
    return v;
  }
  v.last_change = std::abs(c - a) / std::abs(c);
  size_t from = L >= 4 ? L - 4 : 0;
  std::vector<double> lx, ly;
  bool increasing = true;
  for (size_t i = from; i < L; ++i) {
    lx.push_back(std::log(double(v.estimates[i].first)));
    ly.push_back(std::log(std::max(v.estimates[i].second, 1e-300)));
    if (i > from && v.estimates[i].second <= v.estimates[i - 1].second * (1 + opt.converge_tol)) increasing = false;
  }
  v.growth_exponent = slope(lx, ly);
  if (std::isfinite(c) && v.last_change < opt.converge_tol) v.verdict = Verdict::Convergent;
  else if (!std::isfinite(c) || (L >= 4 && increasing && v.growth_exponent > opt.diverge_slope))
    v.verdict = Verdict::Divergent;
  return v;
}

FourierReport fourier_report(const Poly2<cd> &q, const Poly2<cd> &p, int J, int K, const FourierOptions &opt) {
  if (J < 0 || K < 0) throw std::invalid_argument("negative box");
  require_zero_free(p);
  FourierReport r;
  r.J = J;
  r.K = K;
  int N = opt.grid;
  if (N == 0) {
    N = 64;
    while (N < 4 * std::max(J, K)) N *= 2;
  }
  if (2 * J >= N || 2 * K >= N) throw PreconditionError("box exceeds the grid Nyquist bound");
  r.grid = N;
  MatC S = torus_samples([&](cd a, cd b) { return q.eval(a, b) / p.eval(a, b); }, N, opt.exec);
  Eigen::FFT<double> fft;
  std::vector<cd> in(N), out(N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) in[j] = S(i, j);
    fft.fwd(out, in);
    for (int j = 0; j < N; ++j) S(i, j) = out[j];
  }
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) in[i] = S(i, j);
    fft.fwd(out, in);
    for (int i = 0; i < N; ++i) S(i, j) = out[i];
  }
  // half-offset samples: theta = 2 pi (s + 1/2) / N
  r.coef = MatC(J + 1, K + 1);
  for (int j = 0; j <= J; ++j)
    for (int k = 0; k <= K; ++k)
      r.coef(j, k) = S(j, k) * std::polar(1.0, -M_PI * double(j + k) / N) / (double(N) * N);
  int s = std::max(1, std::min(J, K) / 8);
  for (; s <= std::min(J, K); s *= 2) r.boxes.push_back(s);
  for (int b : r.boxes) {
    double a1 = 0, a2 = 0, w = 0;
    for (int j = 0; j <= b; ++j)
      for (int k = 0; k <= b; ++k) {
        double m = std::abs(r.coef(j, k));
        a1 += m;
        a2 += m * m;
        double jk = double(j + 1) * (k + 1);
        w += jk * jk * m * m;
      }
    r.l1.push_back(a1);
    r.l2.push_back(a2);
    r.weighted.push_back(w);
  }
  auto trend = [&](const std::vector<double> &v, bool &plateau) {
    size_t L = v.size();
    if (L < 3) return 0.0;
    double d1 = v[L - 2] - v[L - 3], d2 = v[L - 1] - v[L - 2];
    double g = d2 / std::max(d1, 1e-12 * std::abs(v[L - 1]) + 1e-300);
    plateau = d2 <= opt.plateau_rel * v[L - 1] && g <= opt.plateau_ratio;
    return g;
  };
  r.l1_growth = trend(r.l1, r.l1_plateau);
  r.l2_growth = trend(r.l2, r.l2_plateau);
  r.weighted_growth = trend(r.weighted, r.weighted_plateau);
  return r;
}

std::vector<std::vector<GQ>> taylor_coefficients(const Poly2<GQ> &q, const Poly2<GQ> &p, int J, int K) {
  if (p.at(0, 0).is_zero()) throw PreconditionError("p(0,0) = 0");
  GQ inv = p.at(0, 0).inv();
  std::vector<std::vector<GQ>> a(J + 1, std::vector<GQ>(K + 1));
  for (int j = 0; j <= J; ++j)
    for (int k = 0; k <= K; ++k) {
      GQ s = (j <= q.n && k <= q.m) ? q.at(j, k) : GQ(0);
      for (int u = 0; u <= std::min(j, p.n); ++u)
        for (int v = 0; v <= std::min(k, p.m); ++v) {
          if (u == 0 && v == 0) continue;
          if (!p.at(u, v).is_zero()) s -= p.at(u, v) * a[j - u][k - v];
        }
      a[j][k] = s * inv;
    }
  return a;
}

namespace {

// p times the lcm of its denominators; integer entries keep the determinants cheap
Poly2<GQ> integral(const Poly2<GQ> &p) {
  mpz_class l = 1;
  for (auto &c : p.a) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den_mpz_t());
  }
  return GQ(mpq_class(l)) * p;
}

} // namespace

UPoly<GQ> sheared_resultant(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &s);

namespace {

// Squarefree split of the sheared resultant; all zeros of one pair share it.
std::vector<UPoly<GQ>> squarefree_parts(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &s) {
  static std::mutex mu;
  static std::map<std::string, std::vector<UPoly<GQ>>> cache;
  std::string key = to_string(p1) + "|" + to_string(p2) + "|" + to_string(s);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  UPoly<GQ> R = sheared_resultant(p1, p2, s);
  if (R.is_zero()) throw PreconditionError("common factor");
  auto parts = squarefree(R);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 256) cache.clear();
  cache.emplace(key, parts);
  return parts;
}

} // namespace

UPoly<GQ> sheared_resultant(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &s) {
  Poly2<GQ> f = integral(shear(p1, s)), g = integral(shear(p2, s));
  int a = vdeg(f), b = vdeg(g);
  if (a < 0 || b < 0) throw PreconditionError("zero polynomial");
  if (a == 0 && b == 0) return UPoly<GQ>::constant(1);
  int D = b * std::max(udeg(f), 0) + a * std::max(udeg(g), 0);
  std::vector<GQ> xs, ys;
  for (int t = 0; t <= D; ++t) {
    GQ u(t + 1);
    auto slice = [&](const Poly2<GQ> &h, int deg) {
      std::vector<GQ> c(deg + 1);
      for (int k = 0; k <= deg; ++k) {
        GQ acc;
        for (int j = h.n; j >= 0; --j) acc = acc * u + h.at(j, k);
        c[k] = acc;
      }
      return c;
    };
    auto cf = slice(f, a), cg = slice(g, b);
    int n = a + b;
    QMat S(n, n);
    for (int r = 0; r < b; ++r)
      for (int k = 0; k <= a; ++k) S(r, r + a - k) = cf[k];
    for (int r = 0; r < a; ++r)
      for (int k = 0; k <= b; ++k) S(b + r, r + b - k) = cg[k];
    xs.push_back(u);
    ys.push_back(det(S));
  }
  return interpolate(xs, ys);
}

ResultantMultiplicity resultant_multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2,
                                             unsigned long seed) {
  Poly2<GQ> f = translate(p1, l1, l2), g = translate(p2, l1, l2);
  return with_shears(seed, "translate", [&](const GQ &s) {
    UPoly<GQ> R = sheared_resultant(f, g, s);
    if (R.is_zero()) throw PreconditionError("common factor");
    int k = 0;
    while (R.c[k].is_zero()) ++k;
    return k;
  });
}

ResultantMultiplicity resultant_multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, cd l1, cd l2,
                                             unsigned long seed) {
  GQ e1, e2;
  if (rationalize(l1, 100000, 1e-13, e1) && rationalize(l2, 100000, 1e-13, e2) && p1(e1, e2).is_zero() &&
      p2(e1, e2).is_zero())
    return resultant_multiplicity(p1, p2, e1, e2, seed);
  return with_shears(seed, "squarefree", [&](const GQ &s) {
    cd u = l1 - s.to_cd() * l2;
    auto parts = squarefree_parts(p1, p2, s);
    int best = 0;
    double bestv = 1e-6;
    for (size_t i = 0; i < parts.size(); ++i) {
      UPoly<cd> f = to_float(parts[i]);
      if (f.degree() < 1) continue;
      double sc = 0;
      for (auto &c : f.c) sc = std::max(sc, std::abs(c));
      double v = std::abs(f.eval(u)) / (sc * std::max(1.0, std::pow(std::abs(u), f.degree())));
      if (v < bestv) {
        bestv = v;
        best = int(i) + 1;
      }
    }
    return best;
  });
}

} // namespace bidisk
