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
#include "bidisk/boundary.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bidisk/intersect.hpp"
#include "bidisk/linalg.hpp"

namespace bidisk {

namespace {

template <class S> Poly2<S> rotate(const Poly2<S> &p, const std::vector<S> &pt) {
  Poly2<S> r(p.n, p.m);
  S a(1);
  for (int j = 0; j <= p.n; ++j) {
    S b = a;
    for (int k = 0; k <= p.m; ++k) {
      r.at(j, k) = p.at(j, k) * b;
      b = b * pt[1];
    }
    a = a * pt[0];
  }
  return r;
}

template <class S> void check_point(const std::vector<S> &pt, size_t d) {
  if (pt.size() != d) throw std::invalid_argument("point dimension mismatch");
  for (auto &u : pt)
    if (!on_torus(u)) throw PreconditionError("point is not on the torus");
}

// Homogeneous pieces of p(pt (1 - zeta)).
template <class S> struct Pieces {
  std::vector<HForm<S>> f;
  int M = -1;
  HForm<S> at(int d) const { return d < int(f.size()) ? f[d] : HForm<S>::zero(d); }
};

template <class S> Pieces<S> pieces(const Poly2<S> &p, const std::vector<S> &pt, double tol) {
  auto ex = homog_expand(rotate(p, pt), std::vector<S>{S(1), S(1)}, tol);
  Pieces<S> out;
  out.M = ex.M;
  for (size_t d = 0; d < ex.forms.size(); ++d) out.f.push_back(to_hform(ex.forms[d], int(d)));
  return out;
}

HForm<cd> as_float(const HForm<GQ> &h) {
  HForm<cd> r = HForm<cd>::zero(h.deg);
  for (int i = 0; i <= h.deg; ++i) r.c[i] = h.c[i].to_cd();
  return r;
}
HForm<cd> as_float(const HForm<cd> &h) {
  HForm<cd> r = h;
  double mx = 0;
  for (auto &x : r.c) mx = std::max(mx, std::abs(x));
  for (auto &x : r.c) {
    if (std::abs(x.real()) <= 1e-12 * mx) x.real(0);
    if (std::abs(x.imag()) <= 1e-12 * mx) x.imag(0);
  }
  return r;
}

std::string text(const HForm<GQ> &h) { return to_string(h); }
std::string text(const HForm<cd> &h) { return to_string(as_float(h)); }
std::string text(const GQ &z) { return to_string(z); }
std::string text(cd z) {
  double s = std::abs(z);
  if (std::abs(z.real()) <= 1e-12 * s) z.real(0);
  if (std::abs(z.imag()) <= 1e-12 * s) z.imag(0);
  std::ostringstream os;
  os.precision(12);
  if (z.imag() == 0) os << z.real();
  else os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

template <class S> S to_s(cd z);
template <> cd to_s<cd>(cd z) { return z; }
template <> GQ to_s<GQ>(cd z) {
  GQ g;
  if (!rationalize(z, 1024, 1e-3, g)) throw std::logic_error("ray direction not rationalizable");
  return g;
}

bool rhp_zero_free(const HForm<cd> &P) {
  // zeros of a binary form in RHP^2 <=> a root x = zeta/eta off the closed negative axis
  std::vector<cd> c(P.c.begin(), P.c.end());
  UPoly<cd> u(c);
  double mx = 0;
  for (auto &x : c) mx = std::max(mx, std::abs(x));
  u.trim(1e-12 * mx);
  if (u.degree() < 1) return true;
  for (cd r : roots(u)) {
    double a = std::abs(r);
    if (a <= 1e-9) continue;
    if (r.real() > -1e-7 * a || std::abs(r.imag()) > 1e-7 * a) return false;
  }
  return true;
}

template <class S> double sample_min(const MPoly<S> &P, int M, unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> th(-M_PI / 2 * 0.999, M_PI / 2 * 0.999), rad(0.05, 1.0);
  double nrm = 0;
  for (auto &kv : P.terms) nrm += ScalarTraits<S>::abs(kv.second);
  double best = std::numeric_limits<double>::infinity();
  std::vector<cd> z(P.d);
  for (int s = 0; s < count; ++s) {
    double mz = 0;
    for (auto &x : z) {
      x = std::polar(rad(rng), th(rng));
      mz = std::max(mz, std::abs(x));
    }
    cd v = 0;
    for (auto &kv : P.terms) {
      cd t = ScalarTraits<S>::to_cd(kv.second);
      for (int i = 0; i < P.d; ++i) t *= std::pow(z[i], kv.first[i]);
      v += t;
    }
    best = std::min(best, std::abs(v) / (nrm * std::pow(mz, M)));
  }
  return best;
}

double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
  double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

template <class S> int point_intersection(const Poly2<S> &p, const std::vector<S> &pt) {
  auto rep = common_zeros(p, reflect(p));
  cd a = ScalarTraits<S>::to_cd(pt[0]), b = ScalarTraits<S>::to_cd(pt[1]);
  for (auto &z : rep.zeros)
    if (!z.z1.inf && !z.z2.inf && std::abs(z.z1.v - a) < 1e-6 && std::abs(z.z2.v - b) < 1e-6) return z.multiplicity;
  return 0;
}

} // namespace

bool ApproachRegion::contains(const std::vector<cd> &zeta) const {
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (auto &z : zeta) {
    if (z.real() <= 0) return false;
    lo = std::min({lo, std::abs(z), z.real()});
    hi = std::max({hi, std::abs(z), z.real()});
  }
  return hi <= c * lo;
}

template <class S> int vanishing_order(const MPoly<S> &p, const std::vector<S> &pt) {
  check_point(pt, size_t(p.d));
  return homog_expand(p, pt).M;
}

template <class S> int vanishing_order(const Poly2<S> &p, const std::vector<S> &pt) {
  return vanishing_order(to_mpoly(p), pt);
}

template <class S> BottomForm bottom_form_check(const MPoly<S> &p, const std::vector<S> &pt, unsigned seed) {
  check_point(pt, size_t(p.d));
  // rotate to the base point (1,...,1)
  MPoly<S> r;
  r.d = p.d;
  for (auto &kv : p.terms) {
    S c = kv.second;
    for (int i = 0; i < p.d; ++i)
      for (int e = 0; e < kv.first[i]; ++e) c = c * pt[i];
    r.add(kv.first, c);
  }
  auto ex = homog_expand(r, std::vector<S>(p.d, S(1)));
  if (ex.M < 0) throw PreconditionError("zero polynomial has no bottom form");
  BottomForm b;
  b.M = ex.M;
  b.samples = 10000;
  b.min_scaled = sample_min(ex.forms[ex.M], ex.M, seed, b.samples);
  if (p.d == 2) {
    HForm<S> h = to_hform(ex.forms[ex.M], ex.M);
    b.form = as_float(h);
    b.text = text(h);
    b.zero_free = rhp_zero_free(b.form) && b.min_scaled > 0;
  } else {
    b.zero_free = b.min_scaled > 1e-6;
  }
  return b;
}

template <class S> BottomForm bottom_form_check(const Poly2<S> &p, const std::vector<S> &pt, unsigned seed) {
  return bottom_form_check(to_mpoly(p), pt, seed);
}

template <class S> bool nontangential_bounded(const Poly2<S> &q, const Poly2<S> &p, const std::vector<S> &pt) {
  int M = vanishing_order(p, pt), mq = vanishing_order(q, pt);
  if (M < 0) throw PreconditionError("zero denominator");
  return mq < 0 || mq >= M;
}

template <class S> NTLimit nontangential_limit(const Poly2<S> &q, const Poly2<S> &p, const std::vector<S> &pt) {
  check_point(pt, 2);
  NTLimit r;
  auto P = pieces(p, pt, 1e-10);
  if (P.M < 0) throw PreconditionError("zero denominator");
  r.M = P.M;
  r.q_order = vanishing_order(q, pt);
  r.bounded = r.q_order < 0 || r.q_order >= r.M;
  if (!r.bounded) return r;
  auto Q = pieces(q, pt, 1e-10);
  auto quo = homog_divide(Q.at(r.M), P.at(r.M));
  if (quo) {
    r.value = ScalarTraits<S>::to_cd(quo->c[0]);
    r.text = text(quo->c[0]);
  }
  return r;
}

template <class S>
BoundaryAnalysis regularity_ladder(const Poly2<S> &p, const std::vector<S> &pt, const LadderOptions &opt) {
  check_point(pt, 2);
  constexpr bool exact = std::is_same_v<S, GQ>;
  BoundaryAnalysis a;
  a.z1 = ScalarTraits<S>::to_cd(pt[0]);
  a.z2 = ScalarTraits<S>::to_cd(pt[1]);
  if (opt.k_max < -1) throw std::invalid_argument("k_max must be nonnegative (-1 selects 2nm)");
  a.k_max = opt.k_max < 0 ? 2 * p.n * p.m : opt.k_max;
  Poly2<S> pt_ = reflect(p);
  auto P = pieces(p, pt, 1e-10);
  auto Q = pieces(pt_, pt, 1e-10);
  if (P.M < 0) throw PreconditionError("zero polynomial");
  int M = a.M = P.M;
  auto bf = bottom_form_check(p, pt);
  a.bottom_form = bf.text;
  a.bottom_ok = bf.zero_free;
  HForm<S> PM = P.at(M);
  auto q0 = homog_divide(Q.at(M), PM, opt.float_tol);
  a.intersection = point_intersection(p, pt);
  if (!q0) {
    a.k = -1;
    return a;
  }
  S nu = q0->c[0];
  a.nu = ScalarTraits<S>::to_cd(nu);
  a.nu_text = text(nu);
  a.nu_modulus_error = std::abs(std::abs(*a.nu) - 1);
  {
    int lead = M;
    while (lead > 0 && ScalarTraits<S>::is_zero(PM.c[lead], 1e-12)) --lead;
    S c = PM.c[lead];
    double cn = ScalarTraits<S>::abs(c), pn = 0, worst = 0;
    for (auto &x : PM.c) pn = std::max(pn, ScalarTraits<S>::abs(x));
    for (auto &x : PM.c) {
      cd v = ScalarTraits<S>::to_cd(c * nu * x);
      worst = std::max(worst, std::abs(v.imag()) / cn);
    }
    a.phase_residual = worst / pn;
  }
  std::vector<HForm<S>> F;
  int k = 0;
  while (k < a.k_max) {
    int K = k + 1;
    HForm<S> num = Q.at(M + K) - nu * P.at(M + K);
    for (int j = 1; j < K; ++j) num = num - F[j - 1] * P.at(M + K - j);
    auto fk = homog_divide(num, PM, opt.float_tol);
    if (!fk) {
      a.next_fails = true;
      break;
    }
    F.push_back(*fk);
    k = K;
  }
  a.k = k;
  for (auto &f : F) {
    a.terms.push_back(as_float(f));
    a.term_text.push_back(text(f));
  }
  a.multiplicity_floor = M * (M + k + 1);
  a.floor_ok = a.intersection >= a.multiplicity_floor && a.intersection % 2 == 0;
  if (!opt.fit) return a;

  // remainder f(pt(1 - zeta)) - (nu + sum F_j(zeta)) along rays in the approach region
  ApproachRegion ar{opt.aperture, {a.z1, a.z2}, 2};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ang(-std::acos(0.85), std::acos(0.85)), sc(0.85, 1.2);
  std::vector<std::vector<S>> dirs;
  while (int(dirs.size()) < opt.rays) {
    std::vector<cd> z{std::polar(1.0, ang(rng)), std::polar(sc(rng), ang(rng))};
    std::vector<S> zs{to_s<S>(z[0]), to_s<S>(z[1])};
    std::vector<cd> back{ScalarTraits<S>::to_cd(zs[0]), ScalarTraits<S>::to_cd(zs[1])};
    if (ar.contains(back)) dirs.push_back(zs);
  }
  a.fit.rays = opt.rays;
  for (int e = opt.r_lo; e <= opt.r_hi; ++e) a.fit.radii.push_back(std::ldexp(1.0, -e));
  double worst = std::numeric_limits<double>::infinity();
  for (auto &d : dirs) {
    std::vector<double> lx, ly;
    for (int e = opt.r_lo; e <= opt.r_hi; ++e) {
      S r;
      if constexpr (exact) r = GQ(mpq_class(1, mpz_class(1) << e));
      else r = cd(std::ldexp(1.0, -e));
      S zeta = r * d[0], eta = r * d[1];
      S z1 = pt[0] * (S(1) - zeta), z2 = pt[1] * (S(1) - eta);
      S f = pt_.eval(z1, z2) / p.eval(z1, z2);
      S t = nu;
      for (auto &fj : F) t = t + fj.eval(zeta, eta);
      double res = std::abs(ScalarTraits<S>::to_cd(f - t));
      a.fit.max_residual = std::max(a.fit.max_residual, res);
      if (res > 0) {
        lx.push_back(std::log(std::ldexp(1.0, -e)));
        ly.push_back(std::log(res));
      }
    }
    if (lx.size() >= 3) worst = std::min(worst, fit_slope(lx, ly));
  }
  a.fit.min_exponent = worst;
  a.fit_ok = worst >= k + 0.9;
  return a;
}

std::vector<GQ> parse_point(const std::string &s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw std::invalid_argument("point must be 'a,b'");
  return {parse_gaussian(s.substr(0, c)), parse_gaussian(s.substr(c + 1))};
}

template int vanishing_order(const Poly2<GQ> &, const std::vector<GQ> &);
template int vanishing_order(const Poly2<cd> &, const std::vector<cd> &);
template int vanishing_order(const MPoly<GQ> &, const std::vector<GQ> &);
template int vanishing_order(const MPoly<cd> &, const std::vector<cd> &);
template BottomForm bottom_form_check(const Poly2<GQ> &, const std::vector<GQ> &, unsigned);
template BottomForm bottom_form_check(const Poly2<cd> &, const std::vector<cd> &, unsigned);
template BottomForm bottom_form_check(const MPoly<GQ> &, const std::vector<GQ> &, unsigned);
template BottomForm bottom_form_check(const MPoly<cd> &, const std::vector<cd> &, unsigned);
template bool nontangential_bounded(const Poly2<GQ> &, const Poly2<GQ> &, const std::vector<GQ> &);
template bool nontangential_bounded(const Poly2<cd> &, const Poly2<cd> &, const std::vector<cd> &);
template NTLimit nontangential_limit(const Poly2<GQ> &, const Poly2<GQ> &, const std::vector<GQ> &);
template NTLimit nontangential_limit(const Poly2<cd> &, const Poly2<cd> &, const std::vector<cd> &);
template BoundaryAnalysis regularity_ladder(const Poly2<GQ> &, const std::vector<GQ> &, const LadderOptions &);
template BoundaryAnalysis regularity_ladder(const Poly2<cd> &, const std::vector<cd> &, const LadderOptions &);

} // namespace bidisk
