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
#include "bidisk/poly.hpp"

#include <cmath>
#include <sstream>

namespace bidisk {

UPoly<GQ> ugcd(UPoly<GQ> a, UPoly<GQ> b) {
  while (!b.is_zero()) {
    UPoly<GQ> q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly<GQ> uxgcd(const UPoly<GQ> &a, const UPoly<GQ> &b, UPoly<GQ> &s, UPoly<GQ> &t) {
  UPoly<GQ> r0 = a, r1 = b;
  UPoly<GQ> s0 = UPoly<GQ>::constant(GQ(1)), s1;
  UPoly<GQ> t0, t1 = UPoly<GQ>::constant(GQ(1));
  while (!r1.is_zero()) {
    UPoly<GQ> q, r;
    divmod(r0, r1, q, r);
    UPoly<GQ> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) { s = s0; t = t0; return r0; }
  GQ inv = GQ(1) / r0.lead();
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

std::vector<UPoly<GQ>> squarefree(const UPoly<GQ> &a) {
  std::vector<UPoly<GQ>> out;
  if (a.degree() <= 0) return out;
  UPoly<GQ> f = monic(a);
  UPoly<GQ> fp = f.derivative();
  UPoly<GQ> g = ugcd(f, fp);
  UPoly<GQ> q, r;
  divmod(f, g, q, r);
  UPoly<GQ> c = q;  // product of distinct factors
  UPoly<GQ> w;
  divmod(fp, g, w, r);
  UPoly<GQ> d = w - c.derivative();
  while (c.degree() > 0) {
    UPoly<GQ> h = ugcd(c, d);
    out.push_back(h);
    UPoly<GQ> c2, d2;
    divmod(c, h, c2, r);
    divmod(d, h, d2, r);
    c = c2;
    d = d2 - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

UPoly<cd> to_float(const UPoly<GQ> &a) {
  std::vector<cd> v;
  for (auto &x : a.c) v.push_back(x.to_cd());
  return UPoly<cd>(v);
}

Poly2<cd> to_float(const Poly2<GQ> &p) {
  Poly2<cd> r(p.n, p.m);
  for (size_t i = 0; i < p.a.size(); ++i) r.a[i] = p.a[i].to_cd();
  return r;
}

double max_abs(const Poly2<cd> &p) {
  double r = 0;
  for (auto &x : p.a) r = std::max(r, std::abs(x));
  return r;
}

// ------------------------------------------------------------------ gcd

namespace {

using Coef = UPoly<GQ>;           // polynomial in z1
using Z2Poly = std::vector<Coef>; // index = power of z2

void ztrim(Z2Poly &A) {
  while (!A.empty() && A.back().is_zero()) A.pop_back();
}

Z2Poly from_poly2(const Poly2<GQ> &p) {
  Z2Poly A(p.m + 1);
  for (int k = 0; k <= p.m; ++k) A[k] = p.col(k);
  ztrim(A);
  return A;
}

Coef content(const Z2Poly &A) {
  Coef c;
  for (auto &x : A) c = ugcd(c, x);
  return c;
}

Z2Poly divide_coeffs(const Z2Poly &A, const Coef &c) {
  Z2Poly R(A.size());
  for (size_t k = 0; k < A.size(); ++k) {
    Coef q, r;
    divmod(A[k], c, q, r);
    R[k] = q;
  }
  return R;
}

Z2Poly prem(Z2Poly A, const Z2Poly &B) {
  int dB = int(B.size()) - 1;
  const Coef &lcB = B.back();
  while (int(A.size()) - 1 >= dB && !A.empty()) {
    int dA = int(A.size()) - 1;
    Coef lcA = A.back();
    Z2Poly R(A.size());
    for (int k = 0; k <= dA; ++k) R[k] = lcB * A[k];
    for (int k = 0; k <= dB; ++k) R[k + dA - dB] = R[k + dA - dB] - lcA * B[k];
    R.back() = Coef();
    ztrim(R);
    A = std::move(R);
  }
  return A;
}

Poly2<GQ> to_poly2(const Z2Poly &A) {
  int m = std::max(int(A.size()) - 1, 0), n = 0;
  for (auto &c : A) n = std::max(n, c.degree());
  Poly2<GQ> p(n, m);
  for (size_t k = 0; k < A.size(); ++k)
    for (int j = 0; j <= A[k].degree(); ++j) p.at(j, int(k)) = A[k].c[j];
  return p;
}

Poly2<GQ> normalize_lex_last(Poly2<GQ> p) {
  auto nb = p.natural_bidegree();
  if (nb.first < 0) return Poly2<GQ>();
  p = p.with_bidegree(nb.first, nb.second);
  for (int j = p.n; j >= 0; --j)
    for (int k = p.m; k >= 0; --k)
      if (!p.at(j, k).is_zero()) {
        GQ inv = p.at(j, k).inv();
        for (auto &x : p.a) x *= inv;
        return p;
      }
  return p;
}

} // namespace

Poly2<GQ> gcd(const Poly2<GQ> &p, const Poly2<GQ> &q) {
  Z2Poly A = from_poly2(p), B = from_poly2(q);
  if (A.empty()) return normalize_lex_last(q);
  if (B.empty()) return normalize_lex_last(p);
  Coef ca = content(A), cb = content(B);
  Coef c = ugcd(ca, cb);
  A = divide_coeffs(A, ca);
  B = divide_coeffs(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    if (B.size() == 1) { A = Z2Poly{Coef::constant(GQ(1))}; break; }
    Z2Poly R = prem(A, B);
    A = std::move(B);
    if (R.empty()) { B.clear(); break; }
    B = divide_coeffs(R, content(R));
  }
  A = divide_coeffs(A, content(A));
  Z2Poly G(A.size());
  for (size_t k = 0; k < A.size(); ++k) G[k] = c * A[k];
  return normalize_lex_last(to_poly2(G));
}

Poly2<cd> gcd(const Poly2<cd> &, const Poly2<cd> &) {
  throw PreconditionError("gcd requires the exact backend");
}

std::optional<Poly2<GQ>> exact_divide(const Poly2<GQ> &p, const Poly2<GQ> &q) {
  auto nq = q.natural_bidegree();
  if (nq.first < 0) throw std::domain_error("division by zero polynomial");
  auto np = p.natural_bidegree();
  if (np.first < 0) return Poly2<GQ>(0, 0);
  if (np.first < nq.first || np.second < nq.second) return std::nullopt;
  // lex order with z1 major: leading term of q
  int lj = -1, lk = -1;
  for (int j = nq.first; j >= 0 && lj < 0; --j)
    for (int k = nq.second; k >= 0; --k)
      if (!q.get(j, k).is_zero()) { lj = j; lk = k; break; }
  GQ linv = q.get(lj, lk).inv();
  Poly2<GQ> r = p;
  Poly2<GQ> h(np.first - nq.first, np.second - nq.second);
  for (int j = r.n; j >= 0; --j)
    for (int k = r.m; k >= 0; --k) {
      if (r.at(j, k).is_zero()) continue;
      int a = j - lj, b = k - lk;
      if (a < 0 || b < 0 || a > h.n || b > h.m) return std::nullopt;
      GQ t = r.at(j, k) * linv;
      h.at(a, b) = t;
      for (int u = 0; u <= nq.first; ++u)
        for (int v = 0; v <= nq.second; ++v)
          if (!q.get(u, v).is_zero()) r.at(a + u, b + v) -= t * q.get(u, v);
    }
  if (!r.is_zero()) return std::nullopt;
  return h;
}

// ------------------------------------------------------------------ printing

namespace {
std::string mono(int j, int k) {
  std::string s;
  if (j > 0) s += j == 1 ? "z1" : "z1^" + std::to_string(j);
  if (k > 0) {
    if (!s.empty()) s += "*";
    s += k == 1 ? "z2" : "z2^" + std::to_string(k);
  }
  return s;
}

template <class S, class F>
std::string render(const Poly2<S> &p, F coef_str) {
  std::string out;
  for (int t = 0; t <= p.n + p.m; ++t)
    for (int j = std::min(t, p.n); j >= 0; --j) {
      int k = t - j;
      if (k > p.m || ScalarTraits<S>::is_zero(p.at(j, k))) continue;
      std::string c = coef_str(p.at(j, k));
      std::string mn = mono(j, k);
      bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
      std::string body = neg ? c.substr(1) : c;
      if (body.find_first_of("+-", 1) != std::string::npos) body = "(" + body + ")";
      if (!mn.empty()) body = (body == "1") ? mn : body + "*" + mn;
      if (out.empty()) out = neg ? "-" + body : body;
      else out += neg ? " - " + body : " + " + body;
    }
  return out.empty() ? "0" : out;
}
} // namespace

std::string to_string(const Poly2<GQ> &p) {
  return render(p, [](const GQ &z) { return to_string(z); });
}

std::string to_string(const Poly2<cd> &p, int digits) {
  return render(p, [digits](const cd &z) {
    std::ostringstream os;
    os.precision(digits);
    if (z.imag() == 0) os << z.real();
    else if (z.real() == 0) os << z.imag() << "i";
    else os << z.real() << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
  });
}

// ------------------------------------------------------------------ expansions

namespace {
template <class S> S powr(const S &x, int e) {
  S r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}
long binom(int a, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (a - k + i) / i;
  return r;
}
double norm_of(const MPoly<GQ> &) { return 1.0; }
double norm_of(const MPoly<cd> &p) {
  double r = 0;
  for (auto &kv : p.terms) r = std::max(r, std::abs(kv.second));
  return r;
}
} // namespace

template <class S> MPoly<S> to_mpoly(const Poly2<S> &p) {
  MPoly<S> r;
  r.d = 2;
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.add({j, k}, p.at(j, k));
  return r;
}

template <class S> bool on_torus(const S &z, double tol) {
  if constexpr (std::is_same_v<S, GQ>) {
    (void)tol;
    return z.norm2() == 1;
  } else {
    return std::fabs(std::abs(z) - 1.0) <= tol;
  }
}

template <class S>
HomogExpansion<S> homog_expand(const MPoly<S> &p, const std::vector<S> &base, double float_tol) {
  if (int(base.size()) != p.d) throw std::invalid_argument("base point dimension mismatch");
  for (auto &u : base)
    if (!on_torus(u)) throw PreconditionError("base point is not on the torus");
  HomogExpansion<S> ex;
  ex.base = base;
  int maxdeg = 0;
  for (auto &kv : p.terms) {
    int s = 0;
    for (int e : kv.first) s += e;
    maxdeg = std::max(maxdeg, s);
  }
  ex.forms.assign(maxdeg + 1, MPoly<S>{});
  for (auto &f : ex.forms) f.d = p.d;
  for (auto &kv : p.terms) {
    // product over coordinates of sum_k C(a,k) u^(a-k) (-zeta)^k
    std::vector<std::pair<std::vector<int>, S>> acc{{std::vector<int>(p.d, 0), kv.second}};
    for (int i = 0; i < p.d; ++i) {
      int a = kv.first[i];
      std::vector<std::pair<std::vector<int>, S>> nxt;
      for (auto &t : acc)
        for (int k = 0; k <= a; ++k) {
          S coef = t.second * S(binom(a, k)) * powr(base[i], a - k);
          if (k % 2) coef = S(0) - coef;
          auto e = t.first;
          e[i] = k;
          nxt.emplace_back(e, coef);
        }
      acc.swap(nxt);
    }
    for (auto &t : acc) {
      int s = 0;
      for (int e : t.first) s += e;
      ex.forms[s].add(t.first, t.second);
    }
  }
  double scale = norm_of(p);
  for (size_t j = 0; j < ex.forms.size(); ++j) {
    bool nz;
    if constexpr (std::is_same_v<S, GQ>) nz = !ex.forms[j].is_zero();
    else nz = norm_of(ex.forms[j]) > float_tol * scale;
    if (nz) { ex.M = int(j); break; }
  }
  return ex;
}

template <class S>
HomogExpansion<S> homog_expand(const Poly2<S> &p, const std::vector<S> &base, double float_tol) {
  return homog_expand(to_mpoly(p), base, float_tol);
}

template <class S> HForm<S> to_hform(const MPoly<S> &f, int deg) {
  if (f.d != 2) throw std::invalid_argument("HForm needs two variables");
  HForm<S> h = HForm<S>::zero(deg);
  for (auto &kv : f.terms) {
    if (kv.first[0] + kv.first[1] != deg) throw std::invalid_argument("form is not homogeneous");
    h.c[kv.first[0]] += kv.second;
  }
  return h;
}

template <class S>
std::optional<HForm<S>> homog_divide(const HForm<S> &numer, const HForm<S> &denom, double float_tol) {
  constexpr bool exact = std::is_same_v<S, GQ>;
  double scale = 0;
  for (auto &x : numer.c) scale = std::max(scale, ScalarTraits<S>::abs(x));
  for (auto &x : denom.c) scale = std::max(scale, ScalarTraits<S>::abs(x));
  double ztol = exact ? 0.0 : float_tol * std::max(scale, 1e-300);
  if (denom.is_zero(ztol)) throw std::domain_error("homogeneous division by zero form");
  int qdeg = numer.deg - denom.deg;
  if (numer.is_zero(ztol)) return HForm<S>::zero(std::max(qdeg, 0));
  if (qdeg < 0) return std::nullopt;
  auto xdeg = [&](const HForm<S> &f) {
    for (int i = f.deg; i >= 0; --i)
      if (!ScalarTraits<S>::is_zero(f.c[i], ztol)) return i;
    return -1;
  };
  int xn = xdeg(numer), xd = xdeg(denom);
  int en = numer.deg - xn, ed = denom.deg - xd; // powers of zeta2
  if (en < ed) return std::nullopt;
  std::vector<S> nv(numer.c.begin(), numer.c.begin() + xn + 1);
  std::vector<S> dv(denom.c.begin(), denom.c.begin() + xd + 1);
  UPoly<S> N(nv), D(dv), Q, R;
  if constexpr (!exact) { N.trim(ztol); D.trim(ztol); }
  divmod(N, D, Q, R);
  if constexpr (exact) {
    if (!R.is_zero()) return std::nullopt;
  } else {
    for (auto &x : R.c)
      if (std::abs(x) > ztol) return std::nullopt;
  }
  HForm<S> out = HForm<S>::zero(qdeg);
  for (int i = 0; i <= Q.degree(); ++i) {
    if (i > qdeg) {
      if (!ScalarTraits<S>::is_zero(Q.c[i], ztol)) return std::nullopt;
      continue;
    }
    out.c[i] = Q.c[i];
  }
  return out;
}

namespace {
template <class S, class F> std::string render_form(const HForm<S> &f, const char *x, const char *y, F cs) {
  std::string out;
  for (int i = f.deg; i >= 0; --i) {
    if (ScalarTraits<S>::is_zero(f.c[i])) continue;
    int j = f.deg - i;
    std::string m;
    if (i > 0) m += std::string(x) + (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) m += (m.empty() ? "" : "*") + std::string(y) + (j > 1 ? "^" + std::to_string(j) : "");
    std::string c = cs(f.c[i]);
    bool neg = c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
    std::string body = neg ? c.substr(1) : c;
    if (body.find_first_of("+-", 1) != std::string::npos) body = "(" + body + ")";
    if (!m.empty()) body = body == "1" ? m : body + "*" + m;
    if (out.empty()) out = neg ? "-" + body : body;
    else out += neg ? " - " + body : " + " + body;
  }
  return out.empty() ? "0" : out;
}
} // namespace

std::string to_string(const HForm<GQ> &f, const char *x, const char *y) {
  return render_form(f, x, y, [](const GQ &z) { return to_string(z); });
}
std::string to_string(const HForm<cd> &f, const char *x, const char *y) {
  return render_form(f, x, y, [](const cd &z) {
    std::ostringstream os;
    os.precision(12);
    if (z.imag() == 0) os << z.real();
    else os << "(" << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i)";
    return os.str();
  });
}

template MPoly<GQ> to_mpoly(const Poly2<GQ> &);
template MPoly<cd> to_mpoly(const Poly2<cd> &);
template bool on_torus(const GQ &, double);
template bool on_torus(const cd &, double);
template HomogExpansion<GQ> homog_expand(const MPoly<GQ> &, const std::vector<GQ> &, double);
template HomogExpansion<cd> homog_expand(const MPoly<cd> &, const std::vector<cd> &, double);
template HomogExpansion<GQ> homog_expand(const Poly2<GQ> &, const std::vector<GQ> &, double);
template HomogExpansion<cd> homog_expand(const Poly2<cd> &, const std::vector<cd> &, double);
template HForm<GQ> to_hform(const MPoly<GQ> &, int);
template HForm<cd> to_hform(const MPoly<cd> &, int);
template std::optional<HForm<GQ>> homog_divide(const HForm<GQ> &, const HForm<GQ> &, double);
template std::optional<HForm<cd>> homog_divide(const HForm<cd> &, const HForm<cd> &, double);

} // namespace bidisk
