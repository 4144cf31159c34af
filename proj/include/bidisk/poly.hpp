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
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bidisk/scalar.hpp"

namespace bidisk {

// ---------------------------------------------------------------- univariate

template <class S> struct UPoly {
  std::vector<S> c; // c[k] multiplies x^k

  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const S &a) { return UPoly(std::vector<S>{a}); }
  static UPoly monomial(int k, const S &a) {
    std::vector<S> v(k + 1, S(0));
    v[k] = a;
    return UPoly(v);
  }

  void trim(double tol = 0) {
    while (!c.empty() && ScalarTraits<S>::is_zero(c.back(), tol)) c.pop_back();
  }
  int degree() const { return int(c.size()) - 1; } // -1 for zero
  bool is_zero() const { return c.empty(); }
  const S &lead() const { return c.back(); }
  S coef(int k) const { return (k >= 0 && k < int(c.size())) ? c[k] : S(0); }

  template <class T> T eval(const T &x) const {
    T r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + T(c[k]);
    return r;
  }
  S operator()(const S &x) const { return eval<S>(x); }

  UPoly derivative() const {
    std::vector<S> d;
    for (int k = 1; k <= degree(); ++k) d.push_back(c[k] * S(long(k)));
    return UPoly(d);
  }
};

template <class S> UPoly<S> operator+(const UPoly<S> &a, const UPoly<S> &b) {
  std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
  for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return UPoly<S>(r);
}
template <class S> UPoly<S> operator-(const UPoly<S> &a, const UPoly<S> &b) {
  std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
  for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
  return UPoly<S>(r);
}
template <class S> UPoly<S> operator*(const UPoly<S> &a, const UPoly<S> &b) {
  if (a.is_zero() || b.is_zero()) return UPoly<S>();
  std::vector<S> r(a.c.size() + b.c.size() - 1, S(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return UPoly<S>(r);
}
template <class S> UPoly<S> operator*(const S &s, const UPoly<S> &a) {
  std::vector<S> r = a.c;
  for (auto &x : r) x = s * x;
  return UPoly<S>(r);
}

// Division with remainder over a field.
template <class S>
void divmod(const UPoly<S> &a, const UPoly<S> &b, UPoly<S> &q, UPoly<S> &r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<S> rem = a.c;
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<S> quo(std::max(dq + 1, 0), S(0));
  S inv = S(1) / b.lead();
  for (int k = dq; k >= 0; --k) {
    S t = rem[k + db] * inv;
    quo[k] = t;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.c[j];
    rem[k + db] = S(0);
  }
  q = UPoly<S>(quo);
  rem.resize(std::max(db, 0));
  r = UPoly<S>(rem);
}

template <class S> UPoly<S> monic(const UPoly<S> &a) {
  if (a.is_zero()) return a;
  return (S(1) / a.lead()) * a;
}

// Exact univariate gcd, monic.
UPoly<GQ> ugcd(UPoly<GQ> a, UPoly<GQ> b);
// Extended gcd: s*a + t*b = g (monic).
UPoly<GQ> uxgcd(const UPoly<GQ> &a, const UPoly<GQ> &b, UPoly<GQ> &s, UPoly<GQ> &t);
// Yun square-free decomposition: a = lc * prod_i f[i]^(i+1), each f[i] monic and
// square-free; f[i] may be 1.
std::vector<UPoly<GQ>> squarefree(const UPoly<GQ> &a);
UPoly<cd> to_float(const UPoly<GQ> &a);

// ---------------------------------------------------------------- bivariate

// Coefficient grid of size (n+1) x (m+1); entry (j,k) multiplies z1^j z2^k.
template <class S> struct Poly2 {
  int n = 0, m = 0;
  std::vector<S> a;

  Poly2() : a(1, S(0)) {}
  Poly2(int n_, int m_) : n(n_), m(m_), a(size_t(n_ + 1) * (m_ + 1), S(0)) {
    if (n_ < 0 || m_ < 0) throw std::invalid_argument("negative bidegree");
  }
  static Poly2 constant(const S &v, int n_ = 0, int m_ = 0) {
    Poly2 p(n_, m_);
    p.at(0, 0) = v;
    return p;
  }

  S &at(int j, int k) { return a[size_t(j) * (m + 1) + k]; }
  const S &at(int j, int k) const { return a[size_t(j) * (m + 1) + k]; }
  S get(int j, int k) const {
    return (j >= 0 && j <= n && k >= 0 && k <= m) ? at(j, k) : S(0);
  }
  Backend backend() const { return ScalarTraits<S>::backend; }

  bool is_zero() const {
    for (auto &x : a)
      if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }
  // natural bidegree; (-1,-1) for the zero polynomial
  std::pair<int, int> natural_bidegree() const {
    int dn = -1, dm = -1;
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= m; ++k)
        if (!ScalarTraits<S>::is_zero(at(j, k))) { dn = std::max(dn, j); dm = std::max(dm, k); }
    return {dn, dm};
  }

  template <class T> T eval(const T &z1, const T &z2) const {
    T r(0);
    for (int j = n; j >= 0; --j) {
      T row(0);
      for (int k = m; k >= 0; --k) row = row * z2 + T(at(j, k));
      r = r * z1 + row;
    }
    return r;
  }
  S operator()(const S &z1, const S &z2) const { return eval<S>(z1, z2); }

  // Same polynomial, new declared bidegree (must contain the natural one).
  Poly2 with_bidegree(int n2, int m2) const {
    auto nb = natural_bidegree();
    if (nb.first > n2 || nb.second > m2)
      throw std::invalid_argument("declared bidegree below natural bidegree");
    Poly2 r(n2, m2);
    for (int j = 0; j <= std::min(n, n2); ++j)
      for (int k = 0; k <= std::min(m, m2); ++k) r.at(j, k) = at(j, k);
    return r;
  }
  // z1-coefficient p_j(z2)
  UPoly<S> row(int j) const {
    std::vector<S> v(m + 1);
    for (int k = 0; k <= m; ++k) v[k] = at(j, k);
    return UPoly<S>(v);
  }
  UPoly<S> col(int k) const {
    std::vector<S> v(n + 1);
    for (int j = 0; j <= n; ++j) v[j] = at(j, k);
    return UPoly<S>(v);
  }
};

template <class S> Poly2<S> operator+(const Poly2<S> &p, const Poly2<S> &q) {
  Poly2<S> r(std::max(p.n, q.n), std::max(p.m, q.m));
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(j, k) += p.at(j, k);
  for (int j = 0; j <= q.n; ++j)
    for (int k = 0; k <= q.m; ++k) r.at(j, k) += q.at(j, k);
  return r;
}
template <class S> Poly2<S> operator-(const Poly2<S> &p, const Poly2<S> &q) {
  Poly2<S> r(std::max(p.n, q.n), std::max(p.m, q.m));
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(j, k) += p.at(j, k);
  for (int j = 0; j <= q.n; ++j)
    for (int k = 0; k <= q.m; ++k) r.at(j, k) -= q.at(j, k);
  return r;
}
template <class S> Poly2<S> operator*(const Poly2<S> &p, const Poly2<S> &q) {
  Poly2<S> r(p.n + q.n, p.m + q.m);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) {
      if (ScalarTraits<S>::is_zero(p.at(j, k))) continue;
      for (int a = 0; a <= q.n; ++a)
        for (int b = 0; b <= q.m; ++b) r.at(j + a, k + b) += p.at(j, k) * q.at(a, b);
    }
  return r;
}
template <class S> Poly2<S> operator*(const S &s, const Poly2<S> &p) {
  Poly2<S> r = p;
  for (auto &x : r.a) x = s * x;
  return r;
}
template <class S> bool operator==(const Poly2<S> &p, const Poly2<S> &q) {
  if (p.n != q.n || p.m != q.m) return false;
  for (size_t i = 0; i < p.a.size(); ++i)
    if (!(p.a[i] == q.a[i])) return false;
  return true;
}

// z1^n z2^m conj(p(1/conj z1, 1/conj z2)) at the declared bidegree.
template <class S> Poly2<S> reflect(const Poly2<S> &p) {
  Poly2<S> r(p.n, p.m);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k)
      r.at(p.n - j, p.m - k) = ScalarTraits<S>::conj(p.at(j, k));
  return r;
}
// z2^m p(z1, 1/z2)
template <class S> Poly2<S> flip2(const Poly2<S> &p) {
  Poly2<S> r(p.n, p.m);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(j, p.m - k) = p.at(j, k);
  return r;
}
// z1^n p(1/z1, z2)
template <class S> Poly2<S> flip1(const Poly2<S> &p) {
  Poly2<S> r(p.n, p.m);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(p.n - j, k) = p.at(j, k);
  return r;
}
// p(z2, z1)
template <class S> Poly2<S> swap_vars(const Poly2<S> &p) {
  Poly2<S> r(p.m, p.n);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(k, j) = p.at(j, k);
  return r;
}
template <class S> Poly2<S> d1(const Poly2<S> &p) {
  Poly2<S> r(std::max(p.n - 1, 0), p.m);
  for (int j = 1; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(j - 1, k) = p.at(j, k) * S(long(j));
  return r;
}
template <class S> Poly2<S> d2(const Poly2<S> &p) {
  Poly2<S> r(p.n, std::max(p.m - 1, 0));
  for (int j = 0; j <= p.n; ++j)
    for (int k = 1; k <= p.m; ++k) r.at(j, k - 1) = p.at(j, k) * S(long(k));
  return r;
}
// coefficient shift by z1^a z2^b
template <class S> Poly2<S> shift(const Poly2<S> &p, int a, int b) {
  Poly2<S> r(p.n + a, p.m + b);
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) r.at(j + a, k + b) = p.at(j, k);
  return r;
}

Poly2<cd> to_float(const Poly2<GQ> &p);
double max_abs(const Poly2<cd> &p);

// Exact bivariate gcd over Q(i) (primitive PRS in z2 over Q(i)[z1]); primitive and
// monic in the lexicographically last nonzero coefficient.
Poly2<GQ> gcd(const Poly2<GQ> &p, const Poly2<GQ> &q);
Poly2<cd> gcd(const Poly2<cd> &, const Poly2<cd> &); // throws: exact only
// Exact division p / q when q divides p; nullopt otherwise.
std::optional<Poly2<GQ>> exact_divide(const Poly2<GQ> &p, const Poly2<GQ> &q);

// Human readable form, e.g. "2 - z1 - z2".
std::string to_string(const Poly2<GQ> &p);
std::string to_string(const Poly2<cd> &p, int digits = 12);

// ---------------------------------------------------------------- homogeneous

// Sparse multivariate polynomial used for expansions at torus points (d >= 2).
template <class S> struct MPoly {
  int d = 2;
  std::map<std::vector<int>, S> terms;

  bool is_zero() const { return terms.empty(); }
  int total_degree_min() const {
    int t = 1 << 30;
    for (auto &kv : terms) {
      int s = 0;
      for (int e : kv.first) s += e;
      t = std::min(t, s);
    }
    return t;
  }
  void add(const std::vector<int> &e, const S &v) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!ScalarTraits<S>::is_zero(v)) terms.emplace(e, v);
    } else {
      it->second += v;
      if (ScalarTraits<S>::is_zero(it->second)) terms.erase(it);
    }
  }
  template <class T> T eval(const std::vector<T> &x) const {
    T r(0);
    for (auto &kv : terms) {
      T t = T(kv.second);
      for (int i = 0; i < d; ++i)
        for (int e = 0; e < kv.first[i]; ++e) t = t * x[i];
      r = r + t;
    }
    return r;
  }
};

// Homogeneous form in (zeta1, zeta2): c[i] multiplies zeta1^i zeta2^(deg-i).
template <class S> struct HForm {
  int deg = 0;
  std::vector<S> c;

  HForm() : deg(0), c(1, S(0)) {}
  HForm(int d, std::vector<S> v) : deg(d), c(std::move(v)) {
    if (int(c.size()) != d + 1) throw std::invalid_argument("HForm size mismatch");
  }
  static HForm zero(int d) { return HForm(d, std::vector<S>(d + 1, S(0))); }
  bool is_zero(double tol = 0) const {
    for (auto &x : c)
      if (!ScalarTraits<S>::is_zero(x, tol)) return false;
    return true;
  }
  template <class T> T eval(const T &x, const T &y) const {
    T r(0);
    for (int i = 0; i <= deg; ++i) {
      T t = T(c[i]);
      for (int e = 0; e < i; ++e) t = t * x;
      for (int e = 0; e < deg - i; ++e) t = t * y;
      r = r + t;
    }
    return r;
  }
};

template <class S> HForm<S> operator+(const HForm<S> &a, const HForm<S> &b) {
  if (a.deg != b.deg) throw std::invalid_argument("HForm degree mismatch");
  HForm<S> r = a;
  for (int i = 0; i <= a.deg; ++i) r.c[i] += b.c[i];
  return r;
}
template <class S> HForm<S> operator-(const HForm<S> &a, const HForm<S> &b) {
  if (a.deg != b.deg) throw std::invalid_argument("HForm degree mismatch");
  HForm<S> r = a;
  for (int i = 0; i <= a.deg; ++i) r.c[i] -= b.c[i];
  return r;
}
template <class S> HForm<S> operator*(const HForm<S> &a, const HForm<S> &b) {
  HForm<S> r = HForm<S>::zero(a.deg + b.deg);
  for (int i = 0; i <= a.deg; ++i)
    for (int j = 0; j <= b.deg; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}
template <class S> HForm<S> operator*(const S &s, const HForm<S> &a) {
  HForm<S> r = a;
  for (auto &x : r.c) x = s * x;
  return r;
}

template <class S> struct HomogExpansion {
  std::vector<S> base;          // torus point
  std::vector<MPoly<S>> forms;  // forms[j] homogeneous of degree j in zeta
  int M = -1;                   // -1 encodes the +infinity sentinel (zero input)
};

// p(base - zeta) grouped by total degree. tol applies to FLOAT input only.
template <class S> HomogExpansion<S> homog_expand(const MPoly<S> &p, const std::vector<S> &base,
                                                  double float_tol = 1e-10);
template <class S> HomogExpansion<S> homog_expand(const Poly2<S> &p, const std::vector<S> &base,
                                                  double float_tol = 1e-10);
template <class S> MPoly<S> to_mpoly(const Poly2<S> &p);
template <class S> HForm<S> to_hform(const MPoly<S> &f, int deg);

// Quotient numer/denom as a form when denom divides numer; tol is the relative
// remainder tolerance for FLOAT input (ignored for EXACT).
template <class S>
std::optional<HForm<S>> homog_divide(const HForm<S> &numer, const HForm<S> &denom,
                                     double float_tol = 1e-9);

template <class S> bool on_torus(const S &z, double tol = 1e-12);

std::string to_string(const HForm<GQ> &f, const char *x = "zeta", const char *y = "eta");
std::string to_string(const HForm<cd> &f, const char *x = "zeta", const char *y = "eta");

} // namespace bidisk
