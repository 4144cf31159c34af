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
#include "bidisk/groebner.hpp"

#include <algorithm>
#include <limits>

namespace bidisk {

void SPoly::add(const Mono &m, const GQ &c) {
  if (c.is_zero()) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

SPoly to_spoly(const Poly2<GQ> &p) {
  SPoly s;
  for (int j = 0; j <= p.n; ++j)
    for (int k = 0; k <= p.m; ++k) s.add({j, k}, p.at(j, k));
  return s;
}

Poly2<GQ> to_poly2(const SPoly &p) {
  int n = 0, m = 0;
  for (auto &kv : p.t) { n = std::max(n, kv.first.a); m = std::max(m, kv.first.b); }
  Poly2<GQ> r(n, m);
  for (auto &kv : p.t) r.at(kv.first.a, kv.first.b) = kv.second;
  return r;
}

SPoly mul_term(const SPoly &p, const Mono &m, const GQ &c) {
  SPoly r;
  for (auto &kv : p.t) r.t.emplace_hint(r.t.end(), Mono{kv.first.a + m.a, kv.first.b + m.b}, kv.second * c);
  return r;
}

SPoly sub(const SPoly &p, const SPoly &q) {
  SPoly r = p;
  for (auto &kv : q.t) r.add(kv.first, -kv.second);
  return r;
}

namespace {

SPoly make_monic(SPoly p) {
  if (p.is_zero()) return p;
  GQ inv = p.lc().inv();
  for (auto &kv : p.t) kv.second *= inv;
  return p;
}

// Full reduction of f modulo G (every term reduced).
SPoly reduce(SPoly f, const std::vector<SPoly> &G) {
  SPoly r;
  while (!f.is_zero()) {
    Mono lm = f.lm();
    GQ lc = f.lc();
    bool done = false;
    for (auto &g : G) {
      if (g.is_zero() || !g.lm().divides(lm)) continue;
      Mono q{lm.a - g.lm().a, lm.b - g.lm().b};
      f = sub(f, mul_term(g, q, lc / g.lc()));
      done = true;
      break;
    }
    if (!done) {
      r.add(lm, lc);
      f.t.erase(std::prev(f.t.end()));
    }
  }
  return r;
}

SPoly spair(const SPoly &f, const SPoly &g) {
  Mono l{std::max(f.lm().a, g.lm().a), std::max(f.lm().b, g.lm().b)};
  SPoly a = mul_term(f, {l.a - f.lm().a, l.b - f.lm().b}, f.lc().inv());
  SPoly b = mul_term(g, {l.a - g.lm().a, l.b - g.lm().b}, g.lc().inv());
  return sub(a, b);
}

int sugar_of(const SPoly &p) {
  int s = 0;
  for (auto &kv : p.t) s = std::max(s, kv.first.deg());
  return s;
}

} // namespace

SPoly normal_form(const SPoly &f, const std::vector<SPoly> &G) { return reduce(f, G); }

std::vector<SPoly> groebner(std::vector<SPoly> gens) {
  std::vector<SPoly> G;
  std::vector<int> sugar;
  for (auto &g : gens)
    if (!g.is_zero()) { G.push_back(make_monic(g)); sugar.push_back(sugar_of(g)); }
  struct Pair { int i, j, sugar; Mono lcm; };
  std::vector<Pair> P;
  auto add_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      Mono l{std::max(G[i].lm().a, G[k].lm().a), std::max(G[i].lm().b, G[k].lm().b)};
      int s = std::max(sugar[i] + l.deg() - G[i].lm().deg(), sugar[k] + l.deg() - G[k].lm().deg());
      P.push_back({i, k, s, l});
    }
  };
  for (int k = 1; k < int(G.size()); ++k) add_pairs(k);
  int guard = 0;
  while (!P.empty()) {
    if (++guard > 100000) throw std::runtime_error("Groebner basis did not terminate");
    auto it = std::min_element(P.begin(), P.end(), [](const Pair &x, const Pair &y) {
      if (x.sugar != y.sugar) return x.sugar < y.sugar;
      GrlexLess lt;
      if (lt(x.lcm, y.lcm) != lt(y.lcm, x.lcm)) return lt(x.lcm, y.lcm);
      return std::make_pair(x.i, x.j) < std::make_pair(y.i, y.j);
    });
    Pair pr = *it;
    P.erase(it);
    const SPoly &f = G[pr.i], &g = G[pr.j];
    // coprime leading monomials reduce to zero
    if (std::min(f.lm().a, g.lm().a) == 0 && std::min(f.lm().b, g.lm().b) == 0)
      continue;
    // chain criterion
    bool skip = false;
    for (int k = 0; k < int(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j || !G[k].lm().divides(pr.lcm)) continue;
      auto has = [&](int x, int y) {
        for (auto &q : P)
          if ((q.i == std::min(x, y) && q.j == std::max(x, y))) return true;
        return false;
      };
      if (!has(pr.i, k) && !has(pr.j, k)) skip = true;
    }
    if (skip) continue;
    SPoly h = reduce(spair(f, g), G);
    if (h.is_zero()) continue;
    G.push_back(make_monic(h));
    sugar.push_back(pr.sugar);
    add_pairs(int(G.size()) - 1);
  }
  // minimal basis
  std::vector<SPoly> min;
  for (size_t i = 0; i < G.size(); ++i) {
    bool red = false;
    for (size_t j = 0; j < G.size() && !red; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm())) {
        bool same = G[j].lm().a == G[i].lm().a && G[j].lm().b == G[i].lm().b;
        if (!same || j < i) red = true;
      }
    }
    if (!red) min.push_back(G[i]);
  }
  // interreduce
  std::vector<SPoly> out;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<SPoly> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    SPoly lead;
    lead.add(min[i].lm(), min[i].lc());
    SPoly tail = min[i];
    tail.t.erase(std::prev(tail.t.end()));
    SPoly r = reduce(tail, others);
    r.add(min[i].lm(), min[i].lc());
    out.push_back(make_monic(r));
  }
  std::sort(out.begin(), out.end(), [](const SPoly &x, const SPoly &y) { return GrlexLess()(x.lm(), y.lm()); });
  return out;
}

Quotient quotient_ring(const std::vector<Poly2<GQ>> &gens) {
  std::vector<SPoly> sg;
  for (auto &g : gens) sg.push_back(to_spoly(g));
  Quotient Q;
  Q.G = groebner(sg);
  if (Q.G.empty()) throw PreconditionError("zero ideal is not zero-dimensional");
  int A = std::numeric_limits<int>::max(), B = std::numeric_limits<int>::max();
  for (auto &g : Q.G) {
    if (g.lm().b == 0) A = std::min(A, g.lm().a);
    if (g.lm().a == 0) B = std::min(B, g.lm().b);
  }
  if (A == std::numeric_limits<int>::max() || B == std::numeric_limits<int>::max())
    throw PreconditionError("ideal is not zero-dimensional (common factor)");
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < B; ++b) {
      Mono m{a, b};
      bool std_mono = true;
      for (auto &g : Q.G)
        if (g.lm().divides(m)) { std_mono = false; break; }
      if (std_mono) Q.basis.push_back(m);
    }
  std::sort(Q.basis.begin(), Q.basis.end(), GrlexLess());
  int D = Q.dim();
  std::map<Mono, int, GrlexLess> idx;
  for (int i = 0; i < D; ++i) idx[Q.basis[i]] = i;
  Q.M1 = QMat(D, D);
  Q.M2 = QMat(D, D);
  for (int i = 0; i < D; ++i) {
    for (int v = 0; v < 2; ++v) {
      SPoly s;
      s.add({Q.basis[i].a + (v == 0), Q.basis[i].b + (v == 1)}, GQ(1));
      SPoly r = normal_form(s, Q.G);
      QMat &M = v == 0 ? Q.M1 : Q.M2;
      for (auto &kv : r.t) M(idx.at(kv.first), i) = kv.second;
    }
  }
  return Q;
}

} // namespace bidisk
