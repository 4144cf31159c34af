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
// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "bidisk/agler.hpp"
#include "bidisk/boundary.hpp"
#include "bidisk/gram.hpp"
#include "bidisk/ideal.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/oracle.hpp"
#include "bidisk/stability.hpp"
#include "corpus.hpp"

using namespace bidisk;
using fx::P;

namespace {

struct Checks {
  std::vector<std::string> failed;
  void operator()(bool ok, const std::string &what) {
    if (!ok) failed.push_back(what);
  }
};

// Coefficients with the phase of the first nonzero one removed.
Poly2<cd> dephased(const Poly2<cd> &p) {
  Poly2<cd> r = p;
  for (auto &c : p.a)
    if (std::abs(c) > 1e-9) {
      cd ph = std::conj(c) / std::abs(c);
      for (auto &x : r.a) x *= ph;
      break;
    }
  return r;
}

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

bool member(const Poly2<GQ> &p, const IdealDescription &d, const Poly2<GQ> &q) {
  return membership(d, p, q, MemberMode::Exact).member;
}

const LocatedZero *find_zero(const IntersectionReport &r, cd a, cd b) {
  for (auto &z : r.zeros)
    if (!z.z1.inf && !z.z2.inf && std::abs(z.z1.v - a) < 1e-6 && std::abs(z.z2.v - b) < 1e-6) return &z;
  return nullptr;
}

// the (j,k) >= (n-1, m-1) window up to (n+2, m+2)
void check_dims(Checks &c, const Poly2<GQ> &p, int half) {
  for (int j = std::max(p.n - 1, 0); j <= p.n + 2; ++j)
    for (int k = std::max(p.m - 1, 0); k <= p.m + 2; ++k) {
      int want = (j + 1) * (k + 1) - half;
      int got = dim_P(p, j, k);
      c(got == want, "dim P_{" + std::to_string(j) + "," + std::to_string(k) + "} = " + std::to_string(got));
    }
}

void criterion1(Checks &c) {
  auto p = fx::p0();
  auto pf = to_float(p);
  auto refl = P(1, 1, {{1, 1, 2}, {1, 0, -1}, {0, 1, -1}});
  c(reflect(p) == refl, "reflection");
  auto r = common_zeros(p, reflect(p));
  c(r.torus_total == 2, "torus count " + std::to_string(r.torus_total));
  auto z = find_zero(r, 1.0, 1.0);
  c(z && z->multiplicity == 2, "N at (1,1)");
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k) c(dim_P(p, j, k) == (j + 1) * (k + 1) - 1, "dim P");
  VecPoly A1 = VecPoly::from_entries({to_float(P(0, 1, {{0, 0, 1}, {0, 1, -1}}))}, 0, 1);
  VecPoly A2 = VecPoly::from_entries({to_float(P(1, 0, {{0, 0, 1}, {1, 0, -1}}))}, 1, 0);
  A1.C *= std::sqrt(2.0);
  A2.C *= std::sqrt(2.0);
  double res = verify_agler(pf, A1, A2);
  c(res <= 1e-10, "displayed decomposition residual " + num(res));
  auto s = canonical_system(p);
  double d1 = fx::max_diff(dephased(s.E1.entry(0)), A1.entry(0));
  double d2 = fx::max_diff(dephased(s.F2.entry(0)), A2.entry(0));
  c(d1 <= 1e-10 && d2 <= 1e-10, "canonical pair vs displayed " + num(std::max(d1, d2)));
  c(s.identity_residual <= 1e-10, "canonical residual " + num(s.identity_residual));
  auto a = regularity_ladder(p, fx::pt(1, 1));
  c(a.nu && *a.nu == cd(-1.0) && a.nu_text == "-1", "nu = " + a.nu_text);
  c(a.k == 0, "k = " + std::to_string(a.k));
  auto d = generators(p);
  c(member(p, d, fx::lin1()), "1 - z1 member");
  c(!member(p, d, fx::one()), "1 not a member");
}

void criterion2(Checks &c) {
  auto p = fx::ex1();
  auto s = canonical_system(p);
  auto want = to_float(P(0, 2, {{0, 0, 2}, {0, 1, -4}, {0, 2, 2}}));
  double e = s.E1.dim() == 1 ? fx::max_diff(dephased(s.E1.entry(0)), want) : 1e300;
  c(e <= 1e-8, "E1 vs 2(1-z2)^2 " + num(e));
  c(multiplicity(p, reflect(p), GQ(1), GQ(1)) == 4, "N at (1,1)");
  check_dims(c, p, 2);
  c(s.unique_pair, "unique pair");
  auto a = regularity_ladder(p, fx::pt(1, 1));
  c(a.k == 2, "k = " + std::to_string(a.k));
  c(a.term_text.size() == 2 && a.term_text[0] == "2*eta" && a.term_text[1] == "-eta^2", "ladder terms");
  auto d = generators(p);
  for (auto q : {fx::lin2() * fx::lin2(), fx::lin1() * fx::lin2(), P(1, 1, {{0, 0, 1}, {1, 1, -1}})})
    c(member(p, d, q), "member " + to_string(q));
}

void criterion3(Checks &c) {
  auto p = fx::ex2();
  auto r = common_zeros(p, reflect(p));
  auto a = find_zero(r, 1.0, 1.0), b = find_zero(r, -1.0, -1.0);
  c(a && a->multiplicity == 6, "N at (1,1)");
  c(b && b->multiplicity == 2, "N at (-1,-1)");
  c(dim_P(p, 1, 1) == 0, "dim P_{1,1}");
  auto s = canonical_system(p);
  c(s.unique_pair, "unique pair");
  c(s.identity_residual <= 1e-6, "Agler residual " + num(s.identity_residual));
  auto la = regularity_ladder(p, std::vector<cd>{1.0, 1.0});
  auto lb = regularity_ladder(p, std::vector<cd>{-1.0, -1.0});
  c(la.k == 0 && la.next_fails, "k at (1,1) = " + std::to_string(la.k));
  c(lb.k == 0 && lb.next_fails, "k at (-1,-1) = " + std::to_string(lb.k));
  c(la.M == 2 && lb.M == 1, "vanishing orders " + std::to_string(la.M) + "," + std::to_string(lb.M));
}

void criterion4(Checks &c) {
  auto p = fx::ex3();
  auto s = canonical_system(p);
  auto want = to_float(P(3, 0, {{0, 0, 1}, {1, 0, -3}, {2, 0, 3}, {3, 0, -1}}));
  want = cd(std::sqrt(2.0)) * want;
  double e = s.E2.dim() == 1 ? fx::max_diff(dephased(s.E2.entry(0)), want) : 1e300;
  c(e <= 1e-8, "E2 vs sqrt2 (1-z1)^3 " + num(e));
  c(multiplicity(p, reflect(p), GQ(1), GQ(1)) == 6, "N at (1,1)");
  check_dims(c, p, 3);
  auto a = regularity_ladder(p, fx::pt(1, 1));
  c(a.k == 4 && a.next_fails, "k = " + std::to_string(a.k));
}

Poly2<GQ> pw(const Poly2<GQ> &a, int e) {
  Poly2<GQ> r = fx::one();
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

void criterion5(Checks &c) {
  auto p = to_float(fx::p0());
  auto g1 = to_float(pw(fx::lin1(), 8) * pw(fx::lin2(), 8));
  auto g2 = to_float(fx::lin1() * fx::lin2());
  auto g3 = to_float(P(0, 0, {{0, 0, 2}}));
  L2Options lo;
  lo.max_grid = 2048;
  auto v1 = l2_quadrature(g1, p, lo), v2 = l2_quadrature(g2, p, lo), v3 = l2_quadrature(g3, p, lo);
  c(v1.verdict == Verdict::Convergent, std::string("G1 ") + verdict_name(v1.verdict));
  c(v2.verdict == Verdict::Convergent, std::string("G2 ") + verdict_name(v2.verdict));
  c(v3.verdict == Verdict::Divergent, std::string("G3 ") + verdict_name(v3.verdict));
  FourierOptions fo;
  fo.grid = 2048;
  auto f1 = fourier_report(g1, p, 512, 512, fo);
  auto f2 = fourier_report(g2, p, 512, 512, fo);
  c(f1.l1_plateau, "G1 l1 plateau");
  c(f2.l2_plateau, "G2 l2 plateau");
  c(!f2.l1_plateau, "G2 l1 growth");
}

std::vector<Poly2<GQ>> random_products() {
  std::vector<Poly2<GQ>> atoms = {
      P(1, 1, {{0, 0, 2}, {1, 0, -1}, {0, 1, -1}}),  P(1, 1, {{0, 0, 4}, {1, 0, -1}, {0, 1, -1}}),
      P(1, 0, {{0, 0, 3}, {1, 0, -1}}),              P(0, 1, {{0, 0, 3}, {0, 1, -1}}),
      P(1, 1, {{0, 0, 3}, {1, 0, -1}, {1, 1, -1}}),  fx::ex1(),
      P(1, 1, {{1, 0, -1}, {0, 1, -1}}),             P(1, 1, {{0, 0, 2}, {1, 1, -1}}),
  };
  atoms[6].at(0, 0) = GQ(mpq_class(3), mpq_class(1));
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, int(atoms.size()) - 1), count(1, 3);
  std::vector<Poly2<GQ>> out;
  while (out.size() < 50) {
    Poly2<GQ> p = fx::one();
    int c = count(rng);
    for (int i = 0; i < c; ++i) p = p * atoms[pick(rng)];
    if (p.n < 1 || p.m < 1 || p.n > 3 || p.m > 3) continue;
    if (!check_semistable(p).semistable()) continue;
    // largest real or imaginary part 1; the residual tolerances are absolute
    mpq_class mx = 0;
    for (auto &x : p.a) mx = std::max({mx, mpq_class(abs(x.re)), mpq_class(abs(x.im))});
    for (auto &x : p.a) x = x / GQ(mx);
    out.push_back(p);
  }
  return out;
}

void criterion6(Checks &c) {
  for (auto &p : random_products()) {
    std::string tag = " on " + to_string(p);
    try {
    auto pf = to_float(p);
    auto pr = reflect(p);
    auto r = common_zeros(p, pr);
    c(r.total == 2 * p.n * p.m, "(a) total" + tag);
    c(r.torus_total % 2 == 0, "(a) torus evenness" + tag);
    auto s = canonical_system(p);
    double res = std::max(verify_agler(pf, s.E1, s.F2), verify_agler(pf, s.F1, s.E2));
    c(res <= 1e-8, "(b) Agler residual " + num(res) + tag);
    auto re = realize(pf, s.E1, s.F2, 1, 100);
    c(re.unitarity_residual <= 1e-9, "(c) unitarity " + num(re.unitarity_residual) + tag);
    c(re.transfer_residual <= 1e-8, "(c) transfer " + num(re.transfer_residual) + tag);
    double et = e_on_torus_residual(pf, s.E1, 1000);
    c(et <= 1e-8, "(d) torus identity " + num(et) + tag);
    for (auto &z : r.zeros) {
      auto c1 = to_chart(p, z.chart), c2 = to_chart(pr, z.chart);
      int res_m = z.exact ? resultant_multiplicity(c1, c2, z.ex, z.ey).multiplicity
                          : resultant_multiplicity(c1, c2, z.x, z.y).multiplicity;
      bool ok = res_m == z.multiplicity;
      if (z.exact) ok = ok && fulton_reduce(c1, c2, z.ex, z.ey) == z.multiplicity;
      c(ok, "(e) multiplicity agreement" + tag);
    }
    } catch (const std::exception &e) {
      c(false, std::string(e.what()) + tag);
    }
  }
  std::vector<Poly2<GQ>> stable = {
      fx::stable4(),
      P(1, 1, {{0, 0, 3}, {1, 0, -1}, {1, 1, -1}}),
      P(1, 1, {{0, 0, 2}, {1, 1, -1}}),
      P(1, 1, {{0, 0, 3}, {1, 0, -1}, {0, 1, -1}}),
      fx::stable4() * P(0, 1, {{0, 0, 3}, {0, 1, -1}}),
  };
  stable[3].at(0, 0) = GQ(mpq_class(3), mpq_class(1));
  for (size_t i = 0; i < stable.size(); ++i) {
    auto g = gram_model(stable[i]);
    std::string tag = " on " + to_string(stable[i]);
    c(g.spectrum_match, "(f) joint spectrum" + tag);
    c(g.dim_G == g.intersect_count, "(f) dim G vs intersect" + tag);
    if (i == 0) {
      double t = 2 - std::sqrt(3.0);
      bool hit = g.joint.size() == 1 && std::abs(g.joint[0].l1 - t) <= 1e-7 && std::abs(g.joint[0].l2 - t) <= 1e-7;
      c(hit, "(f) eigenvalue of 4 - z1 - z2");
      c(g.dim_G == 1, "(f) dim G = " + std::to_string(g.dim_G));
    }
  }
}

} // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Checks &)>>> crit = {
      {"p0 = 2 - z1 - z2", criterion1},     {"example 1", criterion2},
      {"example 2 (float)", criterion3},    {"example 3", criterion4},
      {"l2 and Fourier oracles", criterion5}, {"random semistable products", criterion6},
  };
  int failures = 0;
  for (size_t i = 0; i < crit.size(); ++i) {
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      crit[i].second(c);
    } catch (const std::exception &e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s (%.1fs)", c.failed.empty() ? "PASS" : "FAIL", i + 1, crit[i].first.c_str(), secs);
    for (size_t k = 0; k < c.failed.size() && k < 5; ++k) std::printf("%s %s", k ? ";" : ":", c.failed[k].c_str());
    if (c.failed.size() > 5) std::printf("; +%zu more", c.failed.size() - 5);
    std::printf("\n");
    failures += !c.failed.empty();
  }
  return failures ? 1 : 0;
}
