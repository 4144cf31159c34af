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
#include <doctest.h>

#include <random>

#include "bidisk/gram.hpp"
#include "fixtures.hpp"

using namespace bidisk;
using fx::P;

namespace {

VecPoly vec(std::vector<Poly2<cd>> e, int n, int m) { return VecPoly::from_entries(e, n, m); }

// max over random bidisk points of | |A|^2 - |B|^2 |
double norm_gap(const VecPoly &A, std::function<double(cd, cd)> target) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-0.7, 0.7);
  double d = 0;
  for (int s = 0; s < 50; ++s) {
    cd z1(U(rng), U(rng)), z2(U(rng), U(rng));
    d = std::max(d, std::abs(A.eval(z1, z2).squaredNorm() - target(z1, z2)));
  }
  return d;
}

void check_system(const Poly2<cd> &p, const AglerSystem &s) {
  CHECK(s.identity_residual <= 1e-8);
  CHECK(verify_agler(p, s.E1, s.F2) <= 1e-8);
  CHECK(verify_agler(p, s.F1, s.E2) <= 1e-8);
  CHECK(e_on_torus_residual(p, s.E1) <= 1e-8);
}

} // namespace

TEST_SUITE("agler") {

TEST_CASE("build_T1") {
  auto t = build_T1(fx::p0());
  REQUIRE(t.N == 1);
  REQUIRE(t.d == 1);
  CHECK(t.c[0](0, 0) == GQ(-2));
  CHECK(t.c[1](0, 0) == GQ(4));
  CHECK(t.c[2](0, 0) == GQ(-2));

  auto one = build_T1(fx::one(1, 0));
  CHECK(one.N == 1);
  CHECK(one.c[one.d](0, 0) == GQ(1));
  for (int k = -one.d; k <= one.d; ++k)
    if (k) CHECK(one.c[k + one.d](0, 0) == GQ(0));

  auto e1 = build_T1(fx::ex1()).to_float();
  REQUIRE(e1.N == 1);
  std::vector<double> want = {4, -16, 24, -16, 4};
  for (int k = -2; k <= 2; ++k) CHECK(std::abs(e1.coef(k)(0, 0) - want[k + 2]) < 1e-12);
}

TEST_CASE("fejer_riesz") {
  LaurentMat T(1, 1);
  T.c[0](0, 0) = -2;
  T.c[1](0, 0) = 4;
  T.c[2](0, 0) = -2;
  auto f = fejer_riesz(T);
  REQUIRE(f.E.degree() == 1);
  cd c0 = f.E.c[0](0, 0), c1 = f.E.c[1](0, 0);
  CHECK(std::abs(std::abs(c0) - std::sqrt(2.0)) < 1e-7);
  CHECK(std::abs(c1 / c0 + 1.0) < 1e-7);
  CHECK(f.residual <= 1e-6);

  LaurentMat I(2, 0);
  I.c[0] = MatC::Identity(2, 2);
  auto fi = fejer_riesz(I);
  CHECK((fi.E.c[0].adjoint() * fi.E.c[0] - MatC::Identity(2, 2)).norm() < 1e-10);

  auto fe = fejer_riesz(build_T1(fx::ex1()));
  REQUIRE(fe.E.degree() == 2);
  cd a = fe.E.c[0](0, 0);
  CHECK(std::abs(std::abs(a) - 2.0) < 1e-6);
  CHECK(std::abs(fe.E.c[1](0, 0) / a + 2.0) < 1e-6);
  CHECK(std::abs(fe.E.c[2](0, 0) / a - 1.0) < 1e-6);
}

TEST_CASE("canonical system of p0") {
  auto s = canonical_system(fx::p0());
  auto p = to_float(fx::p0());
  check_system(p, s);
  REQUIRE(s.E1.dim() == 1);
  auto e = fx::normalized(s.E1.entry(0));
  CHECK(fx::max_diff(e, to_float(P(0, 1, {{0, 0, 1}, {0, 1, -1}}))) < 1e-8);
  CHECK(norm_gap(s.F2, [](cd z1, cd) { return 2 * std::norm(1.0 - z1); }) < 1e-8);
  CHECK(s.unique_pair);
  CHECK(s.dim_G() == 0);
  // the displayed decomposition
  VecPoly A1 = vec({to_float(P(0, 1, {{0, 0, 1}, {0, 1, -1}}))}, 0, 1);
  VecPoly A2 = vec({to_float(P(1, 0, {{0, 0, 1}, {1, 0, -1}}))}, 1, 0);
  A1.C *= std::sqrt(2.0);
  A2.C *= std::sqrt(2.0);
  CHECK(verify_agler(p, A1, A2) <= 1e-12);
  WeightedVec w1{{P(0, 1, {{0, 0, 1}, {0, 1, -1}})}, {2}}, w2{{P(1, 0, {{0, 0, 1}, {1, 0, -1}})}, {2}};
  CHECK(verify_agler_exact(fx::p0(), w1, w2));
  CHECK_FALSE(verify_agler_exact(fx::p0(), w1, w1));
  VecPoly z1(0, 1, 1), z2(0, 1, 1);
  CHECK(verify_agler(p, z1, z2) > 0.1);
}

TEST_CASE("canonical system of p = 1 at bidegree (1,2)") {
  auto s = canonical_system(fx::one(1, 2));
  check_system(to_float(fx::one(1, 2)), s);
  CHECK(norm_gap(s.E1, [](cd, cd) { return 1.0; }) < 1e-9);
  CHECK(norm_gap(s.F1, [](cd, cd z2) { return std::norm(z2 * z2); }) < 1e-9);
  CHECK(norm_gap(s.E2, [](cd, cd z2) { return 1.0 + std::norm(z2); }) < 1e-9);
  CHECK(norm_gap(s.F2, [](cd z1, cd z2) { return std::norm(z1) * (1.0 + std::norm(z2)); }) < 1e-9);
  CHECK(s.dim_G() == 2);
  CHECK(norm_gap(s.G, [](cd, cd z2) { return 1.0 + std::norm(z2); }) < 1e-9);
}

TEST_CASE("canonical systems of the worked examples") {
  auto s1 = canonical_system(fx::ex1());
  check_system(to_float(fx::ex1()), s1);
  CHECK(norm_gap(s1.E1, [](cd, cd z2) { return 4 * std::norm((1.0 - z2) * (1.0 - z2)); }) < 1e-7);

  auto s3 = canonical_system(fx::ex3());
  check_system(to_float(fx::ex3()), s3);
  REQUIRE(s3.E2.dim() == 1);
  auto e2 = fx::normalized(s3.E2.entry(0));
  auto want = to_float(P(3, 0, {{0, 0, 1}, {1, 0, -3}, {2, 0, 3}, {3, 0, -1}}));
  CHECK(fx::max_diff(e2, want) < 1e-6);
  CHECK(s3.unique_pair);

  auto s2 = canonical_system(fx::ex2());
  check_system(fx::ex2(), s2);
  CHECK(s2.unique_pair);
}

TEST_CASE("unique pair iff the torus count is 2nm") {
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4(), fx::one(1, 2)}) {
    auto s = canonical_system(p);
    auto t = torus_multiplicity_total(p);
    CHECK(s.unique_pair == (t.torus_total == 2 * p.n * p.m));
  }
}

TEST_CASE("E and F are zero free on the disk") {
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4()}) {
    auto s = canonical_system(p);
    if (s.n == 1) {
      std::vector<cd> c;
      for (auto &m : s.E1m.c) c.push_back(m(0, 0));
      for (cd r : roots(UPoly<cd>(c))) CHECK(std::abs(r) >= 1 - 1e-6);
    } else {
      double lo = 1e300;
      for (int i = 0; i < 20; ++i)
        for (int t = 0; t < 64; ++t) lo = std::min(lo, std::abs(s.E1m.eval(std::polar(0.9 * i / 19, t * M_PI / 32)).determinant()));
      CHECK(lo > 1e-8);
    }
  }
}

TEST_CASE("intertwine") {
  auto A = vec({to_float(P(0, 1, {{0, 0, 1}, {0, 1, -1}}))}, 0, 1);
  auto V = intertwine(A, A);
  CHECK((V - MatC::Identity(1, 1)).norm() < 1e-10);

  auto B = vec({to_float(P(1, 0, {{0, 0, 1}})), to_float(P(1, 0, {{1, 0, 1}}))}, 1, 0);
  auto C = vec({to_float(P(1, 0, {{1, 0, 1}})), to_float(P(1, 0, {{0, 0, 1}}))}, 1, 0);
  auto W = intertwine(B, C);
  MatC perm(2, 2);
  perm << 0, 1, 1, 0;
  CHECK((W - perm).norm() < 1e-10);

  cd ph = std::polar(1.0, 0.7);
  auto D = A;
  D.C *= ph;
  auto U = intertwine(A, D);
  CHECK(std::abs(U(0, 0) - ph) < 1e-10);

  auto E = A;
  E.C *= 2.0;
  CHECK_THROWS(intertwine(A, E));
}

TEST_CASE("realize") {
  VecPoly e0(0, 0, 0);
  auto r0 = realize(to_float(fx::one()), e0, e0);
  CHECK(r0.U.rows() == 1);
  CHECK(std::abs(r0.U(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(r0.transfer(0.3, -0.2) - 1.0) < 1e-12);

  auto p = to_float(fx::p0());
  auto s = canonical_system(fx::p0());
  auto r = realize(p, s.E1, s.F2);
  CHECK(r.U.rows() == 3);
  CHECK(r.unitarity_residual <= 1e-9);
  CHECK(r.transfer_residual <= 1e-8);
  cd z1(0.2, 0.1), z2(-0.3, 0.4);
  CHECK(std::abs(r.transfer(z1, z2) - reflect(p)(z1, z2) / p(z1, z2)) < 1e-10);
  CHECK(r.spectral_radius_D <= 1 + 1e-9);

  auto s1 = canonical_system(fx::ex1());
  auto r1 = realize(to_float(fx::ex1()), s1.E1, s1.F2);
  CHECK(r1.U.rows() == 4);
  CHECK(r1.unitarity_residual <= 1e-9);
  CHECK(r1.transfer_residual <= 1e-8);
  CHECK(r1.spectral_radius_D <= 1 + 1e-9);
}

TEST_CASE("gram model") {
  auto g = gram_model(fx::one(1, 2));
  CHECK(g.dim_G == 2);
  CHECK(g.T1.norm() < 1e-8);
  CHECK((g.T2adj * g.T2adj).norm() < 1e-8);
  REQUIRE(g.joint.size() >= 1);
  for (auto &e : g.joint) CHECK(std::abs(e.l1) + std::abs(e.l2) < 1e-6);
  CHECK(g.spectrum_match);

  auto h = gram_model(fx::stable4());
  CHECK(h.dim_G == 1);
  REQUIRE(h.joint.size() == 1);
  double r = 2 - std::sqrt(3.0);
  CHECK(std::abs(h.joint[0].l1 - r) < 1e-7);
  CHECK(std::abs(h.joint[0].l2 - r) < 1e-7);
  CHECK(h.spectrum_match);
  CHECK(h.intersect_count == h.dim_G);

  auto k = gram_model(P(1, 1, {{0, 0, 2}, {1, 0, -1}}));
  CHECK(k.intersect_count == k.dim_G);
  CHECK(k.spectrum_match);

  CHECK_THROWS(gram_model(fx::p0()));
}

}
