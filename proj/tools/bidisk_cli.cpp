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
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bidisk/analyze.hpp"

using namespace bidisk;

namespace {

struct Common {
  std::string file, mode, out = "json", config, q;
  unsigned long seed = 1;
  bool seed_set = false;
};

void emit(const json &j, const Common &c) {
  if (c.out == "text") std::cout << render_text(j);
  else std::cout << j.dump(2) << "\n";
}

Config config_of(const Common &c) {
  Config cfg = c.config.empty() ? Config{} : load_config(read_json_file(c.config));
  if (c.seed_set) {
    cfg.seed = c.seed;
    cfg.ladder.seed = unsigned(c.seed) + 4;
  }
  return cfg;
}

bool exact_mode(const Common &c, const PolyInput &in) {
  if (c.mode.empty()) return in.exact;
  if (c.mode == "exact") {
    if (!in.exact) throw PreconditionError("exact mode needs exact input");
    return true;
  }
  return false;
}

std::vector<cd> float_point(const std::vector<GQ> &pt) { return {pt[0].to_cd(), pt[1].to_cd()}; }

int run_cli(int argc, char **argv) {
  CLI::App app{"Analysis of polynomials without zeros on the bidisk"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App *s, bool needs_q) {
    s->add_option("-f,--file", c.file, "polynomial JSON")->required();
    s->add_option("--mode", c.mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    s->add_option("--out", c.out, "json|text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--config", c.config, "JSON config overriding tolerances");
    s->add_option("--seed", c.seed, "random seed")->each([&](const std::string &) { c.seed_set = true; });
    if (needs_q) s->add_option("--q", c.q, "second polynomial JSON");
  };

  auto *an = app.add_subcommand("analyze", "run every module and emit the analysis bundle");
  common(an, false);
  auto *ag = app.add_subcommand("agler", "canonical Agler system and realization");
  common(ag, false);
  std::string check_file;
  ag->add_option("--check", check_file, "JSON {\"A1\":[...],\"A2\":[...]} pair to verify");
  auto *zs = app.add_subcommand("zeros", "common zeros with the reflection (or --q)");
  common(zs, true);
  auto *id = app.add_subcommand("ideal", "generators and torus data of the ideal");
  common(id, false);
  auto *dm = app.add_subcommand("dim", "dimension of P_{j,k}");
  common(dm, false);
  int dj = 0, dk = 0;
  dm->add_option("--j", dj)->required();
  dm->add_option("--k", dk)->required();
  auto *mb = app.add_subcommand("member", "membership of q in the ideal");
  common(mb, true);
  auto *bd = app.add_subcommand("boundary", "non-tangential analysis at a torus point");
  common(bd, false);
  std::string point;
  int kmax = -1;
  bd->add_option("--point", point, "a,b")->required();
  bd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  auto *orc = app.add_subcommand("oracle", "independent checks");
  orc->require_subcommand(1);
  auto *ol2 = orc->add_subcommand("l2", "quadrature of |q/p|^2");
  common(ol2, true);
  int max_grid = 2048;
  ol2->add_option("--max-grid", max_grid);
  auto *ofo = orc->add_subcommand("fourier", "Fourier coefficients of q/p");
  common(ofo, true);
  int box = 64;
  std::string csv;
  ofo->add_option("--box", box, "largest coefficient index J = K");
  ofo->add_option("--csv", csv, "write the coefficient grid as CSV");
  auto *omu = orc->add_subcommand("mult", "sheared resultant multiplicity");
  common(omu, true);
  omu->add_option("--point", point, "a,b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  PolyInput in = read_poly_file(c.file);
  Config cfg = config_of(c);
  bool ex = exact_mode(c, in);
  auto second = [&]() {
    if (c.q.empty()) {
      PolyInput r;
      r.exact = in.exact;
      r.pe = reflect(in.pe);
      r.pf = reflect(in.pf);
      return r;
    }
    return read_poly_file(c.q);
  };

  if (*an) {
    auto b = analyze(in, ex, cfg);
    emit(b.report, c);
    return b.any_fail() ? 4 : 0;
  }
  if (*ag) {
    AglerSystem s = ex ? canonical_system(in.pe, cfg.agler) : canonical_system(in.pf, cfg.agler);
    json j = to_json(s);
    j["torus_identity_residual"] = e_on_torus_residual(in.pf, s.E1);
    j["realization"] = to_json(realize(in.pf, s.E1, s.F2, unsigned(cfg.seed), cfg.realization_points));
    if (!check_file.empty()) {
      json pj = read_json_file(check_file);
      auto vec = [&](const char *key) {
        std::vector<Poly2<cd>> e;
        int n = 0, m = 0;
        for (auto &x : pj.at(key)) {
          e.push_back(parse_poly(x).pf);
          n = std::max(n, e.back().n);
          m = std::max(m, e.back().m);
        }
        for (auto &x : e) x = x.with_bidegree(n, m);
        return VecPoly::from_entries(e, n, m);
      };
      double r = verify_agler(in.pf, vec("A1"), vec("A2"));
      j["check"] = {{"residual", r}, {"ok", r <= cfg.identity_tol}};
      emit(j, c);
      return r <= cfg.identity_tol ? 0 : 4;
    }
    emit(j, c);
    return 0;
  }
  if (*zs) {
    PolyInput q = second();
    IntersectionReport r = (ex && q.exact) ? common_zeros(in.pe, q.pe, unsigned(cfg.seed))
                                           : common_zeros(in.pf, q.pf, unsigned(cfg.seed));
    emit(to_json(r), c);
    return 0;
  }
  if (*id) {
    IdealDescription d = ex ? generators(in.pe) : generators(in.pf);
    emit(to_json(d), c);
    return 0;
  }
  if (*dm) {
    int v = ex ? dim_P(in.pe, dj, dk) : dim_P(in.pf, dj, dk);
    if (c.out == "json" && dm->count("--out")) emit(json{{"j", dj}, {"k", dk}, {"dim", v}}, c);
    else std::cout << v << "\n";
    return 0;
  }
  if (*mb) {
    if (c.q.empty()) throw FormatError("member needs --q");
    PolyInput q = read_poly_file(c.q);
    IdealDescription d = ex ? generators(in.pe) : generators(in.pf);
    MembershipResult r = (ex && q.exact) ? membership(d, in.pe, q.pe, MemberMode::Exact, cfg.membership)
                                         : membership(d, in.pf, q.pf, cfg.membership);
    emit(to_json(r), c);
    return 0;
  }
  if (*bd) {
    auto pt = parse_point(point);
    LadderOptions lo = cfg.ladder;
    if (kmax >= 0) lo.k_max = kmax;
    BoundaryAnalysis a = ex ? regularity_ladder(in.pe, pt, lo) : regularity_ladder(in.pf, float_point(pt), lo);
    emit(to_json(a), c);
    return 0;
  }
  if (*ol2) {
    PolyInput q = second();
    L2Options o = cfg.l2;
    o.max_grid = max_grid;
    emit(to_json(l2_quadrature(q.pf, in.pf, o)), c);
    return 0;
  }
  if (*ofo) {
    PolyInput q = second();
    auto f = fourier_report(q.pf, in.pf, box, box);
    if (!csv.empty()) {
      std::ofstream os(csv);
      os.precision(17);
      os << "j,k,re,im\n";
      for (int j = 0; j <= f.J; ++j)
        for (int k = 0; k <= f.K; ++k) os << j << "," << k << "," << f.coef(j, k).real() << "," << f.coef(j, k).imag() << "\n";
    }
    emit(to_json(f), c);
    return 0;
  }
  if (*omu) {
    PolyInput q = second();
    if (!in.exact || !q.exact) throw PreconditionError("resultant oracle needs exact input");
    auto pt = parse_point(point);
    emit(to_json(resultant_multiplicity(in.pe, q.pe, pt[0], pt[1], cfg.seed)), c);
    return 0;
  }
  return 2;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run_cli(argc, argv);
  } catch (const FormatError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError &e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const CrossCheckError &e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
