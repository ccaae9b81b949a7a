// Command-line front end: every analysis is a subcommand writing
// deterministic CSV (and SVG maps where a picture helps). Options can come
// from a TOML config file via --config; flags given on the command line win.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "rvlb/core.hpp"
#include "rvlb/eqeq.hpp"
#include "rvlb/io.hpp"
#include "rvlb/l2.hpp"
#include "rvlb/linf.hpp"
#include "rvlb/simulate.hpp"
#include "rvlb/vonneumann.hpp"

namespace {

using namespace rvlb;

Variant variant_of(const std::string& s) {
  return s == "standard" ? Variant::StandardD2Q4 : Variant::TwistedD2Q4;
}

Equilibrium equilibrium_of(const std::string& s) {
  return s == "intrinsic" ? Equilibrium::Intrinsic
                          : Equilibrium::NonIntrinsic;
}

std::string case_token(Variant var, Equilibrium eq, bool track) {
  std::string t = var == Variant::TwistedD2Q4 ? "twisted" : "standard";
  t += eq == Equilibrium::Intrinsic ? "-intrinsic" : "-product";
  t += track ? "-uv" : "-u0";
  return t;
}

int grid_count(double lo, double hi, double step) {
  return int(std::llround((hi - lo) / step)) + 1;
}

// ---------------------------------------------------------------- spot ----

struct SpotConfig {
  std::string variant = "twisted";
  std::vector<double> sigma_q;  // defaults filled below
  double sigma_xy = 1.0 / std::numbers::sqrt3;
  double theta_deg = 0.0;
  double lambda = 1.0;
  int n = 128;
  int steps = 2000;
  double v_step = 0.01;
  double v_max = 1.6;
  std::string out_prefix = "spot";
};

int cmd_spot(const SpotConfig& cfg) {
  SpotConfig c = cfg;
  if (c.sigma_q.empty()) c.sigma_q = {0.1, 0.05, 0.02, 0.01, 0.005};
  double theta = c.theta_deg * std::numbers::pi / 180.0;
  Vec2 dir(std::cos(theta), std::sin(theta));

  CsvFile runs({"sq", "sxy", "Vx", "Vy", "utilde_mode", "equilibrium",
                "variant", "stable", "blowup_step"});
  std::vector<std::string> table_header{"scheme"};
  for (double sq : c.sigma_q)
    table_header.push_back("sigma_q=" + CsvField(sq).text);
  CsvFile table(table_header);

  struct Row {
    Equilibrium eq;
    bool track;
    const char* name;
  } rows[] = {
      {Equilibrium::NonIntrinsic, false, "product u=0"},
      {Equilibrium::NonIntrinsic, true, "product u=V"},
      {Equilibrium::Intrinsic, false, "intrinsic u=0"},
      {Equilibrium::Intrinsic, true, "intrinsic u=V"},
  };

  std::printf("max stable |V| (lambda units), theta = %g deg\n", c.theta_deg);
  std::printf("%-14s", "scheme");
  for (double sq : c.sigma_q) std::printf("  sigma_q=%-7g", sq);
  std::printf("\n");

  for (const Row& row : rows) {
    std::vector<CsvField> table_row{row.name};
    std::printf("%-14s", row.name);
    for (double sigma_q : c.sigma_q) {
      SchemeSpec spec;
      spec.variant = variant_of(c.variant);
      spec.equilibrium = row.eq;
      spec.lambda = c.lambda;
      spec.s_q = rate_from_sigma(sigma_q);
      spec.s_xy = rate_from_sigma(c.sigma_xy);

      double last_stable = 0.0;
      int count = int(std::llround(c.v_max / c.v_step));
      for (int i = 0; i <= count; ++i) {
        double speed = double(i) * c.v_step * c.lambda;
        spec.V = speed * dir;
        spec.u_rel = row.track ? spec.V : Vec2(0, 0);
        ExperimentReport rep = run_spot_experiment(spec, c.n, c.steps);
        runs.add_row({spec.s_q, spec.s_xy, spec.V.x(), spec.V.y(),
                      row.track ? "v" : "zero",
                      row.eq == Equilibrium::Intrinsic ? "intrinsic"
                                                       : "product",
                      c.variant, rep.stable, rep.blowup_step});
        if (!rep.stable) break;
        last_stable = speed;
      }
      double in_lambda = last_stable / c.lambda;
      table_row.emplace_back(in_lambda);
      std::printf("  %-15.2f", in_lambda);
    }
    std::printf("\n");
    table.add_row(table_row);
  }

  write_text_file(resolve_output_path(c.out_prefix + "_runs.csv"),
                  runs.text());
  write_text_file(resolve_output_path(c.out_prefix + "_table.csv"),
                  table.text());
  return 0;
}

// ------------------------------------------------------------- vn-scan ----

struct VnConfig {
  std::string variant = "twisted";
  std::string equilibrium = "product";
  std::string u_mode = "zero";
  double sq = 1.0, sxy = 1.0, lambda = 1.0;
  double v_min = -1.5, v_max = 1.5, v_step = 0.02;
  int k_grid = 64, k_refine = 128;
  std::string out_csv = "vn.csv";
  std::string out_svg = "vn.svg";
};

int cmd_vn(const VnConfig& cfg) {
  SchemeSpec spec;
  spec.variant = variant_of(cfg.variant);
  spec.equilibrium = equilibrium_of(cfg.equilibrium);
  spec.lambda = cfg.lambda;
  spec.s_q = cfg.sq;
  spec.s_xy = cfg.sxy;

  ScanOptions opt;
  opt.v_min = cfg.v_min;
  opt.v_max = cfg.v_max;
  opt.v_step = cfg.v_step;
  opt.k_grid = cfg.k_grid;
  opt.k_grid_refine = cfg.k_refine;
  opt.u_mode = cfg.u_mode == "v" ? URelMode::EqualsV : URelMode::Fixed;

  RegionGrid grid = stability_region_scan(spec, opt);

  CsvFile csv({"Vx", "Vy", "max_r", "verdict"});
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix)
      csv.add_row({grid.v_axis_x[ix], grid.v_axis_y[iy], grid.r_at(ix, iy),
                   grid.stable_at(ix, iy)});
  write_text_file(resolve_output_path(cfg.out_csv), csv.text());

  if (!cfg.out_svg.empty()) {
    GridLayer layer;
    layer.nx = grid.nx;
    layer.ny = grid.ny;
    layer.x_min = cfg.v_min;
    layer.x_max = cfg.v_max;
    layer.y_min = cfg.v_min;
    layer.y_max = cfg.v_max;
    layer.cells.resize(size_t(grid.nx) * grid.ny);
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int ix = 0; ix < grid.nx; ++ix)
        layer.cells[size_t(iy) * grid.nx + ix] =
            grid.stable_at(ix, iy) ? 1 : 0;
    SvgStyle style;
    style.title = "spectral stability, " +
                  case_token(spec.variant, spec.equilibrium,
                             opt.u_mode == URelMode::EqualsV) +
                  " s=(" + CsvField(cfg.sq).text + "," +
                  CsvField(cfg.sxy).text + ")";
    style.class_names = {"unstable", "stable"};
    style.class_colors = {"#f2f2f2", "#3a7bd5"};
    style.cell_px = std::max(2, 600 / std::max(grid.nx, 1));
    write_text_file(resolve_output_path(cfg.out_svg),
                    svg_region_map(layer, nullptr, style));
  }

  long stable = 0;
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix)
      if (grid.stable_at(ix, iy)) ++stable;
  std::printf("vn-scan: %d x %d cells, %ld stable\n", grid.nx, grid.ny,
              stable);
  return 0;
}

// --------------------------------------------------------- linf-region ----

struct LinfConfig {
  std::string variant = "twisted";
  std::string equilibrium = "product";
  std::string u_mode = "zero";
  double sq = 1.0, sxy = 1.0, lambda = 1.0;
  double v_min = -1.6, v_max = 1.6, v_step = 0.02;
  int oracle_samples = 4000;
  std::string out_csv = "linf.csv";
  std::string out_svg = "linf.svg";
};

int cmd_linf(const LinfConfig& cfg, unsigned long long seed) {
  LinfCase lc;
  lc.variant = variant_of(cfg.variant);
  lc.equilibrium = equilibrium_of(cfg.equilibrium);
  lc.u_tracks_v = cfg.u_mode == "v";
  lc.lambda = cfg.lambda;
  lc.s_q = cfg.sq;
  lc.s_xy = cfg.sxy;
  std::string token = case_token(lc.variant, lc.equilibrium, lc.u_tracks_v);

  int n = grid_count(cfg.v_min, cfg.v_max, cfg.v_step);
  CsvFile csv({"case", "sq", "sxy", "Vx", "Vy", "predicate", "oracle"});
  GridLayer layer;
  layer.nx = layer.ny = n;
  layer.x_min = layer.y_min = cfg.v_min;
  layer.x_max = layer.y_max = cfg.v_max;
  layer.cells.resize(size_t(n) * n);
  for (int iy = 0; iy < n; ++iy) {
    double vy = (cfg.v_min + iy * cfg.v_step) * cfg.lambda;
    for (int ix = 0; ix < n; ++ix) {
      double vx = (cfg.v_min + ix * cfg.v_step) * cfg.lambda;
      Vec2 v(vx, vy);
      bool pred = linf_region_predicate(lc, v).stable;
      bool orac = linf_oracle(lc, v);
      csv.add_row({token, cfg.sq, cfg.sxy, vx, vy, pred, orac});
      unsigned char cls = pred == orac ? (pred ? 1 : 0) : (pred ? 2 : 3);
      layer.cells[size_t(iy) * n + ix] = cls;
    }
  }
  write_text_file(resolve_output_path(cfg.out_csv), csv.text());

  if (!cfg.out_svg.empty()) {
    PointLayer pts;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uv(cfg.v_min, cfg.v_max);
    for (int i = 0; i < cfg.oracle_samples; ++i) {
      Vec2 v(uv(rng) * cfg.lambda, uv(rng) * cfg.lambda);
      pts.xs.push_back(v.x() / cfg.lambda);
      pts.ys.push_back(v.y() / cfg.lambda);
      pts.cls.push_back(linf_oracle(lc, v) ? 4 : 5);
    }
    SvgStyle style;
    style.title = "entrywise bound region, " + token + " s=(" +
                  CsvField(cfg.sq).text + "," + CsvField(cfg.sxy).text + ")";
    style.class_names = {"",          "predicate",      "predicate only",
                         "oracle only", "oracle stable", "oracle unstable"};
    style.class_colors = {"#f2f2f2", "#9ec9ff", "#d94343",
                          "#7a2bd5", "#1d6b2a", "#c2c2c2"};
    style.cell_px = std::max(2, 600 / n);
    write_text_file(resolve_output_path(cfg.out_svg),
                    svg_region_map(layer, &pts, style));
  }
  return 0;
}

// --------------------------------------------------------- l2-structure ----

struct L2Config {
  std::string variant = "twisted";
  std::string equilibrium = "product";
  std::string u_mode = "v";
  double sq = 1.0, sxy = 1.0, lambda = 1.0;
  double v_min = -1.2, v_max = 1.2, v_step = 0.05;
  std::string out_csv = "l2.csv";
};

int cmd_l2(const L2Config& cfg) {
  SchemeSpec spec;
  spec.variant = variant_of(cfg.variant);
  spec.equilibrium = equilibrium_of(cfg.equilibrium);
  spec.lambda = cfg.lambda;
  spec.s_q = cfg.sq;
  spec.s_xy = cfg.sxy;
  bool track = cfg.u_mode == "v";

  int n = grid_count(cfg.v_min, cfg.v_max, cfg.v_step);
  CsvFile csv({"mode", "equilibrium", "Vx", "Vy", "sq", "sxy", "verdict"});
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      Vec2 v((cfg.v_min + ix * cfg.v_step) * cfg.lambda,
             (cfg.v_min + iy * cfg.v_step) * cfg.lambda);
      spec.V = v;
      spec.u_rel = track ? v : Vec2(0, 0);
      StructureVerdict verdict = check_structure(spec);
      const char* word = verdict == StructureVerdict::None ? "none"
                         : verdict == StructureVerdict::Prestructure
                             ? "prestructure"
                             : "structure";
      csv.add_row({track ? "v" : "zero",
                   spec.equilibrium == Equilibrium::Intrinsic ? "intrinsic"
                                                              : "product",
                   v.x(), v.y(), cfg.sq, cfg.sxy, word});
    }
  }
  write_text_file(resolve_output_path(cfg.out_csv), csv.text());
  return 0;
}

// ---------------------------------------------------------------- eqeq ----

struct EqeqConfig {
  std::string variant = "twisted";
  std::string equilibrium = "product";
  std::string u_mode = "zero";
  std::vector<double> sigma_q;   // defaults below
  std::vector<double> sigma_xy;  // defaults below
  double lambda = 1.0;
  double v_min = -0.8, v_max = 0.8, v_step = 0.4;
  std::string out_csv = "eqeq.csv";
};

int cmd_eqeq(const EqeqConfig& cfg) {
  EqeqConfig c = cfg;
  if (c.sigma_q.empty()) c.sigma_q = {0.05, 1.0 / std::sqrt(12.0), 0.4};
  if (c.sigma_xy.empty()) c.sigma_xy = {0.1, 0.5};
  const Vec2 dirs[] = {Vec2(1, 0), Vec2(0, 1), Vec2(1, 1), Vec2(1, -1)};
  const char* dir_names[] = {"n(1 0)", "n(0 1)", "n(1 1)", "n(1 -1)"};

  CsvFile csv({"flavor", "u_mode", "Vx", "Vy", "sq", "sxy", "entry",
               "closed_form", "fitted", "rel_err"});
  bool track = c.u_mode == "v";
  int nv = grid_count(c.v_min, c.v_max, c.v_step);
  for (double sig_q : c.sigma_q) {
    for (double sig_xy : c.sigma_xy) {
      for (int iy = 0; iy < nv; ++iy) {
        for (int ix = 0; ix < nv; ++ix) {
          SchemeSpec spec;
          spec.variant = variant_of(c.variant);
          spec.equilibrium = equilibrium_of(c.equilibrium);
          spec.lambda = c.lambda;
          spec.s_q = rate_from_sigma(sig_q);
          spec.s_xy = rate_from_sigma(sig_xy);
          spec.V = Vec2((c.v_min + ix * c.v_step) * c.lambda,
                        (c.v_min + iy * c.v_step) * c.lambda);
          spec.u_rel = track ? spec.V : Vec2(0, 0);
          for (int d = 0; d < 4; ++d) {
            DispersionFit fit = numeric_dispersion_fit(spec, dirs[d]);
            struct Entry {
              const char* tag;
              double closed, fitted;
            } entries[] = {{"c1", fit.c1_closed, fit.c1},
                           {"c2", fit.c2_closed, fit.c2},
                           {"c3", fit.c3_closed, fit.c3}};
            for (const Entry& e : entries) {
              double rel = std::fabs(e.fitted - e.closed) /
                           std::max(std::fabs(e.closed), 1e-12);
              csv.add_row({c.equilibrium, track ? "v" : "zero", spec.V.x(),
                           spec.V.y(), spec.s_q, spec.s_xy,
                           std::string(e.tag) + "@" + dir_names[d], e.closed,
                           e.fitted, rel});
            }
          }
        }
      }
    }
  }
  write_text_file(resolve_output_path(c.out_csv), csv.text());
  return 0;
}

// ------------------------------------------------------------- validate ----

bool report(const char* name, bool ok) {
  std::printf("%-44s %s\n", name, ok ? "PASS" : "FAIL");
  return ok;
}

int cmd_validate(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uv(-1.4, 1.4);
  std::uniform_real_distribution<double> us(0.05, 1.95);
  bool all = true;

  {  // collision spectrum and mass conservation
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      SchemeSpec s;
      s.variant = (t % 2) ? Variant::StandardD2Q4 : Variant::TwistedD2Q4;
      s.equilibrium =
          (t % 3) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
      s.s_q = us(rng);
      s.s_xy = us(rng);
      s.V = Vec2(uv(rng), uv(rng));
      s.u_rel = Vec2(uv(rng), uv(rng));
      Mat4 c = collision_matrix(s);
      Eigen::Vector4cd eig = c.eigenvalues();
      std::vector<double> got{eig(0).real(), eig(1).real(), eig(2).real(),
                              eig(3).real()};
      for (const auto& e : {eig(0), eig(1), eig(2), eig(3)})
        ok = ok && std::fabs(e.imag()) < 1e-10;
      std::vector<double> want{1.0, 1.0 - s.s_q, 1.0 - s.s_q, 1.0 - s.s_xy};
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      for (int k = 0; k < 4; ++k) ok = ok && std::fabs(got[k] - want[k]) < 1e-10;
      Eigen::RowVector4d ones = Eigen::RowVector4d::Ones();
      ok = ok && ((ones * c) - ones).cwiseAbs().maxCoeff() < 1e-12;
    }
    all = report("collision spectrum + mass rows", ok) && all;
  }

  {  // equilibrium independence of the frame parameter
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      SchemeSpec s;
      s.variant = (t % 2) ? Variant::StandardD2Q4 : Variant::TwistedD2Q4;
      s.equilibrium =
          (t % 3) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
      s.V = Vec2(uv(rng), uv(rng));
      s.u_rel = Vec2(0, 0);
      Vec4 a = equilibrium_distributions(s, 1.7);
      s.u_rel = Vec2(uv(rng), uv(rng));
      Vec4 b = equilibrium_distributions(s, 1.7);
      ok = (a - b).cwiseAbs().maxCoeff() < 1e-12;
    }
    all = report("equilibrium free of frame parameter", ok) && all;
  }

  {  // single-rate spectra identical for both frame choices
    bool ok = true;
    for (int t = 0; t < 60 && ok; ++t) {
      SchemeSpec s;
      s.variant = Variant::TwistedD2Q4;
      s.equilibrium =
          (t % 2) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
      s.s_q = s.s_xy = us(rng);
      s.V = Vec2(uv(rng), uv(rng));
      Vec2 kappa(uv(rng), uv(rng));
      s.u_rel = Vec2(0, 0);
      double r0 = spectral_radius(amplification_matrix(s, kappa));
      s.u_rel = s.V;
      double r1 = spectral_radius(amplification_matrix(s, kappa));
      ok = std::fabs(r0 - r1) < 1e-10;
    }
    all = report("single-rate spectra frame independent", ok) && all;
  }

  {  // entrywise bound predicates against the brute-force margin
    bool ok = true;
    long checked = 0;
    for (int t = 0; t < 4000; ++t) {
      LinfCase c;
      c.variant = (t % 2) ? Variant::StandardD2Q4 : Variant::TwistedD2Q4;
      c.equilibrium =
          (t % 3) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
      c.u_tracks_v = (t % 4) < 2;
      c.s_q = us(rng);
      c.s_xy = us(rng);
      Vec2 v(uv(rng), uv(rng));
      double margin = linf_oracle_margin(c, v);
      LinfPredicate p = linf_region_predicate(c, v);
      if (std::fabs(margin) < kLinfSweepCollar ||
          std::fabs(p.slack) < kLinfSweepCollar)
        continue;
      ++checked;
      if ((margin >= -kLinfOracleTol) != p.stable) ok = false;
    }
    all = report("entrywise predicates match the oracle", ok && checked > 3000) && all;
  }

  {  // weight verdicts against the closed conditions
    bool ok = true;
    for (double vx = -1.1; vx <= 1.11; vx += 0.1) {
      for (double vy = -1.1; vy <= 1.11; vy += 0.1) {
        SchemeSpec s;
        s.variant = Variant::TwistedD2Q4;
        s.equilibrium = Equilibrium::NonIntrinsic;
        s.s_q = 1.4;
        s.s_xy = 0.7;
        s.V = Vec2(vx, vy);
        s.u_rel = s.V;
        bool want = std::max(std::fabs(vx), std::fabs(vy)) < 1.0 - 1e-9;
        ok = ok && ((check_structure(s) != StructureVerdict::None) == want);
      }
    }
    all = report("weight verdicts match closed conditions", ok) && all;
  }

  {  // dispersion closed forms against the branch fit
    bool ok = true;
    for (int t = 0; t < 12; ++t) {
      SchemeSpec s;
      s.variant = (t % 2) ? Variant::StandardD2Q4 : Variant::TwistedD2Q4;
      s.equilibrium =
          (t % 3) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
      s.s_q = rate_from_sigma(0.05 + 0.05 * (t % 5));
      s.s_xy = rate_from_sigma(0.1 + 0.04 * (t % 7));
      s.V = Vec2(0.35, -0.2);
      s.u_rel = (t % 4) < 2 ? s.V : Vec2(0, 0);
      DispersionFit f = numeric_dispersion_fit(s, Vec2(1, 1));
      ok = ok && std::fabs(f.c1 - f.c1_closed) < 1e-6 &&
           std::fabs(f.c2 - f.c2_closed) <
               std::max(1e-4 * std::fabs(f.c2_closed), 5e-7) &&
           std::fabs(f.c3 - f.c3_closed) <
               std::max(1e-4 * std::fabs(f.c3_closed), 1e-6);
    }
    all = report("dispersion closed forms match the fit", ok) && all;
  }

  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative-velocity lattice Boltzmann stability toolkit"};
  app.set_config("--config", "", "TOML config file; flags override");
  int threads = 0;
  unsigned long long seed = 12345;
  app.add_option("--threads", threads, "worker threads (0 = library default)");
  app.add_option("--seed", seed, "RNG seed for sampled suites");
  app.require_subcommand(1);

  SpotConfig spot_cfg;
  auto* spot = app.add_subcommand("spot", "advected-spot blow-up tables");
  spot->add_option("--variant", spot_cfg.variant)
      ->check(CLI::IsMember({"twisted", "standard"}));
  spot->add_option("--sigma-q", spot_cfg.sigma_q, "Henon parameter list");
  spot->add_option("--sigma-xy", spot_cfg.sigma_xy);
  spot->add_option("--theta-deg", spot_cfg.theta_deg, "advection direction");
  spot->add_option("--lambda", spot_cfg.lambda);
  spot->add_option("--n", spot_cfg.n, "cells per side");
  spot->add_option("--steps", spot_cfg.steps);
  spot->add_option("--v-step", spot_cfg.v_step, "scan increment (lambda)");
  spot->add_option("--v-max", spot_cfg.v_max, "scan cap (lambda)");
  spot->add_option("--out-prefix", spot_cfg.out_prefix);

  VnConfig vn_cfg;
  auto* vn = app.add_subcommand("vn-scan", "spectral stability region scan");
  vn->add_option("--variant", vn_cfg.variant)
      ->check(CLI::IsMember({"twisted", "standard"}));
  vn->add_option("--equilibrium", vn_cfg.equilibrium)
      ->check(CLI::IsMember({"product", "intrinsic"}));
  vn->add_option("--u-mode", vn_cfg.u_mode)
      ->check(CLI::IsMember({"zero", "v"}));
  vn->add_option("--sq", vn_cfg.sq);
  vn->add_option("--sxy", vn_cfg.sxy);
  vn->add_option("--lambda", vn_cfg.lambda);
  vn->add_option("--v-min", vn_cfg.v_min);
  vn->add_option("--v-max", vn_cfg.v_max);
  vn->add_option("--v-step", vn_cfg.v_step);
  vn->add_option("--k-grid", vn_cfg.k_grid, "wavenumbers per axis");
  vn->add_option("--k-refine", vn_cfg.k_refine, "refinement near borders");
  vn->add_option("--out-csv", vn_cfg.out_csv);
  vn->add_option("--out-svg", vn_cfg.out_svg, "empty string skips the map");

  LinfConfig linf_cfg;
  auto* linf = app.add_subcommand("linf-region",
                                  "entrywise bound region and oracle");
  linf->add_option("--variant", linf_cfg.variant)
      ->check(CLI::IsMember({"twisted", "standard"}));
  linf->add_option("--equilibrium", linf_cfg.equilibrium)
      ->check(CLI::IsMember({"product", "intrinsic"}));
  linf->add_option("--u-mode", linf_cfg.u_mode)
      ->check(CLI::IsMember({"zero", "v"}));
  linf->add_option("--sq", linf_cfg.sq);
  linf->add_option("--sxy", linf_cfg.sxy);
  linf->add_option("--lambda", linf_cfg.lambda);
  linf->add_option("--v-min", linf_cfg.v_min);
  linf->add_option("--v-max", linf_cfg.v_max);
  linf->add_option("--v-step", linf_cfg.v_step);
  linf->add_option("--oracle-samples", linf_cfg.oracle_samples);
  linf->add_option("--out-csv", linf_cfg.out_csv);
  linf->add_option("--out-svg", linf_cfg.out_svg);

  L2Config l2_cfg;
  auto* l2 = app.add_subcommand("l2-structure", "weight existence verdicts");
  l2->add_option("--variant", l2_cfg.variant)
      ->check(CLI::IsMember({"twisted", "standard"}));
  l2->add_option("--equilibrium", l2_cfg.equilibrium)
      ->check(CLI::IsMember({"product", "intrinsic"}));
  l2->add_option("--u-mode", l2_cfg.u_mode)
      ->check(CLI::IsMember({"zero", "v"}));
  l2->add_option("--sq", l2_cfg.sq);
  l2->add_option("--sxy", l2_cfg.sxy);
  l2->add_option("--lambda", l2_cfg.lambda);
  l2->add_option("--v-min", l2_cfg.v_min);
  l2->add_option("--v-max", l2_cfg.v_max);
  l2->add_option("--v-step", l2_cfg.v_step);
  l2->add_option("--out-csv", l2_cfg.out_csv);

  EqeqConfig eqeq_cfg;
  auto* eqeq = app.add_subcommand("eqeq", "equivalent-equation coefficients");
  eqeq->add_option("--variant", eqeq_cfg.variant)
      ->check(CLI::IsMember({"twisted", "standard"}));
  eqeq->add_option("--equilibrium", eqeq_cfg.equilibrium)
      ->check(CLI::IsMember({"product", "intrinsic"}));
  eqeq->add_option("--u-mode", eqeq_cfg.u_mode)
      ->check(CLI::IsMember({"zero", "v"}));
  eqeq->add_option("--sigma-q", eqeq_cfg.sigma_q);
  eqeq->add_option("--sigma-xy", eqeq_cfg.sigma_xy);
  eqeq->add_option("--lambda", eqeq_cfg.lambda);
  eqeq->add_option("--v-min", eqeq_cfg.v_min);
  eqeq->add_option("--v-max", eqeq_cfg.v_max);
  eqeq->add_option("--v-step", eqeq_cfg.v_step);
  eqeq->add_option("--out-csv", eqeq_cfg.out_csv);

  auto* validate =
      app.add_subcommand("validate", "cross-module property suites");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (spot->parsed()) return cmd_spot(spot_cfg);
    if (vn->parsed()) return cmd_vn(vn_cfg);
    if (linf->parsed()) return cmd_linf(linf_cfg, seed);
    if (l2->parsed()) return cmd_l2(l2_cfg);
    if (eqeq->parsed()) return cmd_eqeq(eqeq_cfg);
    if (validate->parsed()) return cmd_validate(seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
