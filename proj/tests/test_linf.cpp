#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rvlb/linf.hpp"

using namespace rvlb;

namespace {

LinfCase make_case(Variant var, Equilibrium eq, bool track, double sq,
                   double sxy, double lambda = 1.0) {
  LinfCase c;
  c.variant = var;
  c.equilibrium = eq;
  c.u_tracks_v = track;
  c.lambda = lambda;
  c.s_q = sq;
  c.s_xy = sxy;
  return c;
}

}  // namespace

TEST_CASE("zone classification of the rate plane") {
  auto tw = Variant::TwistedD2Q4;
  auto ni = Equilibrium::NonIntrinsic;
  auto is = Equilibrium::Intrinsic;

  CHECK(linf_param_domain(make_case(tw, ni, false, 1.5, 0.3)).zone == "BCD");
  CHECK(linf_param_domain(make_case(tw, ni, false, 0.8, 1.2)).zone == "ABC");
  CHECK(linf_param_domain(make_case(tw, ni, false, 1.4, 1.1)).zone == "ACD");
  CHECK(linf_param_domain(make_case(tw, ni, false, 2.1, 0.5)).region_is_empty);
  CHECK(linf_param_domain(make_case(tw, ni, false, 1.0, 0.0)).zone ==
        "ray-BD");
  CHECK(linf_param_domain(make_case(tw, ni, false, 0.0, 0.0)).region_is_all);

  CHECK(linf_param_domain(make_case(tw, ni, true, 0.8, 1.0)).zone == "ABC");
  CHECK(linf_param_domain(make_case(tw, ni, true, 1.0, 1.3)).zone == "BCED");
  CHECK(linf_param_domain(make_case(tw, ni, true, 1.5, 0.5)).zone == "ACF");
  CHECK(linf_param_domain(make_case(tw, ni, true, 1.4, 1.0)).zone == "CEF");
  CHECK(linf_param_domain(make_case(tw, ni, true, 0.5, 1.0)).zone == "ray-AD");
  CHECK(linf_param_domain(make_case(tw, ni, true, 1.95, 0.4)).region_is_empty);

  CHECK(linf_param_domain(make_case(tw, is, false, 1.2, 0.6)).zone == "BCD");
  CHECK(linf_param_domain(make_case(tw, is, false, 0.7, 1.1)).zone == "ABC");
  CHECK(linf_param_domain(make_case(tw, is, false, 1.5, 0.9)).zone == "ACD");
  CHECK(
      linf_param_domain(make_case(tw, is, false, 1.8, 1.5)).region_is_empty);

  CHECK(linf_param_domain(make_case(tw, is, true, 0.8, 1.2)).zone == "ACD");
  CHECK(linf_param_domain(make_case(tw, is, true, 1.0, 0.5)).zone == "ABD");
  CHECK(linf_param_domain(make_case(tw, is, true, 0.8, 0.8)).zone ==
        "segment-AD bgk-plateau");
  CHECK(linf_param_domain(make_case(tw, is, true, 1.7, 1.9)).region_is_empty);

  CHECK(linf_param_domain(make_case(tw, ni, false, 1.0, 1.0)).zone ==
        "bgk-plateau");
  CHECK(linf_param_domain(make_case(tw, ni, false, 1.25, 1.25)).zone ==
        "bgk-shrinking");
  CHECK(
      linf_param_domain(make_case(tw, ni, false, 1.4, 1.4)).region_is_empty);
  CHECK(
      linf_param_domain(make_case(tw, ni, false, -0.5, -0.5)).region_is_empty);
}

TEST_CASE("single-rate predicates match the collision entry signs") {
  // At s = 1 the collision matrix equals the rank-one equilibrium projector,
  // whose entries factor by hand: (1±Vx)(1±Vy)/4 for the product-form
  // equilibrium and (1±Vx±Vy)/4 for the intrinsic one.
  auto tw = Variant::TwistedD2Q4;
  LinfCase ni = make_case(tw, Equilibrium::NonIntrinsic, false, 1.0, 1.0);
  CHECK(linf_region_predicate(ni, Vec2(0.95, 0.3)).stable);
  CHECK(!linf_region_predicate(ni, Vec2(1.05, 0.0)).stable);
  CHECK(linf_region_predicate(ni, Vec2(1.0, 1.0)).stable);  // closed boundary
  CHECK(linf_oracle(ni, Vec2(0.95, 0.3)));
  CHECK(!linf_oracle(ni, Vec2(1.05, 0.0)));

  LinfCase is = make_case(tw, Equilibrium::Intrinsic, false, 1.0, 1.0);
  CHECK(linf_region_predicate(is, Vec2(0.6, 0.35)).stable);
  CHECK(!linf_region_predicate(is, Vec2(0.6, 0.45)).stable);
  CHECK(linf_oracle(is, Vec2(0.6, 0.35)));
  CHECK(!linf_oracle(is, Vec2(0.6, 0.45)));

  // over-relaxed single rate: region shrinks, dies past 4/3
  LinfCase ni_over = make_case(tw, Equilibrium::NonIntrinsic, false, 1.25,
                               1.25);
  CHECK(linf_region_predicate(ni_over, Vec2(0.15, 0.0)).stable);
  CHECK(!linf_region_predicate(ni_over, Vec2(0.3, 0.0)).stable);
  LinfCase is_over = make_case(tw, Equilibrium::Intrinsic, true, 1.25, 1.25);
  CHECK(linf_region_predicate(is_over, Vec2(0.1, 0.05)).stable);
  CHECK(!linf_region_predicate(is_over, Vec2(0.3, 0.0)).stable);
}

TEST_CASE("moving-frame product equilibrium keeps the full advection square") {
  LinfCase c = make_case(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic,
                         true, 1.5, 0.8);
  CHECK(linf_param_domain(c).zone == "CEF");
  // inside zone ABC the square is the whole region
  LinfCase abc = make_case(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic,
                           true, 0.9, 1.0);
  CHECK(linf_param_domain(abc).zone == "ABC");
  CHECK(linf_region_predicate(abc, Vec2(0.99, -0.99)).stable);
  CHECK(!linf_region_predicate(abc, Vec2(1.01, 0.0)).stable);
  CHECK(linf_oracle(abc, Vec2(0.99, -0.99)));
  CHECK(!linf_oracle(abc, Vec2(1.01, 0.0)));
}

TEST_CASE("oracle margin is affine in the relaxation rates") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> uv(-1.4, 1.4);
  std::uniform_real_distribution<double> us(-0.4, 2.4);
  for (int t = 0; t < 40; ++t) {
    Variant var = (t % 2) ? Variant::TwistedD2Q4 : Variant::StandardD2Q4;
    Equilibrium eq =
        (t % 3) ? Equilibrium::NonIntrinsic : Equilibrium::Intrinsic;
    bool track = (t % 4) < 2;
    Vec2 v(uv(rng), uv(rng));
    double sq = us(rng), sxy = us(rng);
    OracleAffine a = oracle_affine(var, eq, track, 1.0, v);
    LinfCase c = make_case(var, eq, track, sq, sxy);
    CHECK(oracle_margin(a, sq, sxy) ==
          doctest::Approx(linf_oracle_margin(c, v)).epsilon(1e-12));
  }
}

TEST_CASE("collision entries agree with the published inequality system") {
  // Moving-frame intrinsic twisted case: 4λ² times the sixteen matrix
  // entries must coincide, as a multiset, with the sixteen affine-quadratic
  // expressions whose nonnegativity defines L∞ stability.
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> uv(-1.3, 1.3);
  std::uniform_real_distribution<double> us(-0.5, 2.5);
  for (int t = 0; t < 30; ++t) {
    double lam = (t % 2) ? 1.0 : 2.0;
    double sq = us(rng), sxy = us(rng);
    double vx = uv(rng) * lam, vy = uv(rng) * lam;
    LinfCase c = make_case(Variant::TwistedD2Q4, Equilibrium::Intrinsic, true,
                           sq, sxy, lam);
    Mat4 coll = collision_matrix(to_scheme_spec(c, Vec2(vx, vy)));

    std::vector<double> entries, exprs;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        entries.push_back(4.0 * lam * lam * coll(i, j));
    for (int i = 0; i < 2; ++i) {
      double sg = (i == 0) ? 1.0 : -1.0;  // (-1)^i
      for (double pm : {1.0, -1.0}) {
        exprs.push_back(lam * (2.0 * sq - sxy) * (lam + pm * (vx + sg * vy)) +
                        2.0 * sg * (sq - sxy) * vx * vy);
        exprs.push_back(lam * lam * sxy +
                        pm * lam * (sxy * vx + sg * (2.0 * sq - sxy) * vy) +
                        2.0 * sg * (sq - sxy) * vx * vy);
        exprs.push_back(lam * lam * sxy +
                        pm * lam * (sxy * vy + sg * (2.0 * sq - sxy) * vx) +
                        2.0 * sg * (sq - sxy) * vx * vy);
        exprs.push_back(4.0 * lam * lam -
                        ((2.0 * sq + sxy) * lam * lam +
                         pm * sxy * lam * (vx + sg * vy) -
                         2.0 * sg * (sq - sxy) * vx * vy));
      }
    }
    std::sort(entries.begin(), entries.end());
    std::sort(exprs.begin(), exprs.end());
    for (int k = 0; k < 16; ++k)
      CHECK(entries[k] == doctest::Approx(exprs[k]).epsilon(1e-10));
  }
}

TEST_CASE("predicates and oracle agree across a broad rate and velocity sweep") {
  const double collar = kLinfSweepCollar;
  const double s_values[] = {-0.3, 0.0,  0.15, 0.5, 0.85, 1.0,
                             1.15, 1.35, 1.6,  2.0, 2.3};
  int checked = 0, skipped = 0;
  for (Variant var : {Variant::TwistedD2Q4, Variant::StandardD2Q4}) {
    for (Equilibrium eq :
         {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
      for (bool track : {false, true}) {
        for (double vx = -1.45; vx <= 1.46; vx += 0.145) {
          for (double vy = -1.45; vy <= 1.46; vy += 0.145) {
            Vec2 v(vx, vy);
            OracleAffine aff = oracle_affine(var, eq, track, 1.0, v);
            for (double sq : s_values) {
              for (double sxy : s_values) {
                LinfCase c = make_case(var, eq, track, sq, sxy);
                double margin = oracle_margin(aff, sq, sxy);
                LinfPredicate p = linf_region_predicate(c, v);
                if (std::fabs(margin) < collar || std::fabs(p.slack) < collar) {
                  ++skipped;
                  continue;
                }
                ++checked;
                bool oracle_ok = margin >= -kLinfOracleTol;
                if (oracle_ok != p.stable) {
                  CAPTURE(int(var));
                  CAPTURE(int(eq));
                  CAPTURE(track);
                  CAPTURE(sq);
                  CAPTURE(sxy);
                  CAPTURE(vx);
                  CAPTURE(vy);
                  CAPTURE(margin);
                  CAPTURE(p.slack);
                  REQUIRE(oracle_ok == p.stable);
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(checked > 300000);
  CHECK(skipped < checked / 10);
}

TEST_CASE("standard regions are the twisted regions seen through the frame map") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uv(-1.5, 1.5);
  std::uniform_real_distribution<double> us(-0.3, 2.3);
  for (int t = 0; t < 4000; ++t) {
    Vec2 v(uv(rng), uv(rng));
    double sq = us(rng), sxy = us(rng);
    for (Equilibrium eq :
         {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
      for (bool track : {false, true}) {
        LinfCase std_c = make_case(Variant::StandardD2Q4, eq, track, sq, sxy);
        LinfCase tw_c = make_case(Variant::TwistedD2Q4, eq, track, sq, sxy);
        bool a = linf_region_predicate(std_c, v).stable;
        bool b = linf_region_predicate(tw_c, twist_map(v)).stable;
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("rate-plane scaling does not depend on lambda") {
  // Regions scale linearly with λ: V stable at λ=1 iff 2V stable at λ=2.
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uv(-1.5, 1.5);
  std::uniform_real_distribution<double> us(-0.2, 2.2);
  for (int t = 0; t < 500; ++t) {
    Vec2 v(uv(rng), uv(rng));
    double sq = us(rng), sxy = us(rng);
    LinfCase c1 = make_case(Variant::TwistedD2Q4, Equilibrium::Intrinsic,
                            true, sq, sxy, 1.0);
    LinfCase c2 = make_case(Variant::TwistedD2Q4, Equilibrium::Intrinsic,
                            true, sq, sxy, 2.0);
    CHECK(linf_region_predicate(c1, v).stable ==
          linf_region_predicate(c2, 2.0 * v).stable);
  }
}
