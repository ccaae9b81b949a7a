// Certifies the closed-form diffusion and dispersion tensors against the
// numeric branch fit on a dense parameter grid. The cross term of the
// intrinsic dispersion tensor has an easy-to-misgroup bracket structure;
// this scan is the authority that pinned its implemented form. Exit code 0
// means every sampled combination met the thresholds.

#include <cmath>
#include <cstdio>
#include <string>

#include "rvlb/eqeq.hpp"

using namespace rvlb;

int main() {
  const double sig_qs[] = {0.03, 0.05, 1.0 / std::sqrt(12.0), 0.2, 0.4, 0.6};
  const double sig_xys[] = {0.05, 0.1, 1.0 / std::sqrt(12.0), 0.3, 0.5};
  const Vec2 dirs[] = {Vec2(1, 0), Vec2(0, 1), Vec2(1, 1), Vec2(1, -1)};
  const double c1_tol = 1e-6;
  const double rel_tol = 1e-4;
  const double c2_floor = 5e-7, c3_floor = 1e-6;

  int bad = 0;
  long total = 0;
  for (Variant var : {Variant::TwistedD2Q4, Variant::StandardD2Q4}) {
    for (Equilibrium eq :
         {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
      for (bool track : {false, true}) {
        double w1 = 0, w2 = 0, w3 = 0;  // block-worst absolute errors
        double r2 = 0, r3 = 0;          // block-worst relative errors
        for (double sq : sig_qs) {
          for (double sxy : sig_xys) {
            for (double vx = -0.8; vx <= 0.81; vx += 0.4) {
              for (double vy = -0.8; vy <= 0.81; vy += 0.4) {
                SchemeSpec s;
                s.variant = var;
                s.equilibrium = eq;
                s.s_q = rate_from_sigma(sq);
                s.s_xy = rate_from_sigma(sxy);
                s.V = Vec2(vx, vy);
                s.u_rel = track ? s.V : Vec2(0, 0);
                for (const Vec2& n : dirs) {
                  DispersionFit f = numeric_dispersion_fit(s, n);
                  ++total;
                  double e1 = std::fabs(f.c1 - f.c1_closed);
                  double e2 = std::fabs(f.c2 - f.c2_closed);
                  double e3 = std::fabs(f.c3 - f.c3_closed);
                  w1 = std::max(w1, e1);
                  w2 = std::max(w2, e2);
                  w3 = std::max(w3, e3);
                  if (std::fabs(f.c2_closed) > c2_floor)
                    r2 = std::max(r2, e2 / std::fabs(f.c2_closed));
                  if (std::fabs(f.c3_closed) > c3_floor)
                    r3 = std::max(r3, e3 / std::fabs(f.c3_closed));
                  bool ok =
                      e1 < c1_tol &&
                      e2 < std::max(rel_tol * std::fabs(f.c2_closed),
                                    c2_floor) &&
                      e3 < std::max(rel_tol * std::fabs(f.c3_closed),
                                    c3_floor);
                  if (!ok) {
                    ++bad;
                    std::printf(
                        "MISS %s %s u%s sigq=%.4f sigxy=%.4f V=(%.1f,%.1f) "
                        "n=(%g,%g) c3 closed=%.3e fit=%.3e\n",
                        var == Variant::TwistedD2Q4 ? "twisted" : "standard",
                        eq == Equilibrium::NonIntrinsic ? "product"
                                                        : "intrinsic",
                        track ? "=V" : "=0", sq, sxy, vx, vy, n.x(), n.y(),
                        f.c3_closed, f.c3);
                  }
                }
              }
            }
          }
        }
        std::printf(
            "%-8s %-9s u%-2s  worst abs: c1 %.2e c2 %.2e c3 %.2e   worst "
            "rel: c2 %.2e c3 %.2e\n",
            var == Variant::TwistedD2Q4 ? "twisted" : "standard",
            eq == Equilibrium::NonIntrinsic ? "product" : "intrinsic",
            track ? "=V" : "=0", w1, w2, w3, r2, r3);
      }
    }
  }
  std::printf("%ld fits, %d misses: %s\n", total, bad,
              bad == 0 ? "CERTIFIED" : "NOT certified");
  return bad == 0 ? 0 : 1;
}
