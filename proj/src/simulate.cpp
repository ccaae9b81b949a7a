#include "rvlb/simulate.hpp"

#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rvlb {

namespace {

struct RowStats {
  double mass = 0.0;
  double abs_sum = 0.0;  // Σ|f_j|; cannot cancel, so it catches every Inf/NaN
  double min_rho = std::numeric_limits<double>::infinity();
  double max_rho = -std::numeric_limits<double>::infinity();
};

// out_j(x) = Σ_m C(j,m) f_m(x − shift_j): every input plane is read at the
// same source cell, the one the post-collision population streams from.
void mac_row(double* o, const double* p0, const double* p1, const double* p2,
             const double* p3, double c0, double c1, double c2, double c3,
             int sx, int n) {
  if (sx == 0) {
    for (int x = 0; x < n; ++x)
      o[x] = c0 * p0[x] + c1 * p1[x] + c2 * p2[x] + c3 * p3[x];
  } else if (sx == 1) {
    o[0] = c0 * p0[n - 1] + c1 * p1[n - 1] + c2 * p2[n - 1] + c3 * p3[n - 1];
    for (int x = 1; x < n; ++x)
      o[x] = c0 * p0[x - 1] + c1 * p1[x - 1] + c2 * p2[x - 1] + c3 * p3[x - 1];
  } else {
    for (int x = 0; x < n - 1; ++x)
      o[x] = c0 * p0[x + 1] + c1 * p1[x + 1] + c2 * p2[x + 1] + c3 * p3[x + 1];
    o[n - 1] = c0 * p0[0] + c1 * p1[0] + c2 * p2[0] + c3 * p3[0];
  }
}

StepStats fused_step(FieldState& st, const Mat4& c,
                     const Eigen::Matrix<int, 2, 4>& sh) {
  const int n = st.n;
  std::vector<RowStats> rows(n);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int y = 0; y < n; ++y) {
    double* out[4];
    for (int j = 0; j < 4; ++j) out[j] = st.scratch[j].data() + size_t(y) * n;
    for (int j = 0; j < 4; ++j) {
      const int sy = (y - sh(1, j) + n) % n;
      const double* base[4];
      for (int m = 0; m < 4; ++m) base[m] = st.f[m].data() + size_t(sy) * n;
      mac_row(out[j], base[0], base[1], base[2], base[3], c(j, 0), c(j, 1),
              c(j, 2), c(j, 3), sh(0, j), n);
    }
    RowStats rs;
    for (int x = 0; x < n; ++x) {
      double f0 = out[0][x], f1 = out[1][x], f2 = out[2][x], f3 = out[3][x];
      double rho = f0 + f1 + f2 + f3;
      rs.mass += rho;
      rs.abs_sum += std::fabs(f0) + std::fabs(f1) + std::fabs(f2) +
                    std::fabs(f3);
      rs.min_rho = std::min(rs.min_rho, rho);
      rs.max_rho = std::max(rs.max_rho, rho);
    }
    rows[y] = rs;
  }

  for (int j = 0; j < 4; ++j) st.f[j].swap(st.scratch[j]);

  StepStats s;
  s.min_rho = std::numeric_limits<double>::infinity();
  s.max_rho = -std::numeric_limits<double>::infinity();
  double abs_sum = 0.0;
  for (int y = 0; y < n; ++y) {  // fixed-order combine keeps it deterministic
    s.mass += rows[y].mass;
    abs_sum += rows[y].abs_sum;
    s.min_rho = std::min(s.min_rho, rows[y].min_rho);
    s.max_rho = std::max(s.max_rho, rows[y].max_rho);
  }
  s.max_abs_rho = std::max(std::fabs(s.min_rho), std::fabs(s.max_rho));
  s.finite = std::isfinite(abs_sum) && std::isfinite(s.mass);
  return s;
}

Eigen::Matrix<int, 2, 4> streaming_shifts(const SchemeSpec& spec) {
  Mat24 v = velocities(spec.variant, spec.lambda);
  Eigen::Matrix<int, 2, 4> s;
  for (int j = 0; j < 4; ++j) {
    s(0, j) = int(std::lround(v(0, j) / spec.lambda));
    s(1, j) = int(std::lround(v(1, j) / spec.lambda));
  }
  return s;
}

}  // namespace

FieldState init_spot(const SchemeSpec& spec, int n) {
  FieldState st;
  st.n = n;
  for (int j = 0; j < 4; ++j) {
    st.f[j].assign(size_t(n) * n, 0.0);
    st.scratch[j].assign(size_t(n) * n, 0.0);
  }
  const Vec4 feq1 = equilibrium_distributions(spec, 1.0);
  const double r2 = 0.1 * 0.1;
  for (int y = 0; y < n; ++y) {
    double cy = (y + 0.5) / n - 0.5;
    for (int x = 0; x < n; ++x) {
      double cx = (x + 0.5) / n - 0.5;
      double rho = (cx * cx + cy * cy <= r2) ? 2.0 : 1.0;
      for (int j = 0; j < 4; ++j) st.f[j][size_t(y) * n + x] = rho * feq1(j);
    }
  }
  return st;
}

StepStats field_stats(const FieldState& state) {
  StepStats s;
  s.min_rho = std::numeric_limits<double>::infinity();
  s.max_rho = -std::numeric_limits<double>::infinity();
  double abs_sum = 0.0;
  const int n = state.n;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      size_t i = size_t(y) * n + x;
      double rho = state.f[0][i] + state.f[1][i] + state.f[2][i] +
                   state.f[3][i];
      s.mass += rho;
      abs_sum += std::fabs(state.f[0][i]) + std::fabs(state.f[1][i]) +
                 std::fabs(state.f[2][i]) + std::fabs(state.f[3][i]);
      s.min_rho = std::min(s.min_rho, rho);
      s.max_rho = std::max(s.max_rho, rho);
    }
  }
  s.max_abs_rho = std::max(std::fabs(s.min_rho), std::fabs(s.max_rho));
  s.finite = std::isfinite(abs_sum) && std::isfinite(s.mass);
  return s;
}

StepStats step(const SchemeSpec& spec, FieldState& state) {
  return fused_step(state, collision_matrix(spec), streaming_shifts(spec));
}

ExperimentReport run_spot_experiment(const SchemeSpec& spec, int n,
                                     int n_steps) {
  FieldState st = init_spot(spec, n);
  const Mat4 c = collision_matrix(spec);
  const auto sh = streaming_shifts(spec);
  const StepStats init = field_stats(st);
  // Blow-up cap. Near the spectral stability boundary the growth rate is
  // ~1e-3 per step, so 2000 steps amplify the spot's high-frequency content
  // (seed amplitude ~1e-3) by a factor of 20..300 only; a detection factor
  // in the hundreds misses those and overstates the stable speed by
  // ~0.03 lambda. Dispersion ripples peak at 1.17x the initial max across
  // the stable side of the table cases, so 2x separates the two regimes
  // with margin on both sides.
  const double rho_cap = 2.0 * init.max_abs_rho;

  ExperimentReport rep;
  rep.final_min_rho = init.min_rho;
  rep.final_max_rho = init.max_rho;
  for (int t = 1; t <= n_steps; ++t) {
    StepStats s = fused_step(st, c, sh);
    rep.steps_completed = t;
    rep.final_min_rho = s.min_rho;
    rep.final_max_rho = s.max_rho;
    if (s.finite && init.mass != 0.0) {
      double drift = std::fabs(s.mass - init.mass) / std::fabs(init.mass);
      rep.max_mass_drift = std::max(rep.max_mass_drift, drift);
    }
    if (!s.finite || s.max_abs_rho > rho_cap) {
      rep.stable = false;
      rep.blowup_step = t;
      return rep;
    }
  }
  rep.stable = true;
  return rep;
}

double max_stable_speed(const SchemeSpec& spec_template, URelMode u_mode,
                        double theta, int n, int n_steps, double v_step,
                        double v_max) {
  const double lam = spec_template.lambda;
  const Vec2 dir(std::cos(theta), std::sin(theta));
  const int count = int(std::llround(v_max / v_step));
  double last_stable = 0.0;
  for (int i = 1; i <= count; ++i) {
    double speed = i * v_step * lam;
    SchemeSpec s = with_velocity(spec_template, speed * dir, u_mode);
    if (!run_spot_experiment(s, n, n_steps).stable) return last_stable;
    last_stable = speed;
  }
  return last_stable;
}

}  // namespace rvlb
