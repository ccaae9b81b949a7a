#include "rvlb/vonneumann.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <Eigen/Eigenvalues>

namespace rvlb {

namespace {

// Integer streaming shifts v_j Δt/Δx; every component is −1, 0 or 1.
Eigen::Matrix<int, 2, 4> streaming_shifts(Variant variant, double lambda) {
  Mat24 v = velocities(variant, lambda);
  Eigen::Matrix<int, 2, 4> s;
  for (int j = 0; j < 4; ++j) {
    s(0, j) = int(std::lround(v(0, j) / lambda));
    s(1, j) = int(std::lround(v(1, j) / lambda));
  }
  return s;
}

}  // namespace

Mat4c amplification_matrix(const SchemeSpec& spec, const Vec2& kappa) {
  Mat4 c = collision_matrix(spec);
  Eigen::Matrix<int, 2, 4> sh = streaming_shifts(spec.variant, spec.lambda);
  Mat4c l;
  for (int j = 0; j < 4; ++j) {
    double phase = kappa.x() * sh(0, j) + kappa.y() * sh(1, j);
    std::complex<double> a(std::cos(phase), std::sin(phase));
    for (int m = 0; m < 4; ++m) l(j, m) = a * c(j, m);
  }
  return l;
}

double spectral_radius(const Mat4c& l) {
  Eigen::ComplexSchur<Mat4c> schur(l, /*computeU=*/false);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("complex Schur failed to converge");
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(schur.matrixT()(i, i)));
  return r;
}

namespace {

// Shared by the single-spec entry point and the region scan: the collision
// matrix is fixed per velocity, only the diagonal phases vary with κ.
double max_radius_of_collision(const Mat4& c,
                               const Eigen::Matrix<int, 2, 4>& sh,
                               const MaxRadiusOptions& opt) {
  const int n = opt.k_grid;
  const double dk = 2.0 * std::acos(-1.0) / n;
  Mat4c l;
  Eigen::ComplexSchur<Mat4c> schur;
  double worst = 0.0;
  // κ and −κ give conjugate spectra, so a fundamental half-zone suffices:
  // rows jy ≤ n/2, and on the two self-conjugate rows only jx ≤ n/2.
  for (int jy = 0; jy <= n / 2; ++jy) {
    const bool half_row = (jy == 0) || (2 * jy == n);
    const int jx_end = half_row ? n / 2 : n - 1;
    for (int jx = 0; jx <= jx_end; ++jx) {
      const double kx = jx * dk, ky = jy * dk;
      for (int j = 0; j < 4; ++j) {
        double phase = kx * sh(0, j) + ky * sh(1, j);
        std::complex<double> a(std::cos(phase), std::sin(phase));
        for (int m = 0; m < 4; ++m) l(j, m) = a * c(j, m);
      }
      schur.compute(l, /*computeU=*/false);
      if (schur.info() != Eigen::Success)
        throw std::runtime_error("complex Schur failed to converge");
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(schur.matrixT()(i, i)));
      if (opt.bail_above >= 0.0 && worst > opt.bail_above) return worst;
    }
  }
  return worst;
}

}  // namespace

double max_spectral_radius(const SchemeSpec& spec,
                           const MaxRadiusOptions& opt) {
  return max_radius_of_collision(collision_matrix(spec),
                                 streaming_shifts(spec.variant, spec.lambda),
                                 opt);
}

SchemeSpec with_velocity(SchemeSpec spec, const Vec2& v, URelMode mode) {
  spec.V = v;
  if (mode == URelMode::EqualsV) spec.u_rel = v;
  return spec;
}

RegionGrid stability_region_scan(const SchemeSpec& spec_template,
                                 const ScanOptions& opt) {
  RegionGrid g;
  g.nx = int(std::llround((opt.v_max - opt.v_min) / opt.v_step)) + 1;
  g.ny = g.nx;
  g.v_axis_x.resize(g.nx);
  g.v_axis_y.resize(g.ny);
  for (int i = 0; i < g.nx; ++i) g.v_axis_x[i] = opt.v_min + i * opt.v_step;
  for (int i = 0; i < g.ny; ++i) g.v_axis_y[i] = opt.v_min + i * opt.v_step;
  g.max_r.assign(size_t(g.nx) * g.ny, 0.0);
  g.verdict.assign(size_t(g.nx) * g.ny, 0);

  const Eigen::Matrix<int, 2, 4> sh =
      streaming_shifts(spec_template.variant, spec_template.lambda);
  const double lam = spec_template.lambda;

  auto cell_radius = [&](int ix, int iy, int k_grid) {
    Vec2 v(g.v_axis_x[ix] * lam, g.v_axis_y[iy] * lam);
    SchemeSpec s = with_velocity(spec_template, v, opt.u_mode);
    MaxRadiusOptions mo;
    mo.k_grid = k_grid;
    mo.bail_above = opt.bail_above;
    return max_radius_of_collision(collision_matrix(s), sh, mo);
  };

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      double r = cell_radius(ix, iy, opt.k_grid);
      g.max_r[size_t(iy) * g.nx + ix] = r;
      g.verdict[size_t(iy) * g.nx + ix] = (r <= 1.0 + kVnVerdictTol) ? 1 : 0;
    }
  }

  // Refine next to verdict flips; the coarse κ-grid can miss a thin unstable
  // band exactly where the region boundary sits.
  std::vector<std::pair<int, int>> border;
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      bool v0 = g.stable_at(ix, iy);
      bool flip = (ix > 0 && g.stable_at(ix - 1, iy) != v0) ||
                  (ix + 1 < g.nx && g.stable_at(ix + 1, iy) != v0) ||
                  (iy > 0 && g.stable_at(ix, iy - 1) != v0) ||
                  (iy + 1 < g.ny && g.stable_at(ix, iy + 1) != v0);
      if (flip) border.emplace_back(ix, iy);
    }
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (size_t b = 0; b < border.size(); ++b) {
    auto [ix, iy] = border[b];
    double r = cell_radius(ix, iy, opt.k_grid_refine);
    g.max_r[size_t(iy) * g.nx + ix] = r;
    g.verdict[size_t(iy) * g.nx + ix] = (r <= 1.0 + kVnVerdictTol) ? 1 : 0;
  }
  return g;
}

}  // namespace rvlb
