#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rvlb/core.hpp"

// Fourier-space stability analysis. One time step acts on a plane wave as the
// amplification matrix L(κ) = A(κ)·C, where κ is the per-cell phase (the wave
// number times Δx) and A is diagonal with entries exp(i κ·shift_j),
// shift_j = v_j Δt/Δx ∈ {−1,0,1}² under acoustic scaling Δt = Δx/λ. The
// scheme is von Neumann stable at V when max over one Brillouin zone
// κ ∈ [0,2π)² of the spectral radius of L stays ≤ 1 (+ tolerance for the
// conserved mode, which always sits exactly on the unit circle at κ=0).

namespace rvlb {

using Mat4c = Eigen::Matrix4cd;

Mat4c amplification_matrix(const SchemeSpec& spec, const Vec2& kappa);

// Largest eigenvalue modulus, complex Schur based.
double spectral_radius(const Mat4c& l);

inline constexpr double kVnVerdictTol = 1e-10;

struct MaxRadiusOptions {
  int k_grid = 64;           // samples per axis over [0,2π)
  double bail_above = -1.0;  // return early once the radius exceeds this
};

// Max spectral radius over the κ-grid. Uses the conjugation symmetry
// L(−κ) = conj(L(κ)) to scan only half the zone. With bail_above ≥ 0 the
// scan stops at the first radius above the threshold (the returned value is
// then only a witness, not the true max); iteration orderable is fixed, so
// results are deterministic either way.
double max_spectral_radius(const SchemeSpec& spec,
                           const MaxRadiusOptions& opt = {});

enum class URelMode { Fixed, EqualsV };

// Applies a scan velocity to a template spec; EqualsV keeps ũ glued to V.
SchemeSpec with_velocity(SchemeSpec spec, const Vec2& v, URelMode mode);

struct RegionGrid {
  int nx = 0, ny = 0;
  std::vector<double> v_axis_x, v_axis_y;  // velocity samples in λ units
  std::vector<double> max_r;               // row-major, index iy*nx+ix
  std::vector<std::uint8_t> verdict;       // max_r ≤ 1 + kVnVerdictTol

  double r_at(int ix, int iy) const { return max_r[size_t(iy) * nx + ix]; }
  bool stable_at(int ix, int iy) const {
    return verdict[size_t(iy) * nx + ix] != 0;
  }
};

struct ScanOptions {
  double v_min = -1.5, v_max = 1.5;  // in λ units
  double v_step = 0.02;              // in λ units
  int k_grid = 64;
  int k_grid_refine = 128;  // rerun cells adjacent to a verdict change
  URelMode u_mode = URelMode::Fixed;
  double bail_above = 1.0 + kVnVerdictTol;
};

// Verdict map over the velocity plane: for each grid V the max spectral
// radius over κ. Cells next to a verdict flip are recomputed on the finer
// κ-grid. Parallel over rows, result independent of the thread count.
RegionGrid stability_region_scan(const SchemeSpec& spec_template,
                                 const ScanOptions& opt = {});

}  // namespace rvlb
