#pragma once

#include "rvlb/core.hpp"

// Third-order equivalent equation of the scheme,
//   ∂tρ + V·∇ρ − Δt D⁽²⁾:∇²ρ + Δt² D⁽³⁾:∇³ρ = O(Δt³),
// with the derivative layouts ∇² = [[∂xx,∂xy],[∂xy,∂yy]] and
// ∇³ = [[∂xxx,∂xyy],[∂xxy,∂yyy]], ":" the entrywise contraction. The
// closed-form tensors below are validated against a numeric fit of the
// amplification spectrum near k = 0.

namespace rvlb {

using Mat2 = Eigen::Matrix2d;

// D⁽²⁾. Requires both rates in (0,2) (positive Hénon parameters); depends on
// V but never on ũ. Product-form equilibrium: σ_q·diag(λ²−Vx², λ²−Vy²).
// Intrinsic: σ_q(λ²I − VVᵀ), so D⁽²⁾:∇² = σ_q(λ²Δ − (V·∇)²) in any frame.
// Standard-lattice forms are the exact images of these under the frame map.
Mat2 diffusion_matrix(const SchemeSpec& spec);

// D⁽³⁾, same layout. Depends on ũ. With the product-form equilibrium and
// ũ=V the off-diagonal entries vanish for every (V,s), and σ_q = 1/√12
// clears the tensor entirely. The intrinsic cross term φ₂ is certified
// against the numeric fit (see tools/certify_dispersion).
Mat2 dispersion_matrix(const SchemeSpec& spec);

// Positive definiteness of D⁽²⁾/σ_q: product form ‖V‖∞ < λ (diamond
// ‖V‖₁ < λ on the standard lattice), intrinsic ‖V‖₂ < λ (resp. λ/√2).
bool wellposed(const SchemeSpec& spec);

struct DispersionFit {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;  // fitted coefficients
  double c1_closed = 0.0;               // V·n
  double c2_closed = 0.0;               // Δt · nᵀ D⁽²⁾ n
  double c3_closed = 0.0;               // −Δt² · D⁽³⁾ ⋮ n⊗n⊗n
};

// Tracks the consistent eigenvalue branch μ(k·n) of the amplification
// matrix from μ(0)=1 over small |k| (lattice units Δx=1, Δt=1/λ) and fits
//   log μ / (−Δt) = i c₁ k + c₂ k² + i c₃ k³ + O(k⁴)
// by weighted least squares on the real and imaginary parts separately.
// `direction` need not be normalized. Throws std::runtime_error if the
// branch cannot be told apart from a relaxed one along the path.
DispersionFit numeric_dispersion_fit(const SchemeSpec& spec,
                                     const Vec2& direction,
                                     int k_samples = 12);

}  // namespace rvlb
