#pragma once

#include <Eigen/Dense>

// Relative-velocity lattice Boltzmann building blocks for the two four-velocity
// 2-D variants used throughout this project:
//   TwistedD2Q4 : velocities (±λ,±λ), moment polynomials 1, X, Y, XY
//   StandardD2Q4: velocities (±λ,0),(0,±λ), moment polynomials 1, X, Y, X²−Y²
// The moment matrix M(ũ) evaluates the polynomials at v_j − ũ, where ũ is a
// constant relative-velocity parameter. ũ=0 gives the classical MRT scheme,
// ũ=V (the advection velocity) the cascaded-like scheme.

namespace rvlb {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat24 = Eigen::Matrix<double, 2, 4>;

enum class Variant { TwistedD2Q4, StandardD2Q4 };

// Two choices of the second-order equilibrium moment. NonIntrinsic yields a
// diagonal (axis-tied) diffusion tensor, Intrinsic a frame-independent one.
enum class Equilibrium { NonIntrinsic, Intrinsic };

struct SchemeSpec {
  Variant variant = Variant::TwistedD2Q4;
  Equilibrium equilibrium = Equilibrium::NonIntrinsic;
  double lambda = 1.0;  // velocity scale, λ = Δx/Δt > 0
  double s_q = 1.0;     // relaxation rate of both first-order moments
  double s_xy = 1.0;    // relaxation rate of the second-order moment
  Vec2 V = Vec2::Zero();      // advection velocity
  Vec2 u_rel = Vec2::Zero();  // relative velocity ũ (constant field)
};

// Hénon parameter σ = 1/s − 1/2 and its inverse s = 2/(2σ+1). Requires s≠0
// (resp. σ≠−1/2).
double henon_sigma(double s);
double rate_from_sigma(double sigma);

// Velocity set as columns v_0..v_3.
Mat24 velocities(Variant variant, double lambda);

struct MomentMatrix {
  Mat4 m;      // M(ũ), rows = moment polynomials evaluated at v_j − ũ
  Mat4 m_inv;  // verified inverse, ‖M·M⁻¹ − I‖∞ < 1e-12
};

MomentMatrix moment_matrix(Variant variant, double lambda, const Vec2& u_rel);

// Equilibrium moments m_eq = (ρ, (Vx−ũx)ρ, (Vy−ũy)ρ, m3). The fourth entry
// depends on variant and flavor; all four choices make the equilibrium
// distributions f_eq = M(ũ)⁻¹ m_eq independent of ũ.
Vec4 equilibrium_moments(const SchemeSpec& spec, double rho);
Vec4 equilibrium_distributions(const SchemeSpec& spec, double rho);

// One collision: f* = C f with C = I + M(ũ)⁻¹ D M(ũ) (E − I), where
// D = diag(0, s_q, s_q, s_xy) and E = f_eq(ρ=1)·1ᵀ is the rank-one linear
// equilibrium map. C preserves mass: 1ᵀC = 1ᵀ. Its spectrum is
// {1, 1−s_q, 1−s_q, 1−s_xy}.
Mat4 collision_matrix(const SchemeSpec& spec);

// Relaxation generator J = C − I, spectrum {0, −s_q, −s_q, −s_xy}.
Mat4 collision_generator(const SchemeSpec& spec);

// Linear map R = [[1,−1],[1,1]] sending the standard velocity set onto the
// twisted one (rotation by π/4 composed with scaling by √2). The two variants
// are conjugate: C_std(V, ũ, s) = C_tw(RV, Rũ, s) entrywise.
Vec2 twist_map(const Vec2& v);

// Inverse of a 4×4 matrix by Gauss-Jordan elimination with partial pivoting.
// Throws std::runtime_error on a (numerically) singular input.
Mat4 gauss_jordan_inverse(const Mat4& a);

}  // namespace rvlb
