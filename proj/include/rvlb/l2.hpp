#pragma once

#include <optional>

#include "rvlb/core.hpp"
#include "rvlb/simulate.hpp"

// Weighted-L² stability of the collision generator J = C − I. A diagonal
// positive Λ with JΛ = ΛᵗJ makes S = Λ^(−1/2) J Λ^(1/2) symmetric; with
// S = Q D ᵗQ the weight P = ᵗQ Λ^(−1/2) diagonalizes the collision and
// ᵗPP = Λ⁻¹ keeps the transport step an isometry of the induced lattice
// norm. Existence of such a Λ is what this module decides; when all
// relaxation rates also lie in [0,2] the collision is a contraction and the
// whole scheme is stable in that norm.

namespace rvlb {

enum class StructureVerdict { None, Prestructure, Structure };

struct StabilityStructure {
  Vec4 lambda_diag = Vec4::Ones();  // Λ, scaled so the largest entry is 1
  Mat4 p = Mat4::Identity();        // P = ᵗQ Λ^(−1/2), so ᵗPP = Λ⁻¹
  Vec4 eigs = Vec4::Zero();         // eigenvalues of J, ascending (−s values)
  bool is_structure = false;        // all eigenvalues within [−2, 0]
};

// Solves JΛ = ΛᵗJ over diagonal Λ (six antisymmetric equations in four
// unknowns, nullspace by SVD with rank tolerance 1e-10·σ_max) and looks for
// a strictly positive solution. One-dimensional nullspaces are accepted when
// the normalized vector is entrywise > 1e-9; larger nullspaces fall back to
// a small exact LP (vertex enumeration) maximizing the worst entry over the
// coefficient box. Returns absent when no positive solution exists.
std::optional<StabilityStructure> find_prestructure(const Mat4& j);

// Builds J from the scheme parameters and classifies it.
StructureVerdict check_structure(const SchemeSpec& spec);

// Spectral norm of P·R·P⁻¹. For a weight P coming from a pre-structure of R−I
// this equals max_k |1 − s_k| (the conserved mode contributes 1).
double weighted_norm_of_collision(const Mat4& r, const Mat4& p);

// Σ_x ‖P f(x)‖² = Σ_j Λ_j⁻¹ Σ_x f_j(x)², the lattice norm the structure
// certifies monotone under one scheme step.
double weighted_lattice_norm_sq(const FieldState& state,
                                const Vec4& lambda_diag);

}  // namespace rvlb
