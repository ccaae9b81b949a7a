#pragma once

#include <string>

#include "rvlb/core.hpp"

// Closed-form L∞ stability regions. The scheme is L∞ stable at advection
// velocity V exactly when the one-step matrix sending the populations to
// their post-collision values is entrywise nonnegative (it always has unit
// column sums, so nonnegativity makes it a weighted average and the sup norm
// cannot grow). Every case below carries a closed-form predicate in V with a
// zone decomposition of the (s_q, s_xy) quarter plane; the numeric oracle
// simply inspects the smallest entry of the collision matrix. Both routes
// are kept strictly independent so they can be swept against each other.
//
// Zone labels name corners of the relaxation-rate plane (s_q, s_xy):
//   fixed-frame (MRT) cases:            A=(1,2) B=(0,0) C=(1,1) D=(2,0)
//   moving-frame (ũ=V) non-intrinsic:   A=(0,0) B=(1/2,1) C=(1,1) D=(1,2)
//                                       E=(4/3,4/3) F=(2,0)
//   moving-frame (ũ=V) intrinsic:       A=(0,0) B=(2,0) C=(1,2) D=(4/3,4/3)
// Single-rate schemes (s_q = s_xy) live on the diagonal of that plane and
// dispatch to their own closed forms ("bgk-plateau" for the constant region
// at s ≤ 1, "bgk-shrinking" for 1 < s ≤ 4/3).

namespace rvlb {

struct LinfCase {
  Variant variant = Variant::TwistedD2Q4;
  Equilibrium equilibrium = Equilibrium::NonIntrinsic;
  bool u_tracks_v = false;  // ũ = V when set, ũ = 0 otherwise
  double lambda = 1.0;
  double s_q = 1.0;
  double s_xy = 1.0;
};

inline constexpr double kLinfOracleTol = 1e-12;  // entry nonnegativity slack
inline constexpr double kLinfSweepCollar = 1e-6; // skip band around borders
inline constexpr double kZoneEdgeTol = 1e-12;    // ambiguity reporting only

SchemeSpec to_scheme_spec(const LinfCase& c, const Vec2& v);

// Smallest entry of the collision matrix; the oracle verdict is
// margin ≥ -kLinfOracleTol.
double linf_oracle_margin(const LinfCase& c, const Vec2& v);
bool linf_oracle(const LinfCase& c, const Vec2& v);

// The collision matrix is affine in the relaxation rates once the velocity
// (and with it the equilibrium and the frame) is fixed. Sweeps over rate
// grids reuse the two generators instead of refactoring per rate pair.
struct OracleAffine {
  Mat4 g_q;   // coefficient of s_q
  Mat4 g_xy;  // coefficient of s_xy
};
OracleAffine oracle_affine(Variant variant, Equilibrium equilibrium,
                           bool u_tracks_v, double lambda, const Vec2& v);
double oracle_margin(const OracleAffine& a, double s_q, double s_xy);

struct LinfDomain {
  std::string zone;        // "BCD", "ABC", ..., "ray", "point", "bgk-...",
                           // "empty"
  bool region_is_empty = false;  // no stable V at these rates
  bool region_is_all = false;    // every V is stable
  bool near_zone_edge = false;   // rates within kZoneEdgeTol of a dispatch
                                 // boundary; verdicts use the literal closed
                                 // inequalities either way
};
LinfDomain linf_param_domain(const LinfCase& c);

// slack ≥ 0 exactly when every closed-form inequality of the active zone
// holds (closed inequalities, no tolerance). The magnitude is a
// tightness measure used to recognise borderline sweep points; it mixes
// linear and quadratic units and is not a distance.
struct LinfPredicate {
  bool stable = false;
  double slack = 0.0;
};
LinfPredicate linf_region_predicate(const LinfCase& c, const Vec2& v);

}  // namespace rvlb
