#include "rvlb/linf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rvlb {

namespace {

enum class Kind { Region, All, Empty, PointOnly };

struct Pick {
  const char* zone;
  Kind kind;
};

double norm_inf(const Vec2& v) { return std::max(std::fabs(v.x()), std::fabs(v.y())); }
double norm_one(const Vec2& v) { return std::fabs(v.x()) + std::fabs(v.y()); }

// min over both signs of (a ± c)^2 - b^2 - rhs
double pair_ge(double a, double b, double c, double rhs) {
  double p = (a + c) * (a + c) - b * b - rhs;
  double m = (a - c) * (a - c) - b * b - rhs;
  return std::min(p, m);
}

// min over the four sign choices of (a ± c)^2 - (b ± d)^2 - rhs
double quad_ge(double a, double b, double c, double d, double rhs) {
  double worst = std::numeric_limits<double>::infinity();
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      double e = (a + s1 * c) * (a + s1 * c) - (b + s2 * d) * (b + s2 * d) -
                 rhs;
      worst = std::min(worst, e);
    }
  return worst;
}

// ---- single-rate schemes (s_q = s_xy = s) --------------------------------

Pick pick_bgk_ni(double s) {
  if (s < 0.0) return {"empty", Kind::Empty};
  if (s == 0.0) return {"point", Kind::All};
  if (s <= 1.0) return {"bgk-plateau", Kind::Region};
  if (s <= 4.0 / 3.0) return {"bgk-shrinking", Kind::Region};
  return {"empty", Kind::Empty};
}

double slack_bgk_ni(bool twisted, double lam, double s, const Vec2& v) {
  if (s <= 1.0) return twisted ? lam - norm_inf(v) : lam - norm_one(v);
  double hx = v.x() + v.y(), hy = v.x() - v.y();
  if (twisted) {
    double rhs = 16.0 * lam * lam * (1.0 - 1.0 / s);
    return std::min(pair_ge(hx, hy, 2.0 * lam, rhs),
                    pair_ge(hy, hx, 2.0 * lam, rhs));
  }
  double rhs = 4.0 * lam * lam * (1.0 - 1.0 / s);
  return std::min(pair_ge(v.x(), v.y(), lam, rhs),
                  pair_ge(v.y(), v.x(), lam, rhs));
}

Pick pick_bgk_is(double s) { return pick_bgk_ni(s); }

double slack_bgk_is(bool twisted, double lam, double s, const Vec2& v) {
  double bound = (s <= 1.0) ? 1.0 : (4.0 / s - 3.0);
  return twisted ? lam * bound - norm_one(v)
                 : 0.5 * lam * bound - norm_inf(v);
}

// ---- fixed frame, non-intrinsic diffusion --------------------------------

Pick pick_mrt_ni(double sq, double sxy) {
  if (sxy < 0.0) return {"empty", Kind::Empty};
  if (sxy == 0.0) {
    if (sq > 0.0 && sq <= 2.0) return {"ray-BD", Kind::PointOnly};
    return {"empty", Kind::Empty};
  }
  if (sxy <= sq && sxy <= 2.0 - sq) return {"BCD", Kind::Region};
  if (sq <= sxy && sxy <= 2.0 * sq && sq <= 1.0) return {"ABC", Kind::Region};
  if (2.0 - sq <= sxy && sxy <= 2.0 * (2.0 - sq) && sq >= 1.0)
    return {"ACD", Kind::Region};
  return {"empty", Kind::Empty};
}

double slack_mrt_ni(const Pick& p, bool twisted, double lam, double sq,
                    double sxy, const Vec2& v) {
  double g = sq / sxy;
  double factor;
  if (p.zone[0] == 'B' && p.zone[1] == 'C')
    factor = g * g - 1.0;
  else if (p.zone[0] == 'A' && p.zone[1] == 'B')
    factor = (g - 1.0) * (g - 1.0);
  else
    factor = (g + 1.0) * (g + 1.0) - 4.0 / sxy;
  if (twisted) {
    double hx = v.x() + v.y(), hy = v.x() - v.y();
    double c = 2.0 * lam * g, rhs = 4.0 * lam * lam * factor;
    return std::min(pair_ge(hx, hy, c, rhs), pair_ge(hy, hx, c, rhs));
  }
  double c = lam * g, rhs = lam * lam * factor;
  return std::min(pair_ge(v.x(), v.y(), c, rhs),
                  pair_ge(v.y(), v.x(), c, rhs));
}

// ---- moving frame (ũ = V), non-intrinsic diffusion ------------------------

Pick pick_uv_ni(double sq, double sxy) {
  if (sxy == 2.0 * sq) {
    if (sxy > 0.0 && sxy <= 2.0) return {"ray-AD", Kind::Region};
    return {"empty", Kind::Empty};
  }
  if (sq <= sxy && sxy <= std::min(1.0, 2.0 * sq)) return {"ABC", Kind::Region};
  if (sxy < 2.0 * sq && sxy >= std::max(sq, 1.0) &&
      sxy <= 2.0 * (2.0 - sq))
    return {"BCED", Kind::Region};
  if (0.0 <= sxy && sxy <= std::min(sq, sq * (2.0 - sq)))
    return {"ACF", Kind::Region};
  if (sq * (2.0 - sq) <= sxy && sxy <= std::min(sq, 2.0 * (2.0 - sq)))
    return {"CEF", Kind::Region};
  return {"empty", Kind::Empty};
}

double slack_uv_ni(const Pick& p, bool twisted, double lam, double sq,
                   double sxy, const Vec2& v) {
  double square = twisted ? lam - norm_inf(v) : lam - norm_one(v);
  if (p.zone[0] == 'r') {  // ray-AD: square plus a shrinking cross norm
    double bound = 2.0 * lam * (2.0 - sxy) / sxy;
    double cross = twisted ? bound - norm_one(v) : 0.5 * bound - norm_inf(v);
    return std::min(square, cross);
  }
  if (p.zone[0] == 'A' && p.zone[1] == 'B') return square;  // ABC
  double g = sxy / (2.0 * sq - sxy);
  if (p.zone[0] == 'A') {  // ACF
    return twisted ? lam * g - norm_inf(v) : lam * g - norm_one(v);
  }
  double d = 2.0 * sq - sxy;
  double hyp;
  if (twisted) {
    double hx = v.x() + v.y(), hy = v.x() - v.y();
    double c = 2.0 * lam * g;
    double rhs = 16.0 * lam * lam * (sxy - sq * (2.0 - sq)) / (d * d);
    hyp = std::min(pair_ge(hx, hy, c, rhs), pair_ge(hy, hx, c, rhs));
  } else {
    double c = lam * g;
    double rhs = 4.0 * lam * lam * (sxy - sq * (2.0 - sq)) / (d * d);
    hyp = std::min(pair_ge(v.x(), v.y(), c, rhs),
                   pair_ge(v.y(), v.x(), c, rhs));
  }
  if (p.zone[0] == 'B') return std::min(square, hyp);  // BCED
  return hyp;                                          // CEF
}

// ---- fixed frame, intrinsic diffusion -------------------------------------

Pick pick_mrt_is(double sq, double sxy) {
  if (sq <= 0.0) return {"empty", Kind::Empty};  // sq = sxy = 0 handled above
  double g = sxy / sq;
  double bound = std::min({g, 2.0 - g, 4.0 / sq - 2.0 - g});
  if (bound < 0.0) return {"empty", Kind::Empty};
  if (sxy <= sq && sxy <= 2.0 - sq) return {"BCD", Kind::Region};
  if (sq <= 1.0 && sq <= sxy && sxy <= 2.0 * sq) return {"ABC", Kind::Region};
  if (sq >= 1.0 && sq >= 2.0 - sxy && sxy <= 2.0 * (2.0 - sq))
    return {"ACD", Kind::Region};
  return {"unzoned", Kind::Region};  // unreachable when bound >= 0
}

double slack_mrt_is(bool twisted, double lam, double sq, double sxy,
                    const Vec2& v) {
  double g = sxy / sq;
  double bound = std::min({g, 2.0 - g, 4.0 / sq - 2.0 - g});
  return twisted ? lam * bound - norm_one(v)
                 : 0.5 * lam * bound - norm_inf(v);
}

// ---- moving frame (ũ = V), intrinsic diffusion -----------------------------

Pick pick_uv_is(double sq, double sxy) {
  if (sq < sxy && sxy <= std::min(2.0 * sq, 2.0 * (2.0 - sq)))
    return {"ACD", Kind::Region};
  if (0.0 <= sxy && sxy <= std::min(sq, 2.0 * (2.0 - sq)))
    return {"ABD", Kind::Region};
  return {"empty", Kind::Empty};
}

// Eight expressions per orientation; the lower bounds hold in the lean zone
// (ABD) and flip to upper bounds in the fat zone (ACD).
double family_uv_is(bool twisted, bool lower, double lam, double sq,
                    double sxy, const Vec2& v) {
  double g1 = (2.0 * sq - sxy) / (sq - sxy);
  double g2 = sxy / (sq - sxy);
  double q = lam * lam *
             (4.0 * sq * sq - 2.0 * sq * sxy - sxy * sxy +
              8.0 * (sxy - sq)) /
             ((sq - sxy) * (sq - sxy));
  double ax, ay;
  double c1, ch, dh, c2, r1, rh, r2;
  if (twisted) {
    ax = v.x() + v.y();
    ay = v.x() - v.y();
    c1 = lam * g1;
    ch = lam * (g1 + g2) / 2.0;
    dh = lam;
    c2 = lam * g2;
    r1 = lam * lam * g1 * g2;
    rh = lam * lam * g2 * g2;
    r2 = q;
  } else {
    ax = v.x();
    ay = v.y();
    c1 = lam * g1 / 2.0;
    ch = lam * (g1 + g2) / 4.0;
    dh = lam / 2.0;
    c2 = lam * g2 / 2.0;
    r1 = lam * lam * g1 * g2 / 4.0;
    rh = lam * lam * g2 * g2 / 4.0;
    r2 = q / 4.0;
  }
  auto orient = [&](double a, double b) {
    return std::min({pair_ge(a, b, c1, r1), quad_ge(a, b, ch, dh, rh),
                     pair_ge(a, b, c2, r2)});
  };
  auto orient_le = [&](double a, double b) {
    // upper bounds: rhs - lhs >= 0 for every expression, i.e. -max(expr)
    double worst = std::numeric_limits<double>::infinity();
    for (double s1 : {1.0, -1.0}) {
      worst = std::min(worst, r1 - (a + s1 * c1) * (a + s1 * c1) + b * b);
      worst = std::min(worst, r2 - (a + s1 * c2) * (a + s1 * c2) + b * b);
      for (double s2 : {1.0, -1.0})
        worst = std::min(worst, rh - (a + s1 * ch) * (a + s1 * ch) +
                                    (b + s2 * dh) * (b + s2 * dh));
    }
    return worst;
  };
  if (lower) return std::min(orient(ax, ay), orient(ay, ax));
  return std::min(orient_le(ax, ay), orient_le(ay, ax));
}

struct CaseEval {
  Pick pick;
  bool bgk;
};

CaseEval classify(const LinfCase& c) {
  if (c.s_q == c.s_xy) {
    Pick p = (c.equilibrium == Equilibrium::NonIntrinsic)
                 ? pick_bgk_ni(c.s_q)
                 : pick_bgk_is(c.s_q);
    if (c.u_tracks_v && c.equilibrium == Equilibrium::Intrinsic &&
        p.kind != Kind::Empty && p.kind != Kind::All) {
      // the diagonal is the segment joining the origin to (4/3,4/3)
      p.zone = (c.s_q <= 1.0) ? "segment-AD bgk-plateau"
                              : "segment-AD bgk-shrinking";
    }
    return {p, true};
  }
  if (c.equilibrium == Equilibrium::NonIntrinsic)
    return {c.u_tracks_v ? pick_uv_ni(c.s_q, c.s_xy)
                         : pick_mrt_ni(c.s_q, c.s_xy),
            false};
  return {c.u_tracks_v ? pick_uv_is(c.s_q, c.s_xy)
                       : pick_mrt_is(c.s_q, c.s_xy),
          false};
}

}  // namespace

SchemeSpec to_scheme_spec(const LinfCase& c, const Vec2& v) {
  SchemeSpec s;
  s.variant = c.variant;
  s.equilibrium = c.equilibrium;
  s.lambda = c.lambda;
  s.s_q = c.s_q;
  s.s_xy = c.s_xy;
  s.V = v;
  s.u_rel = c.u_tracks_v ? v : Vec2(0.0, 0.0);
  return s;
}

double linf_oracle_margin(const LinfCase& c, const Vec2& v) {
  return collision_matrix(to_scheme_spec(c, v)).minCoeff();
}

bool linf_oracle(const LinfCase& c, const Vec2& v) {
  return linf_oracle_margin(c, v) >= -kLinfOracleTol;
}

OracleAffine oracle_affine(Variant variant, Equilibrium equilibrium,
                           bool u_tracks_v, double lambda, const Vec2& v) {
  SchemeSpec s;
  s.variant = variant;
  s.equilibrium = equilibrium;
  s.lambda = lambda;
  s.s_q = 1.0;
  s.s_xy = 1.0;
  s.V = v;
  s.u_rel = u_tracks_v ? v : Vec2(0.0, 0.0);
  MomentMatrix mm = moment_matrix(variant, lambda, s.u_rel);
  Vec4 feq1 = equilibrium_distributions(s, 1.0);
  Mat4 e = feq1 * Eigen::RowVector4d::Ones();
  Mat4 em1 = e - Mat4::Identity();
  Vec4 dq(0, 1, 1, 0), dxy(0, 0, 0, 1);
  OracleAffine a;
  a.g_q = mm.m_inv * dq.asDiagonal() * mm.m * em1;
  a.g_xy = mm.m_inv * dxy.asDiagonal() * mm.m * em1;
  return a;
}

double oracle_margin(const OracleAffine& a, double s_q, double s_xy) {
  return (Mat4::Identity() + s_q * a.g_q + s_xy * a.g_xy).minCoeff();
}

LinfDomain linf_param_domain(const LinfCase& c) {
  CaseEval ev = classify(c);
  LinfDomain d;
  d.zone = ev.pick.zone;
  d.region_is_empty = (ev.pick.kind == Kind::Empty);
  d.region_is_all = (ev.pick.kind == Kind::All);
  const double sq = c.s_q, sxy = c.s_xy;
  const double edges[] = {sq,
                          sxy,
                          sq - sxy,
                          sxy - 2.0 * sq,
                          sq - 1.0,
                          sxy - 1.0,
                          sq - 2.0,
                          sxy - 2.0,
                          sxy - (2.0 - sq),
                          sxy - 2.0 * (2.0 - sq),
                          sxy - sq * (2.0 - sq),
                          sq - 4.0 / 3.0,
                          sxy - 4.0 / 3.0};
  for (double e : edges)
    if (std::fabs(e) < kZoneEdgeTol && e != 0.0) d.near_zone_edge = true;
  return d;
}

LinfPredicate linf_region_predicate(const LinfCase& c, const Vec2& v) {
  CaseEval ev = classify(c);
  const bool tw = (c.variant == Variant::TwistedD2Q4);
  double slack;
  switch (ev.pick.kind) {
    case Kind::All:
      slack = 1.0;
      break;
    case Kind::Empty:
      slack = -1.0;
      break;
    case Kind::PointOnly:
      slack = -norm_inf(v);
      break;
    case Kind::Region:
    default:
      if (ev.bgk) {
        slack = (c.equilibrium == Equilibrium::NonIntrinsic)
                    ? slack_bgk_ni(tw, c.lambda, c.s_q, v)
                    : slack_bgk_is(tw, c.lambda, c.s_q, v);
      } else if (c.equilibrium == Equilibrium::NonIntrinsic) {
        slack = c.u_tracks_v
                    ? slack_uv_ni(ev.pick, tw, c.lambda, c.s_q, c.s_xy, v)
                    : slack_mrt_ni(ev.pick, tw, c.lambda, c.s_q, c.s_xy, v);
      } else {
        slack = c.u_tracks_v
                    ? family_uv_is(tw, ev.pick.zone[1] == 'B', c.lambda,
                                   c.s_q, c.s_xy, v)
                    : slack_mrt_is(tw, c.lambda, c.s_q, c.s_xy, v);
      }
      break;
  }
  return {slack >= 0.0, slack};
}

}  // namespace rvlb
