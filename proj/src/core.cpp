#include "rvlb/core.hpp"

#include <cmath>
#include <stdexcept>

namespace rvlb {

double henon_sigma(double s) { return 1.0 / s - 0.5; }

double rate_from_sigma(double sigma) { return 2.0 / (2.0 * sigma + 1.0); }

Mat24 velocities(Variant variant, double lambda) {
  Mat24 v;
  if (variant == Variant::TwistedD2Q4) {
    v << lambda, -lambda, -lambda, lambda,
         lambda, lambda, -lambda, -lambda;
  } else {
    v << lambda, 0.0, -lambda, 0.0,
         0.0, lambda, 0.0, -lambda;
  }
  return v;
}

Mat4 gauss_jordan_inverse(const Mat4& a) {
  Mat4 w = a;
  Mat4 inv = Mat4::Identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(w(r, col)) > std::abs(w(pivot, col))) pivot = r;
    if (std::abs(w(pivot, col)) < 1e-300)
      throw std::runtime_error("gauss_jordan_inverse: singular matrix");
    if (pivot != col) {
      w.row(pivot).swap(w.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const double d = w(col, col);
    w.row(col) /= d;
    inv.row(col) /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f != 0.0) {
        w.row(r) -= f * w.row(col);
        inv.row(r) -= f * inv.row(col);
      }
    }
  }
  return inv;
}

MomentMatrix moment_matrix(Variant variant, double lambda, const Vec2& u_rel) {
  const Mat24 v = velocities(variant, lambda);
  Mat4 m;
  for (int j = 0; j < 4; ++j) {
    const double x = v(0, j) - u_rel.x();
    const double y = v(1, j) - u_rel.y();
    m(0, j) = 1.0;
    m(1, j) = x;
    m(2, j) = y;
    m(3, j) = (variant == Variant::TwistedD2Q4) ? x * y : x * x - y * y;
  }

  Mat4 inv;
  if (u_rel.x() == 0.0 && u_rel.y() == 0.0) {
    // At ũ=0 the rows of M are orthogonal, so the inverse is a scaled
    // transpose. Row norms²: twisted (4, 4λ², 4λ², 4λ⁴),
    // standard (4, 2λ², 2λ², 4λ⁴).
    const double l2 = lambda * lambda;
    Vec4 row_norm2;
    if (variant == Variant::TwistedD2Q4)
      row_norm2 << 4.0, 4.0 * l2, 4.0 * l2, 4.0 * l2 * l2;
    else
      row_norm2 << 4.0, 2.0 * l2, 2.0 * l2, 4.0 * l2 * l2;
    inv = m.transpose() * row_norm2.cwiseInverse().asDiagonal();
  } else {
    inv = gauss_jordan_inverse(m);
  }

  const double resid = (m * inv - Mat4::Identity()).cwiseAbs().maxCoeff();
  if (!(resid < 1e-12))
    throw std::runtime_error("moment_matrix: inverse check failed");
  return {m, inv};
}

Vec4 equilibrium_moments(const SchemeSpec& spec, double rho) {
  const double vx = spec.V.x(), vy = spec.V.y();
  const double ux = spec.u_rel.x(), uy = spec.u_rel.y();
  double m3;
  if (spec.variant == Variant::TwistedD2Q4) {
    m3 = (spec.equilibrium == Equilibrium::NonIntrinsic)
             ? (vx - ux) * (vy - uy)
             : ux * uy - ux * vy - uy * vx;
  } else {
    // The intrinsic fourth moment is the unique completion of the ũ=0
    // value m3=0 that keeps f_eq independent of ũ.
    m3 = (spec.equilibrium == Equilibrium::NonIntrinsic)
             ? (vx - ux) * (vx - ux) - (vy - uy) * (vy - uy)
             : ux * ux - uy * uy - 2.0 * ux * vx + 2.0 * uy * vy;
  }
  return rho * Vec4(1.0, vx - ux, vy - uy, m3);
}

Vec4 equilibrium_distributions(const SchemeSpec& spec, double rho) {
  const MomentMatrix mm =
      moment_matrix(spec.variant, spec.lambda, spec.u_rel);
  return mm.m_inv * equilibrium_moments(spec, rho);
}

Mat4 collision_generator(const SchemeSpec& spec) {
  const MomentMatrix mm =
      moment_matrix(spec.variant, spec.lambda, spec.u_rel);
  const Vec4 feq1 = mm.m_inv * equilibrium_moments(spec, 1.0);
  const Mat4 e = feq1 * Eigen::RowVector4d::Ones();
  const Vec4 d(0.0, spec.s_q, spec.s_q, spec.s_xy);
  return mm.m_inv * d.asDiagonal() * mm.m * (e - Mat4::Identity());
}

Mat4 collision_matrix(const SchemeSpec& spec) {
  return Mat4::Identity() + collision_generator(spec);
}

Vec2 twist_map(const Vec2& v) {
  return Vec2(v.x() - v.y(), v.x() + v.y());
}

}  // namespace rvlb
