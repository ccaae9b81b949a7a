#include "rvlb/eqeq.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rvlb/vonneumann.hpp"

namespace rvlb {

namespace {

double phi1(double w, double lam, double sig_q) {
  return w / 6.0 * (lam * lam - w * w) * (1.0 - 12.0 * sig_q * sig_q);
}

double phi2(double ux, double uy, double vx, double vy, double lam,
            double sig_q, double sig_xy) {
  double l2 = lam * lam;
  return 0.5 *
         (-vx * vy * vy +
          4.0 * sig_q * sig_q *
              (l2 * (ux - vx) + 3.0 * vx * vy * vy - uy * vx * vy -
               ux * vy * vy) -
          4.0 * sig_q * sig_xy *
              (l2 * (ux - vx) - (vx * uy * vy + ux * vy * vy)));
}

Mat2 d2_twisted(const SchemeSpec& s) {
  double sig_q = henon_sigma(s.s_q);
  double l2 = s.lambda * s.lambda;
  Mat2 d;
  if (s.equilibrium == Equilibrium::NonIntrinsic) {
    d << l2 - s.V.x() * s.V.x(), 0.0, 0.0, l2 - s.V.y() * s.V.y();
  } else {
    d = l2 * Mat2::Identity() - s.V * s.V.transpose();
  }
  return sig_q * d;
}

Mat2 d3_twisted(const SchemeSpec& s) {
  double sig_q = henon_sigma(s.s_q);
  double sig_xy = henon_sigma(s.s_xy);
  double lam = s.lambda;
  double vx = s.V.x(), vy = s.V.y();
  double ux = s.u_rel.x(), uy = s.u_rel.y();
  Mat2 d;
  if (s.equilibrium == Equilibrium::NonIntrinsic) {
    d(0, 0) = phi1(vx, lam, sig_q);
    d(1, 1) = phi1(vy, lam, sig_q);
    d(0, 1) = 2.0 * sig_q * (lam * lam - vy * vy) * (ux - vx) *
              (sig_q - sig_xy);
    d(1, 0) = 2.0 * sig_q * (lam * lam - vx * vx) * (uy - vy) *
              (sig_q - sig_xy);
  } else {
    d(0, 0) = phi1(vx, lam, sig_q);
    d(1, 1) = phi1(vy, lam, sig_q);
    d(0, 1) = phi2(ux, uy, vx, vy, lam, sig_q, sig_xy);
    d(1, 0) = phi2(uy, ux, vy, vx, lam, sig_q, sig_xy);
  }
  return d;
}

Eigen::Matrix2d frame_map() {
  Eigen::Matrix2d r;
  r << 1.0, -1.0, 1.0, 1.0;
  return r;
}

SchemeSpec to_twisted_frame(const SchemeSpec& s) {
  SchemeSpec t = s;
  t.variant = Variant::TwistedD2Q4;
  t.V = twist_map(s.V);
  t.u_rel = twist_map(s.u_rel);
  return t;
}

double cubic_contraction(const Mat2& d3, const Vec2& w) {
  return d3(0, 0) * w.x() * w.x() * w.x() + d3(0, 1) * w.x() * w.y() * w.y() +
         d3(1, 0) * w.x() * w.x() * w.y() + d3(1, 1) * w.y() * w.y() * w.y();
}

}  // namespace

Mat2 diffusion_matrix(const SchemeSpec& spec) {
  if (spec.variant == Variant::TwistedD2Q4) return d2_twisted(spec);
  // exact image under the frame map: the standard symbol at wavenumber k
  // equals the twisted symbol at Rk/2, so quadratic forms conjugate by R/2
  Mat2 tw = d2_twisted(to_twisted_frame(spec));
  Mat2 r = frame_map();
  return 0.25 * r.transpose() * tw * r;
}

Mat2 dispersion_matrix(const SchemeSpec& spec) {
  if (spec.variant == Variant::TwistedD2Q4) return d3_twisted(spec);
  // cubic forms conjugate the same way; recover the four condensed entries
  // from values of the mapped form at four directions
  Mat2 tw = d3_twisted(to_twisted_frame(spec));
  Eigen::Matrix2d r = frame_map();
  auto p = [&](double nx, double ny) {
    return cubic_contraction(tw, r * Vec2(nx, ny)) / 8.0;
  };
  Mat2 d;
  d(0, 0) = p(1.0, 0.0);
  d(1, 1) = p(0.0, 1.0);
  double sum = p(1.0, 1.0), dif = p(1.0, -1.0);
  d(0, 1) = 0.5 * (sum + dif) - d(0, 0);
  d(1, 0) = 0.5 * (sum - dif) - d(1, 1);
  return d;
}

bool wellposed(const SchemeSpec& spec) {
  double lam = spec.lambda;
  if (spec.equilibrium == Equilibrium::NonIntrinsic) {
    return spec.variant == Variant::TwistedD2Q4
               ? spec.V.cwiseAbs().maxCoeff() < lam
               : spec.V.cwiseAbs().sum() < lam;
  }
  double bound = spec.variant == Variant::TwistedD2Q4
                     ? lam
                     : lam / std::numbers::sqrt2;
  return spec.V.norm() < bound;
}

DispersionFit numeric_dispersion_fit(const SchemeSpec& spec,
                                     const Vec2& direction, int k_samples) {
  if (k_samples < 6)
    throw std::invalid_argument("need at least 6 wavenumber samples");
  Vec2 n = direction.normalized();
  double dt = 1.0 / spec.lambda;

  DispersionFit out;
  Mat2 d2 = diffusion_matrix(spec);
  Mat2 d3 = dispersion_matrix(spec);
  out.c1_closed = spec.V.dot(n);
  out.c2_closed = dt * n.dot(d2 * n);
  out.c3_closed = -dt * dt * cubic_contraction(d3, n);

  Eigen::MatrixXd im_a(k_samples, 4), re_a(k_samples, 3);
  Eigen::VectorXd im_b(k_samples), re_b(k_samples);
  std::complex<double> mu_prev(1.0, 0.0);
  for (int m = 0; m < k_samples; ++m) {
    double k = 2.0 * std::numbers::pi *
               (0.0025 + 0.0275 * m / double(k_samples - 1));
    Mat4c l = amplification_matrix(spec, Vec2(-k * n.x(), -k * n.y()));
    Eigen::ComplexEigenSolver<Mat4c> es(l, false);
    int best = 0;
    double bd = 1e300, second = 1e300;
    for (int e = 0; e < 4; ++e) {
      double dist = std::abs(es.eigenvalues()(e) - mu_prev);
      if (dist < bd) {
        second = bd;
        bd = dist;
        best = e;
      } else {
        second = std::min(second, dist);
      }
    }
    if (bd > 0.45 * second)
      throw std::runtime_error(
          "consistent eigenvalue branch collides with a relaxed one");
    mu_prev = es.eigenvalues()(best);
    std::complex<double> g = std::log(mu_prev) / (-dt);

    double w = 1.0 / k;  // favours the small magnitudes
    double k2 = k * k;
    im_a(m, 0) = w * k;
    im_a(m, 1) = w * k * k2;
    im_a(m, 2) = w * k * k2 * k2;
    im_a(m, 3) = w * k * k2 * k2 * k2;
    im_b(m) = w * g.imag();
    re_a(m, 0) = w * k2;
    re_a(m, 1) = w * k2 * k2;
    re_a(m, 2) = w * k2 * k2 * k2;
    re_b(m) = w * g.real();
  }
  Eigen::VectorXd ic = im_a.colPivHouseholderQr().solve(im_b);
  Eigen::VectorXd rc = re_a.colPivHouseholderQr().solve(re_b);
  out.c1 = ic(0);
  out.c3 = ic(1);
  out.c2 = rc(0);
  return out;
}

}  // namespace rvlb
