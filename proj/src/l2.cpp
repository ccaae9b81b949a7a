#include "rvlb/l2.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace rvlb {

namespace {

constexpr double kRankTolFactor = 1e-10;
constexpr double kPositivity = 1e-9;

// Maximize t subject to sum_b c_b W(i,b) >= t for each row i and -1 <= c_b
// <= 1, by enumerating the vertices of the feasible polyhedron in the
// (c, t) variables. The region contains (c,t) = (0,0) and recedes only in
// the -t direction, so it is pointed and an optimal vertex exists. Returns
// the best achievable worst entry together with its coefficient vector.
double best_min_entry(const Eigen::Matrix<double, 4, Eigen::Dynamic>& w,
                      Eigen::VectorXd& c_best) {
  const int d = int(w.cols());
  const int nvar = d + 1;
  // constraints a·x >= b with x = (c_0..c_{d-1}, t)
  std::vector<Eigen::VectorXd> a;
  std::vector<double> b;
  for (int i = 0; i < 4; ++i) {
    Eigen::VectorXd row(nvar);
    for (int k = 0; k < d; ++k) row(k) = w(i, k);
    row(d) = -1.0;
    a.push_back(row);
    b.push_back(0.0);
  }
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd up = Eigen::VectorXd::Zero(nvar);
    up(k) = -1.0;  // c_k <= 1
    a.push_back(up);
    b.push_back(-1.0);
    Eigen::VectorXd dn = Eigen::VectorXd::Zero(nvar);
    dn(k) = 1.0;  // c_k >= -1
    a.push_back(dn);
    b.push_back(-1.0);
  }
  const int m = int(a.size());
  const double feas_tol = 1e-9;

  double best_t = -1.0;
  std::vector<int> pick(nvar);
  // iterate over all nvar-subsets of the m constraints
  for (int k = 0; k < nvar; ++k) pick[k] = k;
  while (true) {
    Eigen::MatrixXd sys(nvar, nvar);
    Eigen::VectorXd rhs(nvar);
    for (int k = 0; k < nvar; ++k) {
      sys.row(k) = a[pick[k]].transpose();
      rhs(k) = b[pick[k]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    lu.setThreshold(1e-10);
    if (lu.rank() == nvar) {
      Eigen::VectorXd x = lu.solve(rhs);
      bool ok = true;
      for (int k = 0; k < m && ok; ++k)
        ok = a[k].dot(x) >= b[k] - feas_tol;
      if (ok && x(d) > best_t) {
        best_t = x(d);
        c_best = x.head(d);
      }
    }
    // next combination
    int pos = nvar - 1;
    while (pos >= 0 && pick[pos] == m - nvar + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int k = pos + 1; k < nvar; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best_t;
}

StabilityStructure build_structure(const Mat4& j, Vec4 lam) {
  StabilityStructure st;
  lam /= lam.maxCoeff();
  st.lambda_diag = lam;
  Vec4 rt = lam.cwiseSqrt();
  Mat4 s = rt.cwiseInverse().asDiagonal() * j * rt.asDiagonal();
  Mat4 sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Mat4> es(sym);
  st.eigs = es.eigenvalues();
  st.p = es.eigenvectors().transpose() * rt.cwiseInverse().asDiagonal();
  st.is_structure =
      st.eigs.minCoeff() >= -2.0 - 1e-10 && st.eigs.maxCoeff() <= 1e-10;
  return st;
}

}  // namespace

std::optional<StabilityStructure> find_prestructure(const Mat4& j) {
  // rows: J_il lam_l - J_li lam_i = 0 for i < l
  Eigen::Matrix<double, 6, 4> sys = Eigen::Matrix<double, 6, 4>::Zero();
  int r = 0;
  for (int i = 0; i < 4; ++i) {
    for (int l = i + 1; l < 4; ++l) {
      sys(r, l) = j(i, l);
      sys(r, i) = -j(l, i);
      ++r;
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 4>> svd(
      sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = std::max(1.0, j.cwiseAbs().maxCoeff());
  int nullity;
  if (sv(0) <= 1e-14 * scale) {
    nullity = 4;  // system matrix is numerically zero (J diagonal)
  } else {
    nullity = 0;
    for (int k = 0; k < 4; ++k)
      if (sv(k) <= kRankTolFactor * sv(0)) ++nullity;
  }
  if (nullity == 0) return std::nullopt;

  if (nullity == 1) {
    Vec4 w = svd.matrixV().col(3);
    int imax = 0;
    w.cwiseAbs().maxCoeff(&imax);
    if (w(imax) < 0.0) w = -w;
    w /= w.maxCoeff();
    if (w.minCoeff() <= kPositivity) return std::nullopt;
    return build_structure(j, w);
  }

  Eigen::Matrix<double, 4, Eigen::Dynamic> basis(4, nullity);
  for (int k = 0; k < nullity; ++k)
    basis.col(k) = svd.matrixV().col(4 - nullity + k);
  Eigen::VectorXd coeff;
  double t = best_min_entry(basis, coeff);
  if (t <= kPositivity) return std::nullopt;
  return build_structure(j, basis * coeff);
}

StructureVerdict check_structure(const SchemeSpec& spec) {
  auto st = find_prestructure(collision_generator(spec));
  if (!st) return StructureVerdict::None;
  return st->is_structure ? StructureVerdict::Structure
                          : StructureVerdict::Prestructure;
}

double weighted_norm_of_collision(const Mat4& r, const Mat4& p) {
  Mat4 conj = p * r * gauss_jordan_inverse(p);
  Eigen::JacobiSVD<Mat4> svd(conj);
  return svd.singularValues()(0);
}

double weighted_lattice_norm_sq(const FieldState& state,
                                const Vec4& lambda_diag) {
  double total = 0.0;
  for (int jdx = 0; jdx < 4; ++jdx) {
    double plane = 0.0;
    for (double v : state.f[size_t(jdx)]) plane += v * v;
    total += plane / lambda_diag(jdx);
  }
  return total;
}

}  // namespace rvlb
