#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rvlb/core.hpp"

using namespace rvlb;

namespace {

SchemeSpec make_spec(Variant var, Equilibrium eq, double lambda, double sq,
                     double sxy, Vec2 V, Vec2 u) {
  SchemeSpec s;
  s.variant = var;
  s.equilibrium = eq;
  s.lambda = lambda;
  s.s_q = sq;
  s.s_xy = sxy;
  s.V = V;
  s.u_rel = u;
  return s;
}

std::vector<double> sorted_real_eigs(const Mat4& a) {
  Eigen::EigenSolver<Mat4> es(a);
  std::vector<double> out;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(es.eigenvalues()[i].imag()) < 1e-10);
    out.push_back(es.eigenvalues()[i].real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("henon parameter round trip") {
  CHECK(henon_sigma(1.0) == doctest::Approx(0.5));
  CHECK(henon_sigma(2.0) == doctest::Approx(0.0));
  for (double s : {0.1, 0.75, 1.3, 1.9})
    CHECK(rate_from_sigma(henon_sigma(s)) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("moment matrix rows at u=0") {
  const MomentMatrix tw = moment_matrix(Variant::TwistedD2Q4, 1.0, Vec2::Zero());
  Mat4 expect;
  expect << 1, 1, 1, 1,
            1, -1, -1, 1,
            1, 1, -1, -1,
            1, -1, 1, -1;
  CHECK((tw.m - expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  // Orthogonal rows make the inverse a quarter transpose.
  CHECK((tw.m_inv - tw.m.transpose() / 4.0).cwiseAbs().maxCoeff() < 1e-14);

  const MomentMatrix st =
      moment_matrix(Variant::StandardD2Q4, 1.0, Vec2::Zero());
  const Eigen::RowVector4d row3 = st.m.row(3);
  CHECK(row3(0) == doctest::Approx(1.0));
  CHECK(row3(1) == doctest::Approx(-1.0));
  CHECK(row3(2) == doctest::Approx(1.0));
  CHECK(row3(3) == doctest::Approx(-1.0));
}

TEST_CASE("moment matrix inverse holds for general u and lambda") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  for (Variant var : {Variant::TwistedD2Q4, Variant::StandardD2Q4}) {
    for (double lambda : {1.0, 2.0}) {
      for (int trial = 0; trial < 20; ++trial) {
        const Vec2 u(unif(rng), unif(rng));
        const MomentMatrix mm = moment_matrix(var, lambda, u);
        CHECK((mm.m * mm.m_inv - Mat4::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
      }
    }
  }
}

TEST_CASE("gauss-jordan inverse") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Mat4 a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = unif(rng);
    if (std::abs(a.determinant()) < 1e-3) continue;
    const Mat4 inv = gauss_jordan_inverse(a);
    CHECK((a * inv - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  }

  Mat4 singular = Mat4::Zero();
  singular(0, 0) = 1.0;
  CHECK_THROWS(gauss_jordan_inverse(singular));
}

TEST_CASE("equilibrium moments per variant and flavor") {
  const Vec2 V(0.3, 0.4);

  SUBCASE("twisted, relative velocity equal to V") {
    auto ni = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        1.0, 1.0, V, V);
    CHECK((equilibrium_moments(ni, 1.0) - Vec4(1, 0, 0, 0)).norm() < 1e-15);

    auto is = make_spec(Variant::TwistedD2Q4, Equilibrium::Intrinsic, 1.0, 1.0,
                        1.0, V, V);
    CHECK((equilibrium_moments(is, 1.0) - Vec4(1, 0, 0, -0.12)).norm() <
          1e-15);
  }

  SUBCASE("twisted, zero relative velocity") {
    auto ni = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        1.0, 1.0, V, Vec2::Zero());
    CHECK((equilibrium_moments(ni, 1.0) - Vec4(1, 0.3, 0.4, 0.12)).norm() <
          1e-15);

    auto is = make_spec(Variant::TwistedD2Q4, Equilibrium::Intrinsic, 1.0, 1.0,
                        1.0, V, Vec2::Zero());
    CHECK((equilibrium_moments(is, 1.0) - Vec4(1, 0.3, 0.4, 0)).norm() <
          1e-15);
  }

  SUBCASE("standard") {
    auto ni = make_spec(Variant::StandardD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        1.0, 1.0, V, Vec2::Zero());
    CHECK(equilibrium_moments(ni, 1.0)(3) ==
          doctest::Approx(0.09 - 0.16));

    auto is0 = make_spec(Variant::StandardD2Q4, Equilibrium::Intrinsic, 1.0,
                         1.0, 1.0, V, Vec2::Zero());
    CHECK(equilibrium_moments(is0, 1.0)(3) == doctest::Approx(0.0));

    auto isv = make_spec(Variant::StandardD2Q4, Equilibrium::Intrinsic, 1.0,
                         1.0, 1.0, V, V);
    CHECK(equilibrium_moments(isv, 1.0)(3) ==
          doctest::Approx(0.16 - 0.09));
  }

  SUBCASE("density scaling") {
    auto ni = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        1.0, 1.0, V, Vec2::Zero());
    CHECK((equilibrium_moments(ni, 3.0) - 3.0 * equilibrium_moments(ni, 1.0))
              .norm() < 1e-15);
  }
}

TEST_CASE("equilibrium distributions do not depend on the relative velocity") {
  const Vec2 V(0.2, 0.1);
  const std::vector<Vec2> us = {Vec2(0, 0), V, Vec2(0.37, -0.18)};
  for (Variant var : {Variant::TwistedD2Q4, Variant::StandardD2Q4}) {
    for (Equilibrium eq : {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
      for (double lambda : {1.0, 2.0}) {
        auto ref = make_spec(var, eq, lambda, 1.0, 1.0, V, us[0]);
        const Vec4 f0 = equilibrium_distributions(ref, 1.0);
        for (const Vec2& u : us) {
          auto spec = make_spec(var, eq, lambda, 1.0, 1.0, V, u);
          CHECK((equilibrium_distributions(spec, 1.0) - f0)
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
        }
      }
    }
  }

  auto rest = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        1.0, 1.0, Vec2::Zero(), Vec2(0.4, -0.2));
  CHECK((equilibrium_distributions(rest, 1.0) -
         Vec4::Constant(0.25)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("collision matrix basics") {
  SUBCASE("no relaxation is the identity") {
    auto spec = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                          0.0, 0.0, Vec2(0.3, -0.2), Vec2(0.1, 0.1));
    CHECK((collision_matrix(spec) - Mat4::Identity()).cwiseAbs().maxCoeff() <
          1e-14);
  }

  SUBCASE("full relaxation at rest projects onto the symmetric equilibrium") {
    auto spec = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                          1.0, 1.0, Vec2::Zero(), Vec2::Zero());
    const Mat4 c = collision_matrix(spec);
    CHECK((c - Mat4::Constant(0.25)).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("entrywise nonnegativity boundary at u=V, two rates") {
    // gamma = s_xy/(2 s_q − s_xy) = 1/3 for s = (1, 1/2); the matrix stays
    // nonnegative up to |V|∞ = lambda/3.
    auto inside = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic,
                            1.0, 1.0, 0.5, Vec2(0.33, 0), Vec2(0.33, 0));
    CHECK(collision_matrix(inside).minCoeff() >= -1e-12);
    auto outside = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic,
                             1.0, 1.0, 0.5, Vec2(0.35, 0), Vec2(0.35, 0));
    CHECK(collision_matrix(outside).minCoeff() < -1e-8);
  }
}

TEST_CASE("collision matrix conserves mass and has the fixed spectrum") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> vdist(-1.2, 1.2);
  std::uniform_real_distribution<double> sdist(0.05, 1.95);
  for (Variant var : {Variant::TwistedD2Q4, Variant::StandardD2Q4}) {
    for (Equilibrium eq : {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
      for (int trial = 0; trial < 25; ++trial) {
        const double lambda = (trial % 2 == 0) ? 1.0 : 2.0;
        const double sq = sdist(rng), sxy = sdist(rng);
        const Vec2 V(vdist(rng), vdist(rng));
        const Vec2 u = (trial % 3 == 0)   ? Vec2(Vec2::Zero())
                       : (trial % 3 == 1) ? V
                                          : Vec2(vdist(rng), vdist(rng));
        auto spec = make_spec(var, eq, lambda, sq, sxy, V, u);
        const Mat4 c = collision_matrix(spec);

        const Eigen::RowVector4d colsum = Eigen::RowVector4d::Ones() * c;
        CHECK((colsum - Eigen::RowVector4d::Ones()).cwiseAbs().maxCoeff() <
              1e-12);

        std::vector<double> eigs = sorted_real_eigs(c);
        std::vector<double> expect = {1.0, 1.0 - sq, 1.0 - sq, 1.0 - sxy};
        std::sort(expect.begin(), expect.end());
        for (int i = 0; i < 4; ++i)
          CHECK(eigs[i] == doctest::Approx(expect[i]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("moment-space form of the relaxation generator at u=V") {
  // Conjugating J by the u=0 moment matrix must give the lower-triangular
  // matrix with first column (0, s_q Vx, s_q Vy, (2s_q−s_xy)VxVy) and
  // diagonal (0, −s_q, −s_q, −s_xy).
  const double sq = 1.3, sxy = 0.6;
  const Vec2 V(0.25, -0.4);
  auto spec = make_spec(Variant::TwistedD2Q4, Equilibrium::NonIntrinsic, 1.0,
                        sq, sxy, V, V);
  const Mat4 j = collision_generator(spec);
  const MomentMatrix m0 = moment_matrix(Variant::TwistedD2Q4, 1.0, Vec2::Zero());
  const Mat4 mj = m0.m * j * m0.m_inv;

  Mat4 expect;
  expect << 0, 0, 0, 0,
      sq * V.x(), -sq, 0, 0,
      sq * V.y(), 0, -sq, 0,
      (2 * sq - sxy) * V.x() * V.y(), V.y() * (sxy - sq), V.x() * (sxy - sq),
      -sxy;
  CHECK((mj - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("twist map") {
  CHECK((twist_map(Vec2(1, 0)) - Vec2(1, 1)).norm() < 1e-15);
  CHECK(twist_map(Vec2(0, 0)).norm() == doctest::Approx(0.0));
  CHECK((twist_map(Vec2(1, 1)) - Vec2(0, 2)).norm() < 1e-15);

  // R maps the standard velocity set onto the twisted one, in order.
  const Mat24 vs = velocities(Variant::StandardD2Q4, 1.0);
  const Mat24 vt = velocities(Variant::TwistedD2Q4, 1.0);
  for (int j = 0; j < 4; ++j)
    CHECK((twist_map(vs.col(j)) - vt.col(j)).norm() < 1e-15);
}

TEST_CASE("standard and twisted collisions are conjugate under the twist map") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> vdist(-1.0, 1.0);
  std::uniform_real_distribution<double> sdist(0.1, 1.9);
  for (Equilibrium eq : {Equilibrium::NonIntrinsic, Equilibrium::Intrinsic}) {
    for (int trial = 0; trial < 20; ++trial) {
      const double sq = sdist(rng), sxy = sdist(rng);
      const Vec2 V(vdist(rng), vdist(rng));
      const Vec2 u = (trial % 2 == 0) ? Vec2(Vec2::Zero()) : V;
      auto std_spec =
          make_spec(Variant::StandardD2Q4, eq, 1.0, sq, sxy, V, u);
      auto tw_spec = make_spec(Variant::TwistedD2Q4, eq, 1.0, sq, sxy,
                               twist_map(V), twist_map(u));
      CHECK((collision_matrix(std_spec) - collision_matrix(tw_spec))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
  }
}
