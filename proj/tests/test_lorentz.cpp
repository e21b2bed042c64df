#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "oracles.hpp"
#include "xpoincare/errors.hpp"
#include "xpoincare/lorentz.hpp"
#include "xpoincare/sampling.hpp"

using namespace xpoincare;
using oracle::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_u(Rng& rng, double max_norm) { return rng.ball(max_norm); }
Vec3 random_theta(Rng& rng) { return rng.ball(kPi); }

}  // namespace

TEST_CASE("rotation_matrix examples") {
  CHECK(rotation_matrix(RotationVector()) == Mat4::Identity());

  const Mat4 half = rotation_matrix(RotationVector(Vec3(0, 0, kPi)));
  Mat4 expected = Vec4(1, -1, -1, 1).asDiagonal();
  CHECK(max_abs(Mat4(half - expected)) < 1e-15);

  // exp(theta J_3) with (J_3)^1_2 = eps_312 = +1.
  const Mat4 quarter = rotation_matrix(RotationVector(Vec3(0, 0, kPi / 2)));
  CHECK(std::abs(quarter(1, 1)) < 1e-15);
  CHECK(std::abs(quarter(2, 2)) < 1e-15);
  CHECK(quarter(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(quarter(2, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(quarter(0, 0) == 1.0);
  CHECK(quarter(3, 3) == 1.0);
}

TEST_CASE("rotation_matrix against exp of the generators") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 th = trial == 0 ? Vec3(1e-9, -2e-9, 0) : random_theta(rng);
    Mat4 gen = Mat4::Zero();
    for (int m = 0; m < 3; ++m) gen += th[m] * rotation_generator(m);
    const Mat4 r = rotation_matrix(RotationVector(th));
    CHECK(max_abs(Mat4(r - oracle::eigen_exp<4>(gen))) < 1e-14);
    CHECK(max_abs(Mat4(r * rotation_matrix(RotationVector(-th)) - Mat4::Identity())) < 1e-14);
    CHECK(max_abs(Mat4(r.transpose() * r - Mat4::Identity())) < 1e-14);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
    CHECK(r.row(0) == Eigen::RowVector4d(1, 0, 0, 0));
    CHECK(r.col(0) == Vec4(1, 0, 0, 0));
  }
}

TEST_CASE("boost_matrix") {
  CHECK(boost_matrix(FourVelocity()) == Mat4::Identity());

  const Mat4 l = boost_matrix(FourVelocity(Vec3(0.75, 0, 0)));
  CHECK(l(0, 0) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(l(0, 1) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(l(1, 0) == doctest::Approx(-0.75).epsilon(1e-15));

  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const FourVelocity u(random_u(rng, 3.0));
    const Mat4 b = boost_matrix(u);
    CHECK(max_abs(Mat4(b - b.transpose())) == 0.0);
    CHECK(b(0, 0) == doctest::Approx(u.u0()).epsilon(1e-14));
    CHECK(max_abs(Vec4(b.col(0) - Vec4(u.u0(), -u.spatial()[0], -u.spatial()[1], -u.spatial()[2]))) < 1e-14);
    CHECK(std::abs(b.determinant() - 1.0) < 1e-12);
    CHECK(max_abs(Mat4(b * b.inverse() - Mat4::Identity())) < 1e-12);
    Mat4 gen = Mat4::Zero();
    for (int m = 0; m < 3; ++m) gen += u.rapidity()[m] * boost_generator(m);
    CHECK(max_abs(Mat4(b - oracle::eigen_exp<4>(gen))) < 1e-12);
  }
}

TEST_CASE("four-velocity relations") {
  const FourVelocity u(Vec3(0.75, 0, 0));
  CHECK(u.u0() == doctest::Approx(1.25));
  // tanh(beta) = |u| / u0 = 3/5
  CHECK(std::tanh(u.rapidity().norm()) == doctest::Approx(0.6).epsilon(1e-15));
  const FourVelocity tiny(Vec3(1e-12, 0, 0));
  CHECK(tiny.rapidity()[0] == doctest::Approx(1e-12).epsilon(1e-12));
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 beta = rng.ball(2.0);
    CHECK(max_abs(Vec3(FourVelocity::from_rapidity(beta).rapidity() - beta)) < 1e-13);
  }
}

TEST_CASE("generators by finite differences") {
  const double h = 1e-6;
  for (int m = 0; m < 3; ++m) {
    const Vec3 e = h * Vec3::Unit(m);
    const Mat4 dr = (rotation_matrix(RotationVector(e)) - rotation_matrix(RotationVector(-e))) / (2 * h);
    CHECK(max_abs(Mat4(dr - rotation_generator(m))) < 1e-8);
    const Mat4 dl = (lorentz_matrix(FourVelocity(e), RotationVector()) -
                     lorentz_matrix(FourVelocity(-e), RotationVector())) / (2 * h);
    CHECK(max_abs(Mat4(dl - boost_generator(m))) < 1e-8);
  }
  // Non-vanishing elements: (J_m)^j_k = eps_mjk, (K_m)^0_k = (K_m)^k_0 = -delta_mk.
  CHECK(rotation_generator(2)(1, 2) == 1.0);
  CHECK(rotation_generator(2)(2, 1) == -1.0);
  CHECK(boost_generator(0)(0, 1) == -1.0);
  CHECK(boost_generator(0)(1, 0) == -1.0);
}

TEST_CASE("lorentz_matrix") {
  CHECK(lorentz_matrix(FourVelocity(), RotationVector()) == Mat4::Identity());
  Rng rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const FourVelocity u(random_u(rng, 3.0));
    const RotationVector th(random_theta(rng));
    const Mat4 l = lorentz_matrix(u, th);
    CHECK(metric_residual(l) < 1e-12);
    CHECK(max_abs(Mat4(l - boost_matrix(u) * rotation_matrix(th))) < 1e-14);
    if (trial < 50) {
      CHECK(lorentz_matrix(u, RotationVector()) == boost_matrix(u));
      // (Lambda^-1)^mu_nu = eta_{mu alpha} Lambda^beta_alpha eta^{beta nu}
      const Mat4 by_index = metric() * l.transpose() * metric();
      CHECK(max_abs(Mat4(by_index - l.inverse())) < 1e-12);
    }
  }
}

TEST_CASE("lorentz_inverse_params") {
  const Vec3 th(0.1, -0.4, 0.3), u(0.5, -0.2, 1.1);
  const LorentzParams a = lorentz_inverse_params(FourVelocity(), RotationVector(th));
  CHECK(a.u.spatial() == Vec3::Zero());
  CHECK(a.theta.vector() == -th);
  const LorentzParams b = lorentz_inverse_params(FourVelocity(u), RotationVector());
  CHECK(b.u.spatial() == -u);
  CHECK(b.theta.vector() == Vec3::Zero());

  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const FourVelocity uu(random_u(rng, 3.0));
    const RotationVector tt(random_theta(rng));
    const LorentzParams inv = lorentz_inverse_params(uu, tt);
    CHECK(max_abs(Mat4(lorentz_matrix(inv.u, inv.theta) * lorentz_matrix(uu, tt) - Mat4::Identity())) < 1e-10);
    CHECK(max_abs(Mat4(lorentz_matrix(uu, tt) * lorentz_matrix(inv.u, inv.theta) - Mat4::Identity())) < 1e-10);
  }
}

TEST_CASE("rotation_log") {
  CHECK(rotation_log(Eigen::Matrix3d::Identity()).vector() == Vec3::Zero());

  SUBCASE("exact pi rotation uses the first-nonzero-positive axis") {
    for (const Vec3& axis : {Vec3(0, 0, 1), Vec3(0, 0, -1), Vec3(-1, 2, 2).normalized(), Vec3(0, -3, 4).normalized()}) {
      const Eigen::Matrix3d r = spatial_rotation(RotationVector(kPi * axis));
      const RotationVector t = rotation_log(r);
      CHECK(t.angle() == doctest::Approx(kPi).epsilon(1e-12));
      const Vec3 v = t.vector();
      const int first = std::abs(v[0]) > 1e-9 ? 0 : (std::abs(v[1]) > 1e-9 ? 1 : 2);
      CHECK(v[first] > 0);
      CHECK(max_abs(Eigen::Matrix3d(spatial_rotation(t) - r)) < 1e-12);
    }
  }
  SUBCASE("random and near-pi angles round-trip") {
    Rng rng(26);
    for (int trial = 0; trial < 500; ++trial) {
      Vec3 axis = rng.ball(1.0);
      if (axis.norm() < 1e-3) continue;
      axis.normalize();
      const double offsets[] = {0.0, 1e-14, 1e-10, 1e-7, 1e-3, -1e-10, -1e-4};
      const double angle = trial % 2 ? rng.uniform(0, kPi) : kPi - offsets[trial % 7];
      const Eigen::Matrix3d r = spatial_rotation(RotationVector(angle * axis));
      const RotationVector t = rotation_log(r);
      CHECK(t.angle() <= kPi + 1e-12);
      CHECK(max_abs(Eigen::Matrix3d(spatial_rotation(t) - r)) < 1e-9);
    }
  }
  SUBCASE("canonical form") {
    const RotationVector beyond(Vec3(0, 0, 1.5 * kPi));
    const RotationVector c = beyond.canonical();
    CHECK(c.vector()[2] == doctest::Approx(-0.5 * kPi));
    CHECK(max_abs(Mat4(rotation_matrix(c) - rotation_matrix(beyond))) < 1e-14);
    CHECK(RotationVector(Vec3(0, -kPi, 0)).canonical().vector()[1] == doctest::Approx(kPi));
  }
}

TEST_CASE("lorentz_decompose") {
  const LorentzParams id = lorentz_decompose(Mat4::Identity());
  CHECK(id.u.spatial() == Vec3::Zero());
  CHECK(id.theta.vector() == Vec3::Zero());

  const LorentzParams b = lorentz_decompose(boost_matrix(FourVelocity(Vec3(0.75, 0, 0))));
  CHECK(max_abs(Vec3(b.u.spatial() - Vec3(0.75, 0, 0))) < 1e-10);
  CHECK(b.theta.angle() < 1e-12);

  Rng rng(27);
  for (int trial = 0; trial < 1000; ++trial) {
    const FourVelocity u(random_u(rng, 3.0));
    Vec3 axis = rng.ball(1.0);
    if (axis.norm() < 1e-3) axis = Vec3::UnitY();
    const RotationVector th(trial % 3 == 0 ? Vec3((kPi - 1e-11 * (trial % 5)) * axis.normalized()) : random_theta(rng));
    const Mat4 m = lorentz_matrix(u, th);
    const LorentzParams p = lorentz_decompose(m);
    CHECK(max_abs(Mat4(lorentz_matrix(p.u, p.theta) - m)) < 1e-9);
  }

  SUBCASE("rejections name the violated precondition") {
    const Mat4 parity = Vec4(1, -1, -1, -1).asDiagonal();
    const Mat4 time_reversal = Vec4(-1, 1, 1, 1).asDiagonal();
    Mat4 squashed = Mat4::Identity();
    squashed(1, 1) = 2.0;
    auto message = [](const Mat4& m) {
      try {
        lorentz_decompose(m);
      } catch (const DecompositionError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message(parity).find("det") != std::string::npos);
    CHECK(message(time_reversal).find("orthochronous") != std::string::npos);
    CHECK(message(squashed).find("metric") != std::string::npos);
  }
}
