#include "xpoincare/lorentz.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xpoincare/algebra.hpp"
#include "xpoincare/errors.hpp"

namespace xpoincare {

namespace {

constexpr double kSmallAngle = 1e-6;
constexpr double kSmallVelocity = 1e-8;

// sin(x)/x
double sinc(double x) {
  if (std::abs(x) < kSmallAngle) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

Eigen::Matrix3d cross_matrix(const Vec3& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

double max_abs(const Mat4& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

FourVelocity FourVelocity::from_rapidity(const Vec3& beta) {
  const double b = beta.norm();
  if (b < kSmallVelocity) return FourVelocity(beta * (1.0 + b * b / 6.0));
  return FourVelocity(beta * (std::sinh(b) / b));
}

double FourVelocity::u0() const { return std::sqrt(1.0 + u_.squaredNorm()); }

Vec3 FourVelocity::rapidity() const {
  const double n = u_.norm();
  // artanh(|u|/u0) = asinh(|u|); the ratio asinh(n)/n -> 1 as n -> 0.
  if (n < kSmallVelocity) return u_ * (1.0 - n * n / 6.0);
  return u_ * (std::asinh(n) / n);
}

RotationVector RotationVector::canonical() const {
  return rotation_log(spatial_rotation(*this));
}

Mat4 rotation_generator(int m) {
  Mat4 g = Mat4::Zero();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) g(1 + j, 1 + k) = levi_civita(m, j, k);
  return g;
}

Mat4 boost_generator(int m) {
  Mat4 g = Mat4::Zero();
  g(0, 1 + m) = -1.0;
  g(1 + m, 0) = -1.0;
  return g;
}

Eigen::Matrix3d spatial_rotation(const RotationVector& theta) {
  // exp(theta_m J_m) restricted to space is exp(-[theta]x).
  const Vec3& t = theta.vector();
  const double phi = t.norm();
  const Eigen::Matrix3d k = cross_matrix(t);
  const double half = sinc(0.5 * phi);
  return Eigen::Matrix3d::Identity() - sinc(phi) * k + 0.5 * half * half * k * k;
}

Mat4 rotation_matrix(const RotationVector& theta) {
  Mat4 r = Mat4::Identity();
  r.bottomRightCorner<3, 3>() = spatial_rotation(theta);
  return r;
}

Mat4 boost_matrix(const FourVelocity& u) {
  const Vec3& v = u.spatial();
  const double u0 = u.u0();
  Mat4 l;
  l(0, 0) = u0;
  l.block<1, 3>(0, 1) = -v.transpose();
  l.block<3, 1>(1, 0) = -v;
  l.bottomRightCorner<3, 3>() = Eigen::Matrix3d::Identity() + v * v.transpose() / (1.0 + u0);
  return l;
}

Mat4 lorentz_matrix(const FourVelocity& u, const RotationVector& theta) {
  return boost_matrix(u) * rotation_matrix(theta);
}

LorentzParams lorentz_inverse_params(const FourVelocity& u, const RotationVector& theta) {
  const RotationVector minus_theta(-theta.vector());
  return {FourVelocity(-(spatial_rotation(minus_theta) * u.spatial())), minus_theta};
}

RotationVector rotation_log(const Eigen::Matrix3d& r) {
  // r = exp(-[theta]x), so q = r^T = exp([theta]x) in the usual sense.
  const Eigen::Matrix3d q = r.transpose();
  const Vec3 w(0.5 * (q(2, 1) - q(1, 2)), 0.5 * (q(0, 2) - q(2, 0)), 0.5 * (q(1, 0) - q(0, 1)));
  const double c = std::clamp(0.5 * (q.trace() - 1.0), -1.0, 1.0);
  const double s = w.norm();
  const double phi = std::atan2(s, c);

  if (phi < kSmallAngle) return RotationVector(w * (1.0 + phi * phi / 6.0));
  if (c > -0.9) return RotationVector(w * (phi / s));

  // Near pi the antisymmetric part loses the axis; q + q^T = 2c I + 2(1-c) n n^T.
  const Eigen::Matrix3d nn = (0.5 * (q + q.transpose()) - c * Eigen::Matrix3d::Identity()) / (1.0 - c);
  int k = 0;
  nn.diagonal().maxCoeff(&k);
  Vec3 n = nn.col(k) / std::sqrt(std::max(nn(k, k), 1e-300));
  n.normalize();
  const double along = w.dot(n);
  if (std::abs(along) > 1e-12) {
    if (along < 0.0) n = -n;
  } else {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(n[i]) > 1e-12) {
        if (n[i] < 0.0) n = -n;
        break;
      }
    }
  }
  return RotationVector(phi * n);
}

double metric_residual(const Mat4& m) {
  return (m.transpose() * metric() * m - metric()).cwiseAbs().maxCoeff();
}

LorentzParams lorentz_decompose(const Mat4& m) {
  const double scale = max_abs(m);
  const double residual = metric_residual(m);
  if (!m.allFinite() || residual > 1e-8 * scale * scale) {
    std::ostringstream msg;
    msg << "lorentz_decompose: matrix does not preserve the metric (residual " << residual << ")";
    throw DecompositionError(msg.str());
  }
  if (m(0, 0) < 1.0 - 1e-8) {
    std::ostringstream msg;
    msg << "lorentz_decompose: matrix is not orthochronous (M^0_0 = " << m(0, 0) << ")";
    throw DecompositionError(msg.str());
  }
  if (m.determinant() <= 0.0) {
    throw DecompositionError("lorentz_decompose: matrix is improper (det <= 0)");
  }

  const FourVelocity u(-m.block<3, 1>(1, 0));
  const Mat4 rot = boost_matrix(FourVelocity(-u.spatial())) * m;
  return {u, rotation_log(rot.bottomRightCorner<3, 3>())};
}

}  // namespace xpoincare
