#pragma once

// 4x4 Lorentz machinery: rotations R(theta) = exp(theta_m J_m) with
// (J_m)^j_k = eps_mjk, boosts L(u) = exp(beta_m K_m) with
// (K_m)^0_k = (K_m)^k_0 = -delta_mk, and Lambda(u, theta) = L(u) R(theta).
//
// Boosts are labelled by the spatial four-velocity u, u^0 = sqrt(1 + |u|^2),
// |u| = sinh|beta|. With these generator signs L(u) e_0 = (u^0, -u).

#include "xpoincare/types.hpp"

namespace xpoincare {

class FourVelocity {
 public:
  FourVelocity() : u_(Vec3::Zero()) {}
  explicit FourVelocity(const Vec3& spatial) : u_(spatial) {}

  static FourVelocity from_rapidity(const Vec3& beta);

  const Vec3& spatial() const noexcept { return u_; }
  double u0() const;
  /// beta_hat * artanh(|u| / u^0).
  Vec3 rapidity() const;

 private:
  Vec3 u_;
};

/// Axis-angle vector. Canonical form has |theta| in [0, pi]; at |theta| = pi
/// the first nonzero component is positive.
class RotationVector {
 public:
  RotationVector() : theta_(Vec3::Zero()) {}
  explicit RotationVector(const Vec3& theta) : theta_(theta) {}

  const Vec3& vector() const noexcept { return theta_; }
  double angle() const { return theta_.norm(); }
  RotationVector canonical() const;

 private:
  Vec3 theta_;
};

struct LorentzParams {
  FourVelocity u;
  RotationVector theta;
};

/// (J_m)^j_k = eps_mjk, m in 0..2.
Mat4 rotation_generator(int m);
/// (K_m)^0_k = (K_m)^k_0 = -delta_mk, m in 0..2.
Mat4 boost_generator(int m);

Mat4 rotation_matrix(const RotationVector& theta);
/// 3x3 spatial block of rotation_matrix.
Eigen::Matrix3d spatial_rotation(const RotationVector& theta);
Mat4 boost_matrix(const FourVelocity& u);
Mat4 lorentz_matrix(const FourVelocity& u, const RotationVector& theta);

/// {u, theta}^-1 = {-R(-theta) u, -theta}
LorentzParams lorentz_inverse_params(const FourVelocity& u, const RotationVector& theta);

/// Recovers (u, theta) from a proper orthochronous Lorentz matrix. u comes
/// from the first column, theta from R = L(u)^-1 M.
/// Throws DecompositionError naming the violated precondition.
LorentzParams lorentz_decompose(const Mat4& m);

/// Inverse of spatial_rotation: canonical theta with exp(theta_m J_m) = r.
RotationVector rotation_log(const Eigen::Matrix3d& r);

/// max |M^T eta M - eta|
double metric_residual(const Mat4& m);

}  // namespace xpoincare
