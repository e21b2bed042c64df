#pragma once

#include <Eigen/Core>

namespace xpoincare {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec15 = Eigen::Matrix<double, 15, 1>;

/// Row index contravariant (mu), column index covariant (nu).
using Mat4 = Eigen::Matrix4d;
/// Rows and columns ordered (P0, P1, P2, P3, Gs).
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
/// Rows and columns ordered by generator ordinal.
using Mat15 = Eigen::Matrix<double, 15, 15>;

/// Real coefficient vector x with element x^r X_r.
using AlgebraElement = Vec15;

}  // namespace xpoincare
