#pragma once

// The extended Lorentz group (J, K, Gam) realized on the five-dimensional
// translation block (P0..P3, Gs). Elements are W(omega) L(u) R(theta); the
// 5x5 matrices preserve B = diag(1, -1, -1, -1, 1), the quadratic form of the
// G^2 - eta^{mu nu} P_mu P_nu Casimir.

#include "xpoincare/lorentz.hpp"
#include "xpoincare/types.hpp"

namespace xpoincare {

enum class OmegaBranch { Trigonometric, Hyperbolic, Null };

/// |q| below this uses the series forms.
inline constexpr double kNullOmega = 1e-12;

/// Dirac-boost parameters omega_mu (lower index), conjugate to Gam^mu.
class OmegaVector {
 public:
  OmegaVector() : w_(Vec4::Zero()) {}
  explicit OmegaVector(const Vec4& lower) : w_(lower) {}

  const Vec4& lower() const noexcept { return w_; }
  /// omega^mu = eta^{mu nu} omega_nu
  Vec4 upper() const;
  /// q = omega_nu omega^nu
  double q() const;
  OmegaBranch branch() const;

 private:
  Vec4 w_;
};

struct XLParams {
  OmegaVector omega;
  FourVelocity u;
  RotationVector theta;
};

/// B = diag(1, -1, -1, -1, 1)
const Mat5& form_matrix();
/// max |M^T B M - B|
double form_residual(const Mat5& m);

/// cosh(sqrt q), continued to cos(sqrt(-q)) for q < 0.
double omega_cos(double q);
/// sinh(sqrt q)/sqrt q, continued to sin(sqrt(-q))/sqrt(-q).
double omega_sinc(double q);
/// (omega_cos(q) - 1)/q evaluated without cancellation.
double omega_versine(double q);

/// Pure Dirac boost on the (P, G) block:
///   S_mu^beta = delta + (C - 1) omega_mu omega^beta / q
///   S_mu^G = -omega_mu sinc,  S_G^beta = -omega^beta sinc,  S_G^G = C
Mat5 dirac_boost_mat5(const OmegaVector& omega);

/// Lorentz matrix on the P block, 1 in the (G, G) slot.
Mat5 embed_lorentz5(const Mat4& lambda);
Mat5 embed_lorentz5(const FourVelocity& u, const RotationVector& theta);

/// dirac_boost_mat5(omega) * embed_lorentz5(u, theta)
Mat5 xl_matrix(const XLParams& p);

/// Canonical parameters of a matrix in the image of xl_matrix.
///
/// omega is read from the G column; at the trigonometric branch point
/// (G, G) = -1 the direction is undetermined and (pi, 0, 0, 0) is used.
/// Throws DecompositionError when the matrix does not preserve B, when the
/// (G, G) entry is below -1 (outside the reachable set), or when the
/// remainder after stripping omega is not block diagonal.
XLParams xl_decompose(const Mat5& m);

/// Matrix product followed by xl_decompose.
XLParams xl_compose(const XLParams& p2, const XLParams& p1);

/// {-Lambda(u', theta') omega, u' = -R(-theta) u, theta' = -theta}
XLParams xl_inverse(const XLParams& p);

}  // namespace xpoincare
