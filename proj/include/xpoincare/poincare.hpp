#pragma once

// The full 15-parameter group M = C(alpha) V(a) W(omega) L(u) R(theta).
//
// Parameters are laid out in generator order when flattened: theta (J),
// u (K), omega (Gam), a (P), alpha (Gs). The translation part composes as
// row vectors t = (a^0..a^3, alpha):
//   t = t2 + t1 D(h2)^-1,   D(h2)^-1 = D(R(-theta2)) D(L(-u2)) D(W(-omega2)).

#include "xpoincare/types.hpp"
#include "xpoincare/xlorentz.hpp"

namespace xpoincare {

struct GroupParams {
  double alpha = 0.0;
  Vec4 a = Vec4::Zero();
  XLParams xl;

  static GroupParams identity() { return {}; }

  /// (a^0..a^3, alpha)
  Vec5 translation() const;
  Vec15 to_vector() const;
  static GroupParams from_vector(const Vec15& v);
};

/// Semidirect realization: M is the extended-Lorentz Mat5, t = (a, alpha).
struct AffineRep {
  Mat5 M = Mat5::Identity();
  Vec5 t = Vec5::Zero();

  /// [[M^-T, t], [0, 1]]; a faithful matrix realization, so products of
  /// group elements are products of these matrices.
  Mat6 matrix() const;
  AffineRep operator*(const AffineRep& rhs) const;
  AffineRep inverse() const;
};

AffineRep to_affine(const GroupParams& g);
/// Throws DecompositionError when M is outside the reachable set.
GroupParams from_affine(const AffineRep& r);

/// Closed-form translation part of compose(g2, g1).
Vec5 compose_translation(const GroupParams& g2, const GroupParams& g1);
/// Closed-form translation part of inverse(g), written with the inverse
/// element's own extended-Lorentz parameters.
Vec5 inverse_translation(const GroupParams& g);

GroupParams compose(const GroupParams& g2, const GroupParams& g1);
GroupParams inverse(const GroupParams& g);

/// Fundamental representation for pure extended translations:
/// identity plus (Gam^mu, P_nu) = alpha eta^{mu nu}, (Gam^mu, G) = a^mu,
/// (J_j, P_k) = eps_jkm a^m, (K_j, P_0) = a^j, (K_j, P_k) = delta_jk a^0.
Mat15 oplus_translation(double alpha, const Vec4& a);
/// blockdiag(Ad(D), D) for D = xl_matrix(p).
Mat15 oplus_xl(const XLParams& p);
/// oplus_translation(alpha, a) * oplus_xl(xl)
Mat15 oplus(const GroupParams& g);

/// The 10x10 extended-Lorentz block of O+ read off from a Mat5 by
/// conjugating the (P, G) generator matrices: D^-1 rho_r D = O_r^s rho_s.
Eigen::Matrix<double, 10, 10> adjoint_from_mat5(const Mat5& d);

/// Closed Lie structure entries: every column in the translation sector and
/// every translation row. `known(r, s)` marks the entries that are claimed;
/// `listed(r, s)` the subset given by an explicit formula (the rest of the
/// known entries are claimed to vanish).
struct ThetaClosed {
  Mat15 value = Mat15::Zero();
  Eigen::Matrix<bool, 15, 15> known = Eigen::Matrix<bool, 15, 15>::Constant(false);
  Eigen::Matrix<bool, 15, 15> listed = Eigen::Matrix<bool, 15, 15>::Constant(false);
};

ThetaClosed theta_closed(const GroupParams& g);

/// Theta_r^s = d Phi^s(g'; g) / d g'^r at g' = e, central differences.
Mat15 theta_numeric(const GroupParams& g, double step = 1e-5);

}  // namespace xpoincare
