#include "xpoincare/xlorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xpoincare/algebra.hpp"
#include "xpoincare/errors.hpp"

namespace xpoincare {

namespace {

double scale_of(const Mat5& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

// eta^{mu nu} v_mu v_nu
double eta_dot(const Vec4& v) { return -v[0] * v[0] + v.tail<3>().squaredNorm(); }

}  // namespace

Vec4 OmegaVector::upper() const { return Vec4(-w_[0], w_[1], w_[2], w_[3]); }

double OmegaVector::q() const { return eta_dot(w_); }

OmegaBranch OmegaVector::branch() const {
  const double value = q();
  if (std::abs(value) < kNullOmega) return OmegaBranch::Null;
  return value < 0.0 ? OmegaBranch::Trigonometric : OmegaBranch::Hyperbolic;
}

const Mat5& form_matrix() {
  static const Mat5 b = (Vec5() << 1.0, -1.0, -1.0, -1.0, 1.0).finished().asDiagonal();
  return b;
}

double form_residual(const Mat5& m) {
  return (m.transpose() * form_matrix() * m - form_matrix()).cwiseAbs().maxCoeff();
}

double omega_cos(double q) {
  if (std::abs(q) < kNullOmega) return 1.0 + q / 2.0 + q * q / 24.0;
  return q > 0.0 ? std::cosh(std::sqrt(q)) : std::cos(std::sqrt(-q));
}

double omega_sinc(double q) {
  if (std::abs(q) < kNullOmega) return 1.0 + q / 6.0 + q * q / 120.0;
  if (q > 0.0) {
    const double r = std::sqrt(q);
    return std::sinh(r) / r;
  }
  const double r = std::sqrt(-q);
  return std::sin(r) / r;
}

double omega_versine(double q) {
  // (C - 1)/q = 2 sinh^2(r/2)/r^2 = sinc(q/4)^2 / 2
  const double half = omega_sinc(q / 4.0);
  return 0.5 * half * half;
}

Mat5 dirac_boost_mat5(const OmegaVector& omega) {
  const Vec4& lo = omega.lower();
  const Vec4 up = omega.upper();
  const double q = omega.q();
  const double s = omega_sinc(q);

  Mat5 d = Mat5::Identity();
  d.topLeftCorner<4, 4>() += omega_versine(q) * lo * up.transpose();
  d.topRightCorner<4, 1>() = -s * lo;
  d.bottomLeftCorner<1, 4>() = -s * up.transpose();
  d(4, 4) = omega_cos(q);
  return d;
}

Mat5 embed_lorentz5(const Mat4& lambda) {
  Mat5 m = Mat5::Identity();
  m.topLeftCorner<4, 4>() = lambda;
  return m;
}

Mat5 embed_lorentz5(const FourVelocity& u, const RotationVector& theta) {
  return embed_lorentz5(lorentz_matrix(u, theta));
}

Mat5 xl_matrix(const XLParams& p) {
  return dirac_boost_mat5(p.omega) * embed_lorentz5(p.u, p.theta);
}

XLParams xl_decompose(const Mat5& m) {
  const double scale = scale_of(m);
  const double residual = form_residual(m);
  if (!m.allFinite() || residual > 1e-8 * scale * scale) {
    std::ostringstream msg;
    msg << "xl_decompose: matrix does not preserve the (P, G) bilinear form (residual " << residual
        << ")";
    throw DecompositionError(msg.str());
  }

  // G column of W(omega) L R is (-omega S(q), C(q)) with C^2 - eta(v, v) = 1.
  const double c = m(4, 4);
  const Vec4 v = m.block<4, 1>(0, 4);
  const double vv = eta_dot(v);
  if (c < -1.0 - 1e-9 * scale) {
    std::ostringstream msg;
    msg << "xl_decompose: (G, G) entry " << c
        << " < -1 is outside the reachable set of W(omega) L(u) R(theta)";
    throw DecompositionError(msg.str());
  }

  Vec4 omega;
  if (c > 1.0) {
    const double phi = std::asinh(std::sqrt(std::max(vv, 0.0)));
    omega = -v / omega_sinc(phi * phi);
  } else {
    const double sin_phi = std::sqrt(std::max(-vv, 0.0));
    const double phi = std::atan2(sin_phi, c);
    if (c < 0.0 && sin_phi < 1e-10) {
      // Branch point cos = -1: every timelike direction gives the same G column.
      omega = Vec4(std::numbers::pi, 0.0, 0.0, 0.0);
    } else {
      omega = -v / omega_sinc(-phi * phi);
    }
  }

  const Mat5 rest = dirac_boost_mat5(OmegaVector(-omega)) * m;
  const double off_diagonal = std::max({rest.block<4, 1>(0, 4).cwiseAbs().maxCoeff(),
                                        rest.block<1, 4>(4, 0).cwiseAbs().maxCoeff(),
                                        std::abs(rest(4, 4) - 1.0)});
  if (off_diagonal > 1e-7 * scale) {
    std::ostringstream msg;
    msg << "xl_decompose: remainder after removing omega is not block diagonal (residual "
        << off_diagonal << "); input is outside the reachable set or hit a branch failure";
    throw DecompositionError(msg.str());
  }

  const LorentzParams lorentz = lorentz_decompose(rest.topLeftCorner<4, 4>());
  XLParams out{OmegaVector(omega), lorentz.u, lorentz.theta};

  const double mismatch = (xl_matrix(out) - m).cwiseAbs().maxCoeff();
  if (mismatch > 1e-7 * scale * scale) {
    std::ostringstream msg;
    msg << "xl_decompose: recovered parameters do not reproduce the matrix (residual " << mismatch
        << ")";
    throw DecompositionError(msg.str());
  }
  return out;
}

XLParams xl_compose(const XLParams& p2, const XLParams& p1) {
  return xl_decompose(xl_matrix(p2) * xl_matrix(p1));
}

XLParams xl_inverse(const XLParams& p) {
  const LorentzParams inv = lorentz_inverse_params(p.u, p.theta);
  const Vec4 omega = -(lorentz_matrix(inv.u, inv.theta) * p.omega.lower());
  return {OmegaVector(omega), inv.u, inv.theta};
}

}  // namespace xpoincare
