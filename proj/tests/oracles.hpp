#pragma once

// Independent reference computations used only by the tests. None of these
// reuse the library's closed forms.

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "xpoincare/algebra.hpp"
#include "xpoincare/poincare.hpp"

namespace oracle {

using namespace xpoincare;

/// Plain Taylor series in long double, no scaling.
template <int N>
Eigen::Matrix<double, N, N> taylor_exp(const Eigen::Matrix<double, N, N>& a, int terms = 400) {
  using LMat = Eigen::Matrix<long double, N, N>;
  const LMat x = a.template cast<long double>();
  LMat sum = LMat::Identity();
  LMat term = LMat::Identity();
  for (int k = 1; k < terms; ++k) {
    term = term * x / static_cast<long double>(k);
    sum += term;
  }
  return sum.template cast<double>();
}

template <int N>
Eigen::Matrix<double, N, N> eigen_exp(const Eigen::Matrix<double, N, N>& a) {
  return a.exp();
}

/// Exact Jacobi sum over all ordered triples and components, written
/// independently of jacobi_check.
inline Rational brute_force_jacobi(const StructureConstants& f) {
  Rational worst(0);
  for (int a = 0; a < kNumGenerators; ++a)
    for (int b = 0; b < kNumGenerators; ++b)
      for (int c = 0; c < kNumGenerators; ++c)
        for (int e = 0; e < kNumGenerators; ++e) {
          Rational s(0);
          for (int d = 0; d < kNumGenerators; ++d)
            s += f.at(a, b, d) * f.at(d, c, e) + f.at(b, c, d) * f.at(d, a, e) + f.at(c, a, d) * f.at(d, b, e);
          if (abs(s) > worst) worst = abs(s);
        }
  return worst;
}

/// Generators of the (P0..P3, G) block written from their geometric
/// definitions: rotations of the spatial P components, boosts mixing P0 with
/// Pm, and Dirac boosts mixing P_mu with G through the form B.
inline Mat5 block_generator(int r) {
  Mat5 t = Mat5::Zero();
  if (r < 3) {  // J_m: (J_m)^j_k = eps_mjk
    const int j = (r + 1) % 3, k = (r + 2) % 3;
    t(1 + j, 1 + k) = 1.0;
    t(1 + k, 1 + j) = -1.0;
  } else if (r < 6) {  // K_m: (K_m)^0_k = (K_m)^k_0 = -delta_mk
    const int m = r - 3;
    t(0, 1 + m) = -1.0;
    t(1 + m, 0) = -1.0;
  } else if (r < 10) {  // Gam^mu: S_mu^G = -delta, S_G^mu = -eta^{mu mu}
    const int mu = r - 6;
    t(mu, 4) = -1.0;
    t(4, mu) = -static_cast<double>(eta(mu, mu));
  }
  return t;
}

/// 6x6 affine matrix [[M^-T, t], [0, 1]] with M built by exponentiating the
/// block generators (Eigen's matrix exponential).
inline Mat6 affine(const GroupParams& g) {
  Mat5 om = Mat5::Zero(), bo = Mat5::Zero(), ro = Mat5::Zero();
  const Vec3& u = g.xl.u.spatial();
  const double un = u.norm();
  const Vec3 beta = un > 0 ? Vec3(u * std::asinh(un) / un) : Vec3::Zero();
  for (int m = 0; m < 3; ++m) {
    ro += g.xl.theta.vector()[m] * block_generator(m);
    bo += beta[m] * block_generator(3 + m);
  }
  for (int mu = 0; mu < 4; ++mu) om += g.xl.omega.lower()[mu] * block_generator(6 + mu);
  const Mat5 m = eigen_exp<5>(om) * eigen_exp<5>(bo) * eigen_exp<5>(ro);
  Mat6 out = Mat6::Identity();
  out.topLeftCorner<5, 5>() = m.inverse().transpose();
  out.topRightCorner<5, 1>() = g.translation();
  return out;
}

/// Generators T_r of the affine realization: d/dt affine(exp(t X_r)) at 0,
/// by central differences rounded to the nearest integer (every entry is
/// 0 or +-1).
inline Mat6 affine_generator(int r) {
  const double h = 1e-6;
  Vec15 e = Vec15::Zero();
  e[r] = h;
  const Mat6 d = (affine(GroupParams::from_vector(e)) - affine(GroupParams::from_vector(-e))) / (2.0 * h);
  return d.array().round().matrix();
}

/// Five-point stencil of the composition function in the left slot at the
/// identity.
inline Mat15 theta_five_point(const GroupParams& g, double h = 1e-3) {
  Mat15 out;
  for (int r = 0; r < kNumGenerators; ++r) {
    auto at = [&](double s) {
      Vec15 e = Vec15::Zero();
      e[r] = s;
      return compose(GroupParams::from_vector(e), g).to_vector();
    };
    out.row(r) = ((-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h)).transpose();
  }
  return out;
}

inline double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
