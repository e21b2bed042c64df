#include "xpoincare/poincare.hpp"

#include <Eigen/LU>

#include "xpoincare/algebra.hpp"

namespace xpoincare {

namespace {

using Mat10 = Eigen::Matrix<double, 10, 10>;

// rho_r: the (P, G) block of F_r for the ten extended-Lorentz generators,
// plus the inverse Gram matrix used to read coefficients back off.
struct Mat5Basis {
  std::array<Mat5, 10> rho;
  Mat10 gram_inverse;

  Mat5Basis() {
    const auto& f = StructureConstants::extended_poincare();
    Mat10 gram;
    for (int r = 0; r < 10; ++r) rho[static_cast<std::size_t>(r)] = ad_matrix(generator_at(r), f).bottomRightCorner<5, 5>();
    for (int r = 0; r < 10; ++r)
      for (int s = 0; s < 10; ++s)
        gram(r, s) = rho[static_cast<std::size_t>(r)].cwiseProduct(rho[static_cast<std::size_t>(s)]).sum();
    gram_inverse = gram.inverse();
  }
};

const Mat5Basis& mat5_basis() {
  static const Mat5Basis basis;
  return basis;
}

}  // namespace

Vec5 GroupParams::translation() const {
  Vec5 t;
  t << a, alpha;
  return t;
}

Vec15 GroupParams::to_vector() const {
  Vec15 v;
  v.segment<3>(kJ) = xl.theta.vector();
  v.segment<3>(kK) = xl.u.spatial();
  v.segment<4>(kGam) = xl.omega.lower();
  v.segment<4>(kP) = a;
  v[kGs] = alpha;
  return v;
}

GroupParams GroupParams::from_vector(const Vec15& v) {
  GroupParams g;
  g.xl.theta = RotationVector(v.segment<3>(kJ));
  g.xl.u = FourVelocity(v.segment<3>(kK));
  g.xl.omega = OmegaVector(v.segment<4>(kGam));
  g.a = v.segment<4>(kP);
  g.alpha = v[kGs];
  return g;
}

Mat6 AffineRep::matrix() const {
  Mat6 out = Mat6::Identity();
  out.topLeftCorner<5, 5>() = M.inverse().transpose();
  out.topRightCorner<5, 1>() = t;
  return out;
}

AffineRep AffineRep::operator*(const AffineRep& rhs) const {
  // Row-vector translations: t = t2 + t1 M2^-1.
  return {M * rhs.M, t + (rhs.t.transpose() * M.inverse()).transpose()};
}

AffineRep AffineRep::inverse() const {
  return {M.inverse(), -(t.transpose() * M).transpose()};
}

AffineRep to_affine(const GroupParams& g) { return {xl_matrix(g.xl), g.translation()}; }

GroupParams from_affine(const AffineRep& r) {
  GroupParams g;
  g.xl = xl_decompose(r.M);
  g.a = r.t.head<4>();
  g.alpha = r.t[4];
  return g;
}

namespace {

// D(h^-1) = D(R(-theta)) D(L(-u)) D(W(-omega)), each factor in closed form.
Mat5 inverse_xl_mat5(const XLParams& p) {
  return embed_lorentz5(rotation_matrix(RotationVector(-p.theta.vector()))) *
         embed_lorentz5(boost_matrix(FourVelocity(-p.u.spatial()))) *
         dirac_boost_mat5(OmegaVector(-p.omega.lower()));
}

}  // namespace

Vec5 compose_translation(const GroupParams& g2, const GroupParams& g1) {
  return g2.translation() + (g1.translation().transpose() * inverse_xl_mat5(g2.xl)).transpose();
}

Vec5 inverse_translation(const GroupParams& g) {
  const XLParams inv = xl_inverse(g.xl);
  return -(g.translation().transpose() * inverse_xl_mat5(inv)).transpose();
}

GroupParams compose(const GroupParams& g2, const GroupParams& g1) {
  GroupParams out;
  out.xl = xl_compose(g2.xl, g1.xl);
  const Vec5 t = compose_translation(g2, g1);
  out.a = t.head<4>();
  out.alpha = t[4];
  return out;
}

GroupParams inverse(const GroupParams& g) {
  GroupParams out;
  out.xl = xl_inverse(g.xl);
  const Vec5 t = inverse_translation(g);
  out.a = t.head<4>();
  out.alpha = t[4];
  return out;
}

Mat15 oplus_translation(double alpha, const Vec4& a) {
  Mat15 o = Mat15::Identity();
  for (int mu = 0; mu < 4; ++mu) {
    o(kGam + mu, kP + mu) = alpha * eta(mu, mu);
    o(kGam + mu, kGs) = a[mu];
  }
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      double sum = 0.0;
      for (int m = 0; m < 3; ++m) sum += levi_civita(j, k, m) * a[1 + m];
      o(kJ + j, kP + 1 + k) = sum;
    }
    o(kK + j, kP) = a[1 + j];
    o(kK + j, kP + 1 + j) = a[0];
  }
  return o;
}

Eigen::Matrix<double, 10, 10> adjoint_from_mat5(const Mat5& d) {
  const Mat5Basis& basis = mat5_basis();
  const Mat5 d_inv = form_matrix() * d.transpose() * form_matrix();
  Mat10 out;
  for (int r = 0; r < 10; ++r) {
    const Mat5 y = d_inv * basis.rho[static_cast<std::size_t>(r)] * d;
    Eigen::Matrix<double, 10, 1> b;
    for (int s = 0; s < 10; ++s) b[s] = basis.rho[static_cast<std::size_t>(s)].cwiseProduct(y).sum();
    out.row(r) = (basis.gram_inverse * b).transpose();
  }
  return out;
}

Mat15 oplus_xl(const XLParams& p) {
  const Mat5 d = xl_matrix(p);
  Mat15 o = Mat15::Zero();
  o.topLeftCorner<10, 10>() = adjoint_from_mat5(d);
  o.bottomRightCorner<5, 5>() = d;
  return o;
}

Mat15 oplus(const GroupParams& g) { return oplus_translation(g.alpha, g.a) * oplus_xl(g.xl); }

ThetaClosed theta_closed(const GroupParams& g) {
  ThetaClosed out;
  for (int r = 0; r < kNumGenerators; ++r)
    for (int s = 0; s < kNumGenerators; ++s) out.known(r, s) = (s >= kP || r >= kP);

  auto set = [&out](int r, int s, double x) {
    out.value(r, s) = x;
    out.listed(r, s) = true;
  };
  const Vec4& a = g.a;
  set(kGs, kGs, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    set(kGam + mu, kGs, a[mu]);
    for (int beta = 0; beta < 4; ++beta) {
      set(kP + beta, kP + mu, beta == mu ? 1.0 : 0.0);
      set(kGam + beta, kP + mu, g.alpha * eta(mu, beta));
    }
  }
  for (int j = 0; j < 3; ++j) {
    set(kK + j, kP, a[1 + j]);
    for (int k = 0; k < 3; ++k) {
      set(kK + j, kP + 1 + k, j == k ? a[0] : 0.0);
      double sum = 0.0;
      for (int m = 0; m < 3; ++m) sum -= levi_civita(j, m, k) * a[1 + m];
      set(kJ + j, kP + 1 + k, sum);
    }
  }
  return out;
}

Mat15 theta_numeric(const GroupParams& g, double step) {
  Mat15 out;
  for (int r = 0; r < kNumGenerators; ++r) {
    Vec15 e = Vec15::Zero();
    e[r] = step;
    const Vec15 plus = compose(GroupParams::from_vector(e), g).to_vector();
    const Vec15 minus = compose(GroupParams::from_vector(-e), g).to_vector();
    out.row(r) = ((plus - minus) / (2.0 * step)).transpose();
  }
  return out;
}

}  // namespace xpoincare
