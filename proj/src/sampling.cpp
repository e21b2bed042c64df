#include "xpoincare/sampling.hpp"

#include <cmath>
#include <numbers>

namespace xpoincare {

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Vec3 Rng::vec3(double half_width) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = uniform(-half_width, half_width);
  return v;
}

Vec4 Rng::vec4(double half_width) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = uniform(-half_width, half_width);
  return v;
}

Vec3 Rng::ball(double radius) {
  for (;;) {
    const Vec3 v = vec3(1.0);
    if (v.squaredNorm() <= 1.0) return radius * v;
  }
}

int Rng::index(int n) {
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
}

GroupParams random_element(Rng& rng, const SamplingDomain& domain) {
  GroupParams g;
  g.alpha = rng.uniform(-domain.alpha, domain.alpha);
  g.a = rng.vec4(domain.a);
  g.xl.omega = OmegaVector(rng.vec4(domain.omega));
  g.xl.u = FourVelocity(rng.vec3(domain.u));
  g.xl.theta = RotationVector(rng.vec3(domain.theta));
  return g;
}

OmegaVector random_omega(Rng& rng, OmegaBranch branch) {
  Vec3 dir = rng.ball(1.0);
  if (dir.norm() < 1e-3) dir = Vec3::UnitX();
  dir.normalize();
  const double b = rng.uniform(0.0, 1.5);
  switch (branch) {
    case OmegaBranch::Trigonometric: {
      // Unit timelike n (eta(n, n) = -1) scaled by an angle below pi.
      const double phi = rng.uniform(0.0, std::numbers::pi - 0.05);
      Vec4 n;
      n << std::cosh(b), std::sinh(b) * dir;
      return OmegaVector(phi * n);
    }
    case OmegaBranch::Hyperbolic: {
      const double phi = rng.uniform(0.0, 2.0);
      Vec4 n;
      n << std::sinh(b), std::cosh(b) * dir;
      return OmegaVector(phi * n);
    }
    case OmegaBranch::Null:
      break;
  }
  const double s = rng.uniform(0.1, 2.0);
  const double q = rng.uniform(-1e-13, 1e-13);
  Vec4 w;
  w << std::sqrt(s * s - q), s * dir;
  return OmegaVector(w);
}

}  // namespace xpoincare
