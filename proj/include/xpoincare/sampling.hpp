#pragma once

#include <cstdint>
#include <random>

#include "xpoincare/poincare.hpp"

namespace xpoincare {

/// Seeded generator whose output depends only on the seed (mt19937_64 is
/// fully specified; doubles are built from the top 53 bits).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Vec3 vec3(double half_width);
  Vec4 vec4(double half_width);
  /// Uniform point in the ball |v| <= radius.
  Vec3 ball(double radius);
  int index(int n);

 private:
  std::mt19937_64 engine_;
};

/// Half-widths of the box each parameter is drawn from.
struct SamplingDomain {
  double alpha = 2.0;
  double a = 2.0;
  double omega = 0.3;
  double u = 0.5;
  double theta = 1.5;

  /// Products of up to three draws stay inside the reachable set of
  /// W(omega) L(u) R(theta) with a wide margin.
  static SamplingDomain composable() { return {}; }
  /// Single elements far from the identity; not closed under composition.
  static SamplingDomain wide() { return {2.0, 2.0, 2.0, 2.0, 1.8}; }
};

GroupParams random_element(Rng& rng, const SamplingDomain& domain = SamplingDomain::composable());

/// Omega on a chosen branch: timelike (trigonometric, |omega| up to pi - 0.05),
/// spacelike (hyperbolic), or within 1e-13 of the light cone.
OmegaVector random_omega(Rng& rng, OmegaBranch branch);

}  // namespace xpoincare
