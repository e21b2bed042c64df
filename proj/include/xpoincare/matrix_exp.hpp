#pragma once

#include <cmath>

#include <Eigen/Core>

namespace xpoincare {

/// Matrix exponential by scaling and squaring with a Taylor core.
///
/// The argument is scaled by 2^-s so that its 1-norm is at most 1/2, the
/// Taylor series is summed until the next term no longer changes the partial
/// sum, and the result is squared s times.
template <class Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = typename Derived::PlainObject;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Matrix scaled = a / std::ldexp(1.0, squarings);

  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  for (int k = 1; k < 40; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) {
      break;
    }
  }
  for (int i = 0; i < squarings; ++i) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace xpoincare
