#pragma once

// Exact Lie-algebra layer for the 15-generator extended Poincare algebra.
//
// Conventions:
//   [X_a, X_b] = i f_ab^c X_c with f real, so every matrix in the library is
//   real. The adjoint matrices are (F_a)_r^s = f_ar^s; the fundamental
//   representation of a one-parameter subgroup exp(i t X_a) is exp(t F_a).
//   The metric is eta = diag(-1, +1, +1, +1). Together with the
//   [Gam^mu, P_nu] = -i delta G and [Gam^mu, G] = -i eta^{mu nu} P_nu signs this
//   is the only diagonal signature for which the Jacobi identity holds.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "xpoincare/types.hpp"

namespace xpoincare {

using Rational = boost::rational<std::int64_t>;

/// Basis generators in their frozen canonical order. The ordinal of each tag
/// fixes the row/column layout of every 15x15 matrix in the library.
enum class Generator : int {
  J1, J2, J3,
  K1, K2, K3,
  Gam0, Gam1, Gam2, Gam3,
  P0, P1, P2, P3,
  Gs,
};

inline constexpr int kNumGenerators = 15;

constexpr int ordinal(Generator g) noexcept { return static_cast<int>(g); }
Generator generator_at(int ordinal);
std::string_view name(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;
const std::array<Generator, kNumGenerators>& all_generators() noexcept;

// Ordinal offsets of each sector.
inline constexpr int kJ = 0;
inline constexpr int kK = 3;
inline constexpr int kGam = 6;
inline constexpr int kP = 10;
inline constexpr int kGs = 14;

bool is_translation(Generator g) noexcept;  // P0..P3, Gs
bool is_extended_lorentz(Generator g) noexcept;  // J, K, Gam

/// Minkowski metric eta_{mu nu} = eta^{mu nu} = diag(-1, 1, 1, 1).
constexpr int eta(int mu, int nu) noexcept {
  return mu != nu ? 0 : (mu == 0 ? -1 : 1);
}
const Mat4& metric();

int levi_civita(int i, int j, int k) noexcept;

/// Dense exact table of f_ab^c.
class StructureConstants {
 public:
  /// All-zero table.
  StructureConstants();

  /// The extended Poincare table.
  static const StructureConstants& extended_poincare();

  Rational operator()(Generator a, Generator b, Generator c) const noexcept {
    return f_[index(ordinal(a), ordinal(b), ordinal(c))];
  }
  Rational at(int a, int b, int c) const noexcept { return f_[index(a, b, c)]; }

  /// Sets f_ab^c = value and f_ba^c = -value.
  void set(Generator a, Generator b, Generator c, Rational value);
  /// Sets f_ab^c only; lets fixtures break antisymmetry on purpose.
  void set_raw(Generator a, Generator b, Generator c, Rational value);

  struct Entry {
    Generator a, b, c;
    Rational f;
  };

  /// Nonzero entries ordered by (a, b, c) ordinal. With `pairs_once` only
  /// a < b is listed.
  std::vector<Entry> entries(bool pairs_once = true) const;

  bool operator==(const StructureConstants&) const = default;

 private:
  static constexpr std::size_t index(int a, int b, int c) noexcept {
    return static_cast<std::size_t>((a * kNumGenerators + b) * kNumGenerators + c);
  }
  std::array<Rational, kNumGenerators * kNumGenerators * kNumGenerators> f_;
};

using ExactElement = std::array<Rational, kNumGenerators>;

/// Real coefficients z with [x, y] = i z^c X_c, z^c = x^a y^b f_ab^c.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y,
                          const StructureConstants& f = StructureConstants::extended_poincare());
ExactElement commutator(const ExactElement& x, const ExactElement& y,
                        const StructureConstants& f = StructureConstants::extended_poincare());

AlgebraElement basis(Generator g);
ExactElement exact_basis(Generator g);

struct JacobiViolation {
  Generator a, b, c, e;
  Rational value;
};

struct JacobiReport {
  std::size_t triples = 0;  // unordered distinct triples visited (455)
  Rational max_violation{0};
  std::optional<JacobiViolation> worst;
  std::size_t violating_entries = 0;

  bool ok() const noexcept { return violating_entries == 0; }
};

/// Exact Jacobi check over every unordered triple of distinct generators.
JacobiReport jacobi_check(const StructureConstants& f = StructureConstants::extended_poincare());

/// Max |f_ab^c + f_ba^c| over the whole table (exact).
Rational antisymmetry_violation(const StructureConstants& f);

/// (F_a)_r^s = f_ar^s.
Mat15 ad_matrix(Generator a, const StructureConstants& f = StructureConstants::extended_poincare());
/// sum_a x^a F_a.
Mat15 ad_matrix(const AlgebraElement& x,
                const StructureConstants& f = StructureConstants::extended_poincare());

/// exp(t sum_a x^a F_a): the fundamental representation matrix of exp(i t x.X).
Mat15 exp_ad(const AlgebraElement& x, double t = 1.0,
             const StructureConstants& f = StructureConstants::extended_poincare());

/// Quadratic element sum K^{ab} X_a X_b with symmetric exact coefficients.
struct QuadraticCasimir {
  std::array<std::array<Rational, kNumGenerators>, kNumGenerators> K{};

  Mat15 matrix() const;
};

/// J.J - K.K + Gam0 Gam0 - Gam.Gam
QuadraticCasimir casimir_lambda();
/// G^2 - eta^{beta nu} P_beta P_nu
QuadraticCasimir casimir_mu();

/// Max over (a, b) of |sum_c (f_rc^a K^cb + f_rc^b K^ac)|, i.e. the
/// coefficients of [X_r, C]. Zero iff C commutes with X_r.
Rational casimir_residual(const QuadraticCasimir& casimir, Generator r,
                          const StructureConstants& f = StructureConstants::extended_poincare());

double to_double(const Rational& r) noexcept;

}  // namespace xpoincare
