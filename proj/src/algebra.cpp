#include "xpoincare/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "xpoincare/matrix_exp.hpp"

namespace xpoincare {

namespace {

constexpr std::array<std::string_view, kNumGenerators> kNames = {
    "J1", "J2", "J3", "K1", "K2", "K3", "Gam0", "Gam1",
    "Gam2", "Gam3", "P0", "P1", "P2", "P3", "Gs"};

Generator J(int j) { return generator_at(kJ + j); }
Generator K(int j) { return generator_at(kK + j); }
Generator Gam(int mu) { return generator_at(kGam + mu); }
Generator P(int mu) { return generator_at(kP + mu); }

StructureConstants build_extended_poincare() {
  StructureConstants f;
  const Rational one(1);

  // Spatial indices j, k, m run over 0..2 and label the 1..3 components.
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int m = 0; m < 3; ++m) {
        const int e = levi_civita(j, k, m);
        if (e == 0) continue;
        const Rational eps(e);
        if (j < k) {
          f.set(J(j), J(k), J(m), eps);        // [J_j, J_k] = i eps J_m
          f.set(K(j), K(k), J(m), -eps);       // [K_j, K_k] = -i eps J_m
          f.set(Gam(j + 1), Gam(k + 1), J(m), -eps);  // [Gam^j, Gam^k] = -i eps J_m
        }
        f.set(J(j), K(k), K(m), eps);              // [J_j, K_k] = i eps K_m
        f.set(Gam(j + 1), J(k), Gam(m + 1), eps);  // [Gam^j, J_k] = i eps Gam^m
        f.set(J(j), P(k + 1), P(m + 1), eps);      // [J_j, P_k] = i eps P_m
      }
    }
  }
  for (int k = 0; k < 3; ++k) {
    f.set(Gam(0), Gam(k + 1), K(k), one);   // [Gam^0, Gam^k] = i K_k
    f.set(Gam(0), K(k), Gam(k + 1), -one);  // [Gam^0, K_k] = -i Gam^k
    f.set(Gam(k + 1), K(k), Gam(0), -one);  // [Gam^j, K_k] = -i delta Gam^0
    f.set(K(k), P(0), P(k + 1), -one);      // [K_j, P_0] = -i P_j
    f.set(K(k), P(k + 1), P(0), -one);      // [K_j, P_k] = -i delta P_0
  }
  for (int mu = 0; mu < 4; ++mu) {
    f.set(Gam(mu), P(mu), Generator::Gs, -one);              // [Gam^mu, P_nu] = -i delta G
    f.set(Gam(mu), Generator::Gs, P(mu), Rational(-eta(mu, mu)));  // [Gam^mu, G] = -i eta P
  }
  return f;
}

}  // namespace

Generator generator_at(int ordinal) {
  if (ordinal < 0 || ordinal >= kNumGenerators) {
    throw std::out_of_range("generator ordinal " + std::to_string(ordinal) + " out of range");
  }
  return static_cast<Generator>(ordinal);
}

std::string_view name(Generator g) noexcept { return kNames[static_cast<std::size_t>(ordinal(g))]; }

std::optional<Generator> parse_generator(std::string_view text) noexcept {
  for (int i = 0; i < kNumGenerators; ++i) {
    if (kNames[static_cast<std::size_t>(i)] == text) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

const std::array<Generator, kNumGenerators>& all_generators() noexcept {
  static const std::array<Generator, kNumGenerators> all = [] {
    std::array<Generator, kNumGenerators> out{};
    for (int i = 0; i < kNumGenerators; ++i) out[static_cast<std::size_t>(i)] = static_cast<Generator>(i);
    return out;
  }();
  return all;
}

bool is_translation(Generator g) noexcept { return ordinal(g) >= kP; }
bool is_extended_lorentz(Generator g) noexcept { return ordinal(g) < kP; }

const Mat4& metric() {
  static const Mat4 m = Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal();
  return m;
}

int levi_civita(int i, int j, int k) noexcept {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0, 1, 2) are cyclic shifts.
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

StructureConstants::StructureConstants() { f_.fill(Rational(0)); }

const StructureConstants& StructureConstants::extended_poincare() {
  static const StructureConstants table = build_extended_poincare();
  return table;
}

void StructureConstants::set(Generator a, Generator b, Generator c, Rational value) {
  f_[index(ordinal(a), ordinal(b), ordinal(c))] = value;
  f_[index(ordinal(b), ordinal(a), ordinal(c))] = -value;
}

void StructureConstants::set_raw(Generator a, Generator b, Generator c, Rational value) {
  f_[index(ordinal(a), ordinal(b), ordinal(c))] = value;
}

std::vector<StructureConstants::Entry> StructureConstants::entries(bool pairs_once) const {
  std::vector<Entry> out;
  for (int a = 0; a < kNumGenerators; ++a) {
    for (int b = pairs_once ? a + 1 : 0; b < kNumGenerators; ++b) {
      for (int c = 0; c < kNumGenerators; ++c) {
        const Rational v = at(a, b, c);
        if (v.numerator() != 0) out.push_back({generator_at(a), generator_at(b), generator_at(c), v});
      }
    }
  }
  return out;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y,
                          const StructureConstants& f) {
  AlgebraElement z = AlgebraElement::Zero();
  for (int a = 0; a < kNumGenerators; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < kNumGenerators; ++b) {
      if (y[b] == 0.0) continue;
      for (int c = 0; c < kNumGenerators; ++c) {
        const Rational v = f.at(a, b, c);
        if (v.numerator() != 0) z[c] += x[a] * y[b] * to_double(v);
      }
    }
  }
  return z;
}

ExactElement commutator(const ExactElement& x, const ExactElement& y, const StructureConstants& f) {
  ExactElement z;
  z.fill(Rational(0));
  for (int a = 0; a < kNumGenerators; ++a) {
    if (x[static_cast<std::size_t>(a)].numerator() == 0) continue;
    for (int b = 0; b < kNumGenerators; ++b) {
      if (y[static_cast<std::size_t>(b)].numerator() == 0) continue;
      const Rational xy = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
      for (int c = 0; c < kNumGenerators; ++c) {
        const Rational v = f.at(a, b, c);
        if (v.numerator() != 0) z[static_cast<std::size_t>(c)] += xy * v;
      }
    }
  }
  return z;
}

AlgebraElement basis(Generator g) {
  AlgebraElement e = AlgebraElement::Zero();
  e[ordinal(g)] = 1.0;
  return e;
}

ExactElement exact_basis(Generator g) {
  ExactElement e;
  e.fill(Rational(0));
  e[static_cast<std::size_t>(ordinal(g))] = 1;
  return e;
}

JacobiReport jacobi_check(const StructureConstants& f) {
  JacobiReport report;
  // sum_d (f_ab^d f_dc^e + f_bc^d f_da^e + f_ca^d f_db^e)
  auto cyclic = [&f](int a, int b, int c, int e) {
    Rational sum(0);
    for (int d = 0; d < kNumGenerators; ++d) {
      const Rational ab = f.at(a, b, d);
      const Rational bc = f.at(b, c, d);
      const Rational ca = f.at(c, a, d);
      if (ab.numerator() != 0) sum += ab * f.at(d, c, e);
      if (bc.numerator() != 0) sum += bc * f.at(d, a, e);
      if (ca.numerator() != 0) sum += ca * f.at(d, b, e);
    }
    return sum;
  };
  for (int a = 0; a < kNumGenerators; ++a) {
    for (int b = a + 1; b < kNumGenerators; ++b) {
      for (int c = b + 1; c < kNumGenerators; ++c) {
        ++report.triples;
        for (int e = 0; e < kNumGenerators; ++e) {
          const Rational v = cyclic(a, b, c, e);
          if (v.numerator() == 0) continue;
          ++report.violating_entries;
          if (abs(v) > report.max_violation) {
            report.max_violation = abs(v);
            report.worst = JacobiViolation{generator_at(a), generator_at(b), generator_at(c),
                                           generator_at(e), v};
          }
        }
      }
    }
  }
  return report;
}

Rational antisymmetry_violation(const StructureConstants& f) {
  Rational worst(0);
  for (int a = 0; a < kNumGenerators; ++a)
    for (int b = 0; b < kNumGenerators; ++b)
      for (int c = 0; c < kNumGenerators; ++c) worst = std::max(worst, abs(f.at(a, b, c) + f.at(b, a, c)));
  return worst;
}

Mat15 ad_matrix(Generator a, const StructureConstants& f) {
  Mat15 m = Mat15::Zero();
  const int ia = ordinal(a);
  for (int r = 0; r < kNumGenerators; ++r)
    for (int s = 0; s < kNumGenerators; ++s) m(r, s) = to_double(f.at(ia, r, s));
  return m;
}

Mat15 ad_matrix(const AlgebraElement& x, const StructureConstants& f) {
  Mat15 m = Mat15::Zero();
  for (int a = 0; a < kNumGenerators; ++a) {
    if (x[a] != 0.0) m += x[a] * ad_matrix(generator_at(a), f);
  }
  return m;
}

Mat15 exp_ad(const AlgebraElement& x, double t, const StructureConstants& f) {
  return expm(Mat15(t * ad_matrix(x, f)));
}

Mat15 QuadraticCasimir::matrix() const {
  Mat15 m;
  for (int a = 0; a < kNumGenerators; ++a)
    for (int b = 0; b < kNumGenerators; ++b)
      m(a, b) = to_double(K[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  return m;
}

QuadraticCasimir casimir_lambda() {
  QuadraticCasimir c;
  for (auto& row : c.K) row.fill(Rational(0));
  for (int j = 0; j < 3; ++j) {
    c.K[static_cast<std::size_t>(kJ + j)][static_cast<std::size_t>(kJ + j)] = 1;
    c.K[static_cast<std::size_t>(kK + j)][static_cast<std::size_t>(kK + j)] = -1;
    c.K[static_cast<std::size_t>(kGam + 1 + j)][static_cast<std::size_t>(kGam + 1 + j)] = -1;
  }
  c.K[kGam][kGam] = 1;
  return c;
}

QuadraticCasimir casimir_mu() {
  QuadraticCasimir c;
  for (auto& row : c.K) row.fill(Rational(0));
  for (int mu = 0; mu < 4; ++mu) {
    c.K[static_cast<std::size_t>(kP + mu)][static_cast<std::size_t>(kP + mu)] = -eta(mu, mu);
  }
  c.K[kGs][kGs] = 1;
  return c;
}

Rational casimir_residual(const QuadraticCasimir& casimir, Generator r, const StructureConstants& f) {
  const int ir = ordinal(r);
  const auto& K = casimir.K;
  Rational worst(0);
  for (std::size_t a = 0; a < kNumGenerators; ++a) {
    for (std::size_t b = 0; b < kNumGenerators; ++b) {
      Rational sum(0);
      for (std::size_t c = 0; c < kNumGenerators; ++c) {
        const Rational fa = f.at(ir, static_cast<int>(c), static_cast<int>(a));
        const Rational fb = f.at(ir, static_cast<int>(c), static_cast<int>(b));
        if (fa.numerator() != 0) sum += fa * K[c][b];
        if (fb.numerator() != 0) sum += fb * K[a][c];
      }
      worst = std::max(worst, abs(sum));
    }
  }
  return worst;
}

double to_double(const Rational& r) noexcept {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace xpoincare
