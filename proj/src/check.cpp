#include "xpoincare/check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/LU>

#include "xpoincare/io.hpp"
#include "xpoincare/poincare.hpp"
#include "xpoincare/sampling.hpp"

namespace xpoincare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerances per property family.
constexpr double kTolOracle = 1e-10;
constexpr double kTolGroup = 1e-8;
constexpr double kTolForm = 1e-12;
constexpr double kTolTheta = 1e-6;

using Witness = std::function<std::string()>;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (static_cast<unsigned char>(c) < 0x20) {
      out += ' ';
      continue;
    }
    out += c;
  }
  return out;
}

std::string elements(std::initializer_list<std::pair<const char*, const GroupParams*>> items) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, g] : items) {
    out += first ? "" : ",";
    first = false;
    out += "\"" + std::string(key) + "\":" + io::format_element(*g);
  }
  return out + "}";
}

double diff(const auto& a, const auto& b) { return (a - b).cwiseAbs().maxCoeff(); }

class Property {
 public:
  Property(std::string suite, std::string name, double tolerance) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
    r_.tolerance = tolerance;
  }

  void observe(double residual, const Witness& witness) {
    ++r_.trials;
    const double x = std::isnan(residual) ? kInf : residual;
    const bool bad = !(x <= r_.tolerance);
    if (bad && (r_.pass || x > worst_bad_)) {
      worst_bad_ = x;
      r_.counterexample = witness();
    }
    r_.pass = r_.pass && !bad;
    r_.max_residual = std::max(r_.max_residual, x);
  }

  template <typename Body>
  void trial(Body&& body, const Witness& witness) {
    try {
      observe(body(), witness);
    } catch (const std::exception& e) {
      observe(kInf, [&] {
        return "{\"error\":\"" + escape(e.what()) + "\",\"input\":" + witness() + "}";
      });
    }
  }

  PropertyResult result() && { return std::move(r_); }

 private:
  PropertyResult r_;
  double worst_bad_ = 0.0;
};

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step so suites draw independent streams.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

AlgebraElement sector(int offset, const auto& values) {
  AlgebraElement x = AlgebraElement::Zero();
  for (Eigen::Index i = 0; i < values.size(); ++i) x[offset + i] = values[i];
  return x;
}

// ---------------------------------------------------------------------------

std::vector<PropertyResult> suite_jacobi(const StructureConstants& f) {
  std::vector<PropertyResult> out;

  Property anti("jacobi", "antisymmetry", 0.0);
  anti.observe(to_double(antisymmetry_violation(f)), [&] {
    for (int a = 0; a < kNumGenerators; ++a)
      for (int b = 0; b < kNumGenerators; ++b)
        for (int c = 0; c < kNumGenerators; ++c)
          if ((f.at(a, b, c) + f.at(b, a, c)).numerator() != 0) {
            return "{\"a\":\"" + std::string(name(generator_at(a))) + "\",\"b\":\"" +
                   std::string(name(generator_at(b))) + "\",\"c\":\"" + std::string(name(generator_at(c))) +
                   "\"}";
          }
    return std::string("null");
  });
  out.push_back(std::move(anti).result());

  const JacobiReport report = jacobi_check(f);
  Property jac("jacobi", "jacobi_identity", 0.0);
  jac.observe(to_double(report.max_violation), [&] {
    const auto& w = *report.worst;
    return "{\"triple\":[\"" + std::string(name(w.a)) + "\",\"" + std::string(name(w.b)) + "\",\"" +
           std::string(name(w.c)) + "\"],\"component\":\"" + std::string(name(w.e)) + "\",\"value\":\"" +
           io::format_rational(w.value) + "\",\"violating_entries\":" + std::to_string(report.violating_entries) +
           "}";
  });
  auto jac_result = std::move(jac).result();
  jac_result.trials = report.triples;
  out.push_back(std::move(jac_result));

  Property comm("jacobi", "translations_commute", 0.0);
  for (int a = kP; a < kNumGenerators; ++a) {
    for (int b = kP; b < kNumGenerators; ++b) {
      Rational worst{0};
      int worst_c = 0;
      for (int c = 0; c < kNumGenerators; ++c) {
        if (abs(f.at(a, b, c)) > worst) {
          worst = abs(f.at(a, b, c));
          worst_c = c;
        }
      }
      comm.observe(to_double(worst), [&] {
        return "{\"a\":\"" + std::string(name(generator_at(a))) + "\",\"b\":\"" +
               std::string(name(generator_at(b))) + "\",\"c\":\"" + std::string(name(generator_at(worst_c))) +
               "\"}";
      });
    }
  }
  out.push_back(std::move(comm).result());
  return out;
}

std::vector<PropertyResult> suite_casimir(const StructureConstants& f) {
  std::vector<PropertyResult> out;
  const QuadraticCasimir mu = casimir_mu();
  const QuadraticCasimir lambda = casimir_lambda();

  auto rows = [&](const char* label, const QuadraticCasimir& c, int begin, int end) {
    Property p("casimir", label, 0.0);
    for (int r = begin; r < end; ++r) {
      const Generator g = generator_at(r);
      p.observe(to_double(casimir_residual(c, g, f)),
                [&] { return "{\"row\":\"" + std::string(name(g)) + "\"}"; });
    }
    out.push_back(std::move(p).result());
  };
  rows("casimir_mu_invariance", mu, 0, kNumGenerators);
  rows("casimir_lambda_invariance", lambda, 0, kP);

  // C_Lambda is a Casimir of the extended Lorentz subalgebra only.
  PropertyResult broken;
  broken.suite = "casimir";
  broken.name = "casimir_lambda_breaks_on_translations";
  broken.expect_nonzero = true;
  for (int r = kP; r < kNumGenerators; ++r) {
    const double x = to_double(casimir_residual(lambda, generator_at(r), f));
    broken.max_residual = std::max(broken.max_residual, x);
    ++broken.trials;
    if (x == 0.0) {
      broken.pass = false;
      if (broken.counterexample.empty())
        broken.counterexample = "{\"row\":\"" + std::string(name(generator_at(r))) + "\"}";
    }
  }
  out.push_back(std::move(broken));
  return out;
}

std::vector<PropertyResult> suite_oracle(const StructureConstants& f, std::size_t trials, Rng& rng) {
  Property dirac("oracle", "dirac_boost_vs_exp_ad", kTolOracle);
  Property pure("oracle", "pure_factor_oplus_vs_exp_ad", kTolOracle);
  Property unimodular("oracle", "exp_ad_unimodular", kTolOracle);
  Property one_param("oracle", "exp_ad_one_parameter_subgroup", kTolOracle);
  Property metric("oracle", "lorentz_metric_preservation", kTolForm);
  Property form("oracle", "xl_form_preservation", kTolForm);
  // Far from the identity entries reach ~1e2 and rounding alone gives
  // |M^T B M - B| ~ eps |M|^2, so the wide draws are judged relative to scale^2.
  Property wide_form("oracle", "form_preservation_wide_relative", kTolForm);

  const OmegaBranch branches[] = {OmegaBranch::Trigonometric, OmegaBranch::Hyperbolic, OmegaBranch::Null};
  for (std::size_t i = 0; i < trials; ++i) {
    const OmegaVector omega = random_omega(rng, branches[i % 3]);
    GroupParams w;
    w.xl.omega = omega;
    dirac.trial(
        [&] {
          const Mat15 e = exp_ad(sector(kGam, omega.lower()), 1.0, f);
          return diff(dirac_boost_mat5(omega), Mat5(e.bottomRightCorner<5, 5>()));
        },
        [&] { return elements({{"g", &w}}); });

    const GroupParams g = random_element(rng, SamplingDomain::wide());
    pure.trial(
        [&] {
          GroupParams rot, boost, db, tr;
          rot.xl.theta = g.xl.theta;
          boost.xl.u = g.xl.u;
          db.xl.omega = g.xl.omega;
          tr.alpha = g.alpha;
          tr.a = g.a;
          AlgebraElement t = sector(kP, g.a);
          t[kGs] = g.alpha;
          return std::max({diff(oplus(rot), exp_ad(sector(kJ, g.xl.theta.vector()), 1.0, f)),
                           diff(oplus(boost), exp_ad(sector(kK, g.xl.u.rapidity()), 1.0, f)),
                           diff(oplus(db), exp_ad(sector(kGam, g.xl.omega.lower()), 1.0, f)),
                           diff(oplus(tr), exp_ad(t, 1.0, f))});
        },
        [&] { return elements({{"g", &g}}); });

    const int a = static_cast<int>(i % kNumGenerators);
    const double tau = rng.uniform(-2.0, 2.0);
    const double sigma = rng.uniform(-2.0, 2.0);
    const Witness generator_witness = [&] {
      return "{\"generator\":\"" + std::string(name(generator_at(a))) + "\",\"tau\":" + io::format_number(tau) +
             ",\"sigma\":" + io::format_number(sigma) + "}";
    };
    unimodular.trial([&] { return std::abs(exp_ad(basis(generator_at(a)), tau, f).determinant() - 1.0); },
                     generator_witness);
    one_param.trial(
        [&] {
          const AlgebraElement x = basis(generator_at(a));
          return diff(exp_ad(x, tau, f) * exp_ad(x, sigma, f), exp_ad(x, tau + sigma, f));
        },
        generator_witness);

    AlgebraElement x;
    for (int r = 0; r < kNumGenerators; ++r) x[r] = rng.uniform(-0.5, 0.5);
    const double s = rng.uniform(-1.0, 1.0);
    const double t = rng.uniform(-1.0, 1.0);
    one_param.trial([&] { return diff(exp_ad(x, s, f) * exp_ad(x, t, f), exp_ad(x, s + t, f)); },
                    [&] {
                      std::string out = "{\"x\":[";
                      for (int r = 0; r < kNumGenerators; ++r) out += (r ? "," : "") + io::format_number(x[r]);
                      return out + "],\"s\":" + io::format_number(s) + ",\"t\":" + io::format_number(t) + "}";
                    });

    const GroupParams c = random_element(rng);
    metric.trial(
        [&] {
          return std::max({metric_residual(rotation_matrix(c.xl.theta)), metric_residual(boost_matrix(c.xl.u)),
                           metric_residual(lorentz_matrix(c.xl.u, c.xl.theta))});
        },
        [&] { return elements({{"g", &c}}); });
    form.trial(
        [&] {
          return std::max({form_residual(dirac_boost_mat5(c.xl.omega)), form_residual(xl_matrix(c.xl)),
                           form_residual(dirac_boost_mat5(omega))});
        },
        [&] { return elements({{"g", &c}, {"omega", &w}}); });
    wide_form.trial(
        [&] {
          const Mat4 l = lorentz_matrix(g.xl.u, g.xl.theta);
          const Mat5 x = xl_matrix(g.xl);
          const double ls = std::max(1.0, l.cwiseAbs().maxCoeff());
          const double xs = std::max(1.0, x.cwiseAbs().maxCoeff());
          return std::max(metric_residual(l) / (ls * ls), form_residual(x) / (xs * xs));
        },
        [&] { return elements({{"g", &g}}); });
  }

  std::vector<PropertyResult> out;
  for (Property* p : {&dirac, &pure, &unimodular, &one_param, &metric, &form, &wide_form}) out.push_back(std::move(*p).result());
  return out;
}

// Rotation vectors at, just below and just past the angle pi.
Vec3 rotation_near_pi(Rng& rng) {
  static constexpr double kOffsets[] = {0.0, 1e-12, 1e-8, 1e-4, -1e-12, -1e-6};
  Vec3 axis = rng.ball(1.0);
  if (axis.norm() < 1e-3) axis = Vec3::UnitZ();
  axis.normalize();
  return (std::numbers::pi - kOffsets[rng.index(6)]) * axis;
}

// Omega whose (G, G) entry sits at or near the trigonometric branch point -1.
OmegaVector omega_near_branch(Rng& rng) {
  static constexpr double kOffsets[] = {0.0, 1e-12, 1e-9, 1e-6, 1e-3};
  Vec3 dir = rng.ball(1.0);
  if (dir.norm() < 1e-3) dir = Vec3::UnitX();
  dir.normalize();
  const double b = rng.index(2) == 0 ? 0.0 : rng.uniform(0.0, 1.0);
  Vec4 n;
  n << std::cosh(b), std::sinh(b) * dir;
  return OmegaVector((std::numbers::pi - kOffsets[rng.index(5)]) * n);
}

std::vector<PropertyResult> suite_group_axioms(std::size_t trials, Rng& rng) {
  Property identity("group-axioms", "identity", kTolGroup);
  Property assoc("group-axioms", "associativity", kTolGroup);
  Property inv("group-axioms", "two_sided_inverse", kTolGroup);
  Property inv_affine("group-axioms", "inverse_closed_vs_affine", kTolGroup);
  Property comp_affine("group-axioms", "compose_closed_vs_affine", kTolGroup);
  Property lorentz_rt("group-axioms", "lorentz_roundtrip", kTolGroup);
  Property xl_rt("group-axioms", "xl_roundtrip", kTolGroup);
  Property affine_rt("group-axioms", "affine_roundtrip", kTolGroup);

  const GroupParams e = GroupParams::identity();
  const Mat6 one = Mat6::Identity();
  for (std::size_t i = 0; i < trials; ++i) {
    const GroupParams g1 = random_element(rng);
    const GroupParams g2 = random_element(rng);
    const GroupParams g3 = random_element(rng);
    const Mat6 m1 = to_affine(g1).matrix();

    identity.trial(
        [&] {
          return std::max(diff(to_affine(compose(e, g1)).matrix(), m1), diff(to_affine(compose(g1, e)).matrix(), m1));
        },
        [&] { return elements({{"g", &g1}}); });
    assoc.trial(
        [&] {
          const Mat6 left = to_affine(compose(compose(g3, g2), g1)).matrix();
          const Mat6 right = to_affine(compose(g3, compose(g2, g1))).matrix();
          return diff(left, right);
        },
        [&] { return elements({{"g3", &g3}, {"g2", &g2}, {"g1", &g1}}); });
    inv.trial(
        [&] {
          const GroupParams gi = inverse(g1);
          return std::max(diff(to_affine(compose(gi, g1)).matrix(), one), diff(to_affine(compose(g1, gi)).matrix(), one));
        },
        [&] { return elements({{"g", &g1}}); });
    inv_affine.trial(
        [&] {
          const AffineRep oracle = to_affine(g1).inverse();
          const GroupParams gi = inverse(g1);
          return std::max(diff(inverse_translation(g1), oracle.t), diff(to_affine(gi).matrix(), oracle.matrix()));
        },
        [&] { return elements({{"g", &g1}}); });
    comp_affine.trial(
        [&] {
          const AffineRep oracle = to_affine(g2) * to_affine(g1);
          return std::max({diff(compose_translation(g2, g1), oracle.t),
                           diff(to_affine(compose(g2, g1)).matrix(), oracle.matrix()),
                           diff(oracle.matrix(), to_affine(g2).matrix() * m1)});
        },
        [&] { return elements({{"g2", &g2}, {"g1", &g1}}); });

    GroupParams w = random_element(rng, SamplingDomain::wide());
    switch (i % 4) {
      case 1:
        w.xl.theta = RotationVector(rotation_near_pi(rng));
        break;
      case 2:
        w.xl.omega = omega_near_branch(rng);
        break;
      case 3:
        w.xl.omega = random_omega(rng, OmegaBranch::Null);
        w.xl.theta = RotationVector(rotation_near_pi(rng));
        break;
      default:
        break;
    }
    lorentz_rt.trial(
        [&] {
          const Mat4 m = lorentz_matrix(w.xl.u, w.xl.theta);
          const LorentzParams p = lorentz_decompose(m);
          return diff(lorentz_matrix(p.u, p.theta), m);
        },
        [&] { return elements({{"g", &w}}); });
    xl_rt.trial(
        [&] {
          const Mat5 m = xl_matrix(w.xl);
          return diff(xl_matrix(xl_decompose(m)), m);
        },
        [&] { return elements({{"g", &w}}); });
    affine_rt.trial(
        [&] {
          const AffineRep r = to_affine(w);
          return diff(to_affine(from_affine(r)).matrix(), r.matrix());
        },
        [&] { return elements({{"g", &w}}); });
  }

  std::vector<PropertyResult> out;
  for (Property* p : {&identity, &assoc, &inv, &inv_affine, &comp_affine, &lorentz_rt, &xl_rt, &affine_rt})
    out.push_back(std::move(*p).result());
  return out;
}

std::vector<PropertyResult> suite_oplus(std::size_t trials, Rng& rng) {
  Property identity("oplus-hom", "oplus_identity", kTolForm);
  Property hom("oplus-hom", "oplus_homomorphism", kTolGroup);
  Property block("oplus-hom", "oplus_translation_block_is_xl_matrix", kTolOracle);
  Property casimir("oplus-hom", "oplus_preserves_casimir_mu_form", kTolOracle);

  identity.observe(diff(oplus(GroupParams::identity()), Mat15::Identity()), [] { return std::string("{}"); });

  const Mat5 k_mu = casimir_mu().matrix().bottomRightCorner<5, 5>();
  for (std::size_t i = 0; i < trials; ++i) {
    const GroupParams g1 = random_element(rng);
    const GroupParams g2 = random_element(rng);
    hom.trial([&] { return diff(oplus(compose(g2, g1)), oplus(g2) * oplus(g1)); },
              [&] { return elements({{"g2", &g2}, {"g1", &g1}}); });

    GroupParams xl = random_element(rng, SamplingDomain::wide());
    xl.alpha = 0.0;
    xl.a = Vec4::Zero();
    block.trial([&] { return diff(Mat5(oplus(xl).bottomRightCorner<5, 5>()), xl_matrix(xl.xl)); },
                [&] { return elements({{"g", &xl}}); });
    casimir.trial(
        [&] {
          const Mat5 o = oplus(xl).bottomRightCorner<5, 5>();
          return diff(Mat5(o.transpose() * k_mu * o), k_mu);
        },
        [&] { return elements({{"g", &xl}}); });
  }

  std::vector<PropertyResult> out;
  for (Property* p : {&identity, &hom, &block, &casimir}) out.push_back(std::move(*p).result());
  return out;
}

std::vector<PropertyResult> suite_theta(std::size_t trials, Rng& rng) {
  Property identity("theta", "theta_identity", kTolTheta);
  Property listed("theta", "theta_closed_entries", kTolTheta);
  Property unlisted("theta", "theta_unlisted_entries_vanish", kTolTheta);

  const GroupParams e = GroupParams::identity();
  identity.trial([&] { return diff(theta_numeric(e), Mat15::Identity()); }, [&] { return elements({{"g", &e}}); });

  for (std::size_t i = 0; i < trials; ++i) {
    const GroupParams g = random_element(rng);
    Mat15 numeric;
    bool ok = true;
    try {
      numeric = theta_numeric(g);
    } catch (const std::exception&) {
      ok = false;
    }
    const ThetaClosed closed = theta_closed(g);
    auto masked = [&](bool want_listed) {
      if (!ok) throw std::runtime_error("theta_numeric failed");
      double worst = 0.0;
      for (int r = 0; r < kNumGenerators; ++r)
        for (int s = 0; s < kNumGenerators; ++s)
          if (closed.known(r, s) && closed.listed(r, s) == want_listed)
            worst = std::max(worst, std::abs(closed.value(r, s) - numeric(r, s)));
      return worst;
    };
    listed.trial([&] { return masked(true); }, [&] { return elements({{"g", &g}}); });
    unlisted.trial([&] { return masked(false); }, [&] { return elements({{"g", &g}}); });
  }

  std::vector<PropertyResult> out;
  for (Property* p : {&identity, &listed, &unlisted}) out.push_back(std::move(*p).result());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jacobi", "casimir", "oracle", "group-axioms", "oplus-hom", "theta"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

CheckReport run_check(const CheckOptions& options) {
  if (!is_suite(options.suite)) throw std::invalid_argument("unknown suite \"" + options.suite + "\"");
  const StructureConstants& f = options.constants ? *options.constants : StructureConstants::extended_poincare();

  CheckReport report;
  report.suite = options.suite;
  report.trials = options.trials;
  report.seed = options.seed;

  const auto& names = suite_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (options.suite != "all" && options.suite != names[k]) continue;
    Rng rng(suite_seed(options.seed, k));
    std::vector<PropertyResult> part;
    switch (k) {
      case 0: part = suite_jacobi(f); break;
      case 1: part = suite_casimir(f); break;
      case 2: part = suite_oracle(f, options.trials, rng); break;
      case 3: part = suite_group_axioms(options.trials, rng); break;
      case 4: part = suite_oplus(options.trials, rng); break;
      default: part = suite_theta(options.trials, rng); break;
    }
    for (auto& p : part) report.properties.push_back(std::move(p));
  }
  return report;
}

bool CheckReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

double CheckReport::max_residual() const {
  double worst = 0.0;
  for (const auto& p : properties)
    if (!p.expect_nonzero) worst = std::max(worst, p.max_residual);
  return worst;
}

const PropertyResult* CheckReport::first_failure() const {
  for (const auto& p : properties)
    if (!p.pass) return &p;
  return nullptr;
}

std::string CheckReport::to_json() const {
  std::string out = "{\n";
  out += "  \"suite\": \"" + suite + "\",\n";
  out += "  \"trials\": " + std::to_string(trials) + ",\n";
  out += "  \"seed\": " + std::to_string(seed) + ",\n";
  out += std::string("  \"pass\": ") + (pass() ? "true" : "false") + ",\n";
  const double worst = max_residual();
  out += "  \"max_residual\": " + (std::isinf(worst) ? std::string("\"inf\"") : io::format_number(worst)) + ",\n";
  out += "  \"properties\": [";
  for (std::size_t i = 0; i < properties.size(); ++i) {
    const auto& p = properties[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"suite\": \"" + p.suite + "\", \"name\": \"" + p.name + "\", \"trials\": " + std::to_string(p.trials) +
           ", \"max_residual\": " + (std::isinf(p.max_residual) ? std::string("\"inf\"") : io::format_number(p.max_residual)) +
           ", \"tolerance\": " + io::format_number(p.tolerance);
    if (p.expect_nonzero) out += ", \"expect\": \"nonzero\"";
    out += std::string(", \"pass\": ") + (p.pass ? "true" : "false");
    out += ", \"counterexample\": " + (p.counterexample.empty() ? std::string("null") : p.counterexample) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace xpoincare
