#pragma once

// Property suites behind `xpoincare check`. Every suite is a pure function of
// (trials, seed, constants); reports serialize deterministically.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xpoincare/algebra.hpp"

namespace xpoincare {

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  /// The property asserts a nonzero residual (e.g. a Casimir that must not
  /// commute with some generators).
  bool expect_nonzero = false;
  bool pass = true;
  /// JSON text describing the worst failing input; empty when passing.
  std::string counterexample;
};

struct CheckReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool pass() const;
  double max_residual() const;
  const PropertyResult* first_failure() const;
  std::string to_json() const;
};

struct CheckOptions {
  std::string suite = "all";
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  const StructureConstants* constants = nullptr;  // defaults to the extended Poincare table
};

/// jacobi, casimir, oracle, group-axioms, oplus-hom, theta (in that order).
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite name.
CheckReport run_check(const CheckOptions& options);

}  // namespace xpoincare
