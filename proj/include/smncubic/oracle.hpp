#pragma once

#include <optional>
#include <vector>

#include "smncubic/cubic.hpp"
#include "smncubic/refine.hpp"

namespace smncubic {

struct OracleRoot {
  double value;
  int multiplicity;
};

struct ComplexPair {
  double re;
  double im;  // > 0
};

/// Ground truth produced without any of the envelope/mu/nu/xi machinery.
struct OracleResult {
  std::vector<OracleRoot> real_roots;  // ascending
  std::optional<ComplexPair> complex_pair;

  int total_multiplicity() const {
    int n = 0;
    for (const auto& r : real_roots) n += r.multiplicity;
    return n;
  }
};

// Number of uniform scan nodes; enough because a cubic has at most three real
// roots and the stationary points are added as extra nodes.
inline constexpr int kOracleGridPoints = 10000;
// |p(stationary point)| below this (times max(1,|a|,|b|,|c|)) is a tangency.
inline constexpr double kOracleTangencyTol = 1e-9;

/// Sign-scan on a uniform grid over [-B-1, B+1] (B = Cauchy bound
/// 1 + max|coefficient|) followed by bisection on each sign change; double and
/// triple roots recovered from tangencies at the stationary points.
OracleResult oracle_roots(const MonicCubic& p, int grid_points = kOracleGridPoints);

/// Classical closed forms: trigonometric method for three real roots,
/// Cardano radicals otherwise, explicit repeated-root handling near the
/// discriminant-zero locus.
OracleResult cardano_roots(const MonicCubic& p);

/// Three-way comparison of solve / oracle_roots / cardano_roots.
struct CrossCheck {
  RootReport report;
  OracleResult oracle;
  OracleResult cardano;
  bool count_agreement = false;         // real-root multiplicity totals all agree
  bool multiplicity_agreement = false;  // per-root multiplicity patterns agree
  double max_discrepancy = 0.0;         // max aligned root difference; +inf on count mismatch
};

CrossCheck cross_check(const MonicCubic& p);

}  // namespace smncubic
