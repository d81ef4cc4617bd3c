#pragma once

#include <optional>
#include <vector>

#include "smncubic/classify.hpp"
#include "smncubic/cubic.hpp"

namespace smncubic {

struct RefinedRoot {
  double value;
  int multiplicity;  // 1, 2 or 3
  double residual;   // |p(value)|
};

/// Residuals of the three elementary symmetric functions against -a, b, -c.
/// For one-real-root cases the conjugate pair enters through the deflated
/// quadratic's sum/product; the pair itself is never computed.
struct VietaResiduals {
  double e1;
  double e2;
  double e3;
};

struct RootReport {
  Classification classification;
  IsolationSet isolation;
  std::vector<RefinedRoot> roots;  // ascending
  bool complex_pair_present = false;
  VietaResiduals vieta{0.0, 0.0, 0.0};
  std::optional<double> theta;  // rotation angle, present when the triangle exists
};

// Default relative bracket-width tolerance and residual target (double precision).
inline constexpr double kDefaultRefineTol = 1e-14;
inline constexpr double kResidualTarget = 1e-10;
// An endpoint whose residual is below this (times the residual scale) is
// accepted as a tangency bracket.
inline constexpr double kTangencyTol = 1e-9;

/// Safeguarded bisection on [lo, hi].  Requires a sign change, or one endpoint
/// within tolerance of a root (tangency); throws std::domain_error otherwise.
/// Stops at |p(x)| inside evaluation noise or bracket width <= tol*max(1,|x|).
double bisect(const MonicCubic& p, double lo, double hi, double tol = kDefaultRefineTol);

/// Newton iteration clipped to [lo, hi], falling back to a bisection step when
/// the Newton step leaves the bracket or |p'| < 1e-14*scale.  Same bracket
/// precondition and termination contract as bisect().
double newton_refine(const MonicCubic& p, double seed, double lo, double hi,
                     double tol = kDefaultRefineTol);

/// Completed-cube closed form: -a/3 + cbrt(a^3/27 - c), real branch.
/// Requires b = a^2/3 within the classifier band; throws std::domain_error otherwise.
double closed_form_b_boundary(const MonicCubic& p, double tol = kDefaultClassifyTol);

/// Full pipeline: classify -> isolation intervals -> refine each interval
/// (closed forms on boundaries, double/triple roots from the mu/phi formulas),
/// assembled with residuals and Viete checks.  tol is the classification
/// tolerance; refinement runs at kDefaultRefineTol.
RootReport solve(const MonicCubic& p, double tol = kDefaultClassifyTol);

}  // namespace smncubic
