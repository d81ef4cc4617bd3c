#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace smncubic {

/// Monic cubic x^3 + a x^2 + b x + c — the sole input object of the library.
/// Coefficients must be finite; the constructor rejects NaN/infinity.
struct MonicCubic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  MonicCubic(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
      throw std::invalid_argument("MonicCubic: coefficients must be finite");
  }
};

/// Discriminant data. delta3 is the discriminant of the cubic itself;
/// viewed as a quadratic in the free term c, that quadratic's discriminant
/// is delta2 = 16 q^3 with q = a^2 - 3b.
struct DiscriminantInfo {
  double delta3;
  double delta2;
  double q;
};

/// Stationary points mu2 <= mu1 (roots of p' = 3x^2 + 2ax + b), the
/// inflection abscissa phi = -a/3, and the incircle radius
/// r = (1/3) sqrt(a^2 - 3b).  Exists only when b <= a^2/3.
struct CriticalData {
  double mu1;
  double mu2;
  double phi;
  double r;
};

/// Discriminant-zero values of the free term for fixed (a, b):
/// c1/c2 are the roots of delta3(c) = 0, c0 the balanced value between them.
struct Envelope {
  double c0;
  double c1;
  double c2;
};

/// Roots of the balanced cubic (c = c0), ordered nu3 <= nu2 <= nu1 and
/// symmetric about phi.
struct BalancedRoots {
  double nu1;
  double nu2;
  double nu3;
};

/// Double/simple root pairs of the two extreme cubics: (mu1, xi1) for c = c1,
/// (mu2, xi2) for c = c2, with xi_i = -a - 2 mu_i.
struct ExtremeRoots {
  double mu1;
  double xi1;
  double mu2;
  double xi2;
};

// Radicands q = a^2 - 3b within this relative band below zero are clamped to
// zero (near-boundary b ~ a^2/3 is treated as the boundary); anything more
// negative is outside the domain of the sqrt-based constructions.
inline constexpr double kSqrtClampBand = 1e-14;

/// sqrt(a^2 - 3b), shared by every construction that needs it.
/// Throws std::domain_error when the radicand is negative beyond the clamp band.
double critical_radical(double a, double b);

/// Horner evaluation of p(x).
inline double evaluate(const MonicCubic& p, double x) {
  return ((x + p.a) * x + p.b) * x + p.c;
}

/// p'(x) = 3x^2 + 2ax + b.
inline double evaluate_derivative(const MonicCubic& p, double x) {
  return (3.0 * x + 2.0 * p.a) * x + p.b;
}

/// Closed-form real root of the b = a^2/3 cubic, by completing the cube.
/// Equals -a/3 when c = a^3/27 (the triple root).
inline double inflected_root(double a, double c) {
  return -a / 3.0 + std::cbrt(a * a * a / 27.0 - c);
}

DiscriminantInfo discriminant(const MonicCubic& p);

/// Absent when b > a^2/3 (no stationary points); mu1 = mu2 = phi on the boundary.
std::optional<CriticalData> critical_points(const MonicCubic& p);

/// Requires b <= a^2/3; throws std::domain_error otherwise.
Envelope envelope(double a, double b);

/// Requires b <= a^2/3; throws std::domain_error otherwise.
BalancedRoots balanced_roots(double a, double b);

/// Requires b <= a^2/3; throws std::domain_error otherwise.
ExtremeRoots extreme_roots(double a, double b);

}  // namespace smncubic
