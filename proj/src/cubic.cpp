#include "smncubic/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace smncubic {

double critical_radical(double a, double b) {
  const double q = a * a - 3.0 * b;
  if (q < -kSqrtClampBand * std::max(1.0, a * a))
    throw std::domain_error("critical_radical: b > a^2/3, radicand a^2 - 3b is negative");
  return std::sqrt(std::max(q, 0.0));
}

DiscriminantInfo discriminant(const MonicCubic& p) {
  const double a = p.a, b = p.b, c = p.c;
  DiscriminantInfo d;
  d.q = a * a - 3.0 * b;
  d.delta2 = 16.0 * d.q * d.q * d.q;
  d.delta3 = -27.0 * c * c + (18.0 * a * b - 4.0 * a * a * a) * c + a * a * b * b - 4.0 * b * b * b;
  return d;
}

std::optional<CriticalData> critical_points(const MonicCubic& p) {
  const double q = p.a * p.a - 3.0 * p.b;
  if (q < -kSqrtClampBand * std::max(1.0, p.a * p.a)) return std::nullopt;
  const double r = std::sqrt(std::max(q, 0.0)) / 3.0;
  const double phi = -p.a / 3.0;
  return CriticalData{phi + r, phi - r, phi, r};
}

Envelope envelope(double a, double b) {
  const double s = critical_radical(a, b);
  const double c0 = -2.0 * a * a * a / 27.0 + a * b / 3.0;
  const double half_width = (2.0 / 27.0) * s * s * s;  // (2/27) (a^2-3b)^{3/2}
  return Envelope{c0, c0 + half_width, c0 - half_width};
}

BalancedRoots balanced_roots(double a, double b) {
  const double s = critical_radical(a, b);
  const double phi = -a / 3.0;
  const double half_spread = std::sqrt(3.0) / 3.0 * s;  // alpha / 2
  return BalancedRoots{phi + half_spread, phi, phi - half_spread};
}

ExtremeRoots extreme_roots(double a, double b) {
  const double r = critical_radical(a, b) / 3.0;
  const double phi = -a / 3.0;
  const double mu1 = phi + r;
  const double mu2 = phi - r;
  return ExtremeRoots{mu1, -a - 2.0 * mu1, mu2, -a - 2.0 * mu2};
}

}  // namespace smncubic
