#include "smncubic/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace smncubic {

SmnTriangle smn_triangle(double x1, double x2, double x3) {
  if (!(x3 <= x2 && x2 <= x1))
    throw std::invalid_argument("smn_triangle: roots must be ordered x3 <= x2 <= x1");
  if (x1 == x3)  // with the ordering above this means all three coincide
    throw std::domain_error("smn_triangle: degenerate, all roots equal");

  constexpr double inv_sqrt3 = std::numbers::inv_sqrt3;
  SmnTriangle t;
  t.P = {x1, (x2 - x3) * inv_sqrt3};
  t.Q = {x2, (x3 - x1) * inv_sqrt3};
  t.R = {x3, (x1 - x2) * inv_sqrt3};
  t.centroid = {(x1 + x2 + x3) / 3.0, 0.0};

  // a^2 - 3b of the monic cubic with these roots, in cancellation-free form.
  const double d12 = x1 - x2, d23 = x2 - x3, d31 = x3 - x1;
  const double sym = 0.5 * (d12 * d12 + d23 * d23 + d31 * d31);
  const double s = std::sqrt(sym);
  t.r = s / 3.0;
  t.alpha = std::sqrt(12.0) / 3.0 * s;
  t.theta = std::asin(std::clamp((x2 - t.centroid.x) / (2.0 * t.r), -1.0, 1.0));
  return t;
}

double rotation_angle(const MonicCubic& p) {
  const double q = p.a * p.a - 3.0 * p.b;
  if (!(q > 0.0))
    throw std::domain_error("rotation_angle: triangle requires b < a^2/3");
  const double r = std::sqrt(q) / 3.0;
  const Envelope env = envelope(p.a, p.b);
  const double snap =
      kEnvelopeSnapTol * std::max({1.0, std::fabs(env.c1), std::fabs(env.c2)});
  if (p.c < env.c2 - snap || p.c > env.c1 + snap)
    throw std::domain_error("rotation_angle: c outside [c2, c1], triangle does not exist");

  // Middle root from the circumcircle parametrisation x = phi + 2r cos(psi):
  // cos(3 psi) = (c0 - c) / (2 r^3), middle branch psi - 2pi/3.
  const double phi = -p.a / 3.0;
  const double cos3 = std::clamp((env.c0 - p.c) / (2.0 * r * r * r), -1.0, 1.0);
  const double psi = std::acos(cos3) / 3.0 - 2.0 * std::numbers::pi / 3.0;
  const double x2 = phi + 2.0 * r * std::cos(psi);
  return std::asin(std::clamp((x2 - phi) / (2.0 * r), -1.0, 1.0));
}

}  // namespace smncubic
