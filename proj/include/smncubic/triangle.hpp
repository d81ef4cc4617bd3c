#pragma once

#include "smncubic/cubic.hpp"

namespace smncubic {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Equilateral triangle whose vertices project onto the real roots
/// x3 <= x2 <= x1 of a cubic: P = (x1, (x2-x3)/sqrt3), Q = (x2, (x3-x1)/sqrt3),
/// R = (x3, (x1-x2)/sqrt3).  Its incircle (centre = centroid, radius r)
/// projects onto the interval between the stationary points; theta is the
/// counterclockwise rotation away from the balanced configuration (side PR
/// horizontal), in [-pi/6, pi/6].
struct SmnTriangle {
  Point P;
  Point Q;
  Point R;
  Point centroid;
  double r = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
};

// Inputs to rotation_angle (and the renderer) may carry a free term rounded to
// print precision, slightly past the envelope; values within this relative band
// of [c2, c1] are snapped onto it.
inline constexpr double kEnvelopeSnapTol = 1e-3;

/// Build the triangle from a sorted root triple x3 <= x2 <= x1.
/// Throws std::invalid_argument for unsorted input and std::domain_error
/// when all three values coincide (triangle undefined).
SmnTriangle smn_triangle(double x1, double x2, double x3);

/// Rotation angle of the triangle of p, recovered from the middle root via
/// x2 = phi + 2r sin(theta).  Requires b < a^2/3 and c within [c2, c1]
/// (up to kEnvelopeSnapTol); throws std::domain_error otherwise.
/// theta(c0) = 0, theta(c1) = +pi/6, theta(c2) = -pi/6, strictly increasing in c.
double rotation_angle(const MonicCubic& p);

}  // namespace smncubic
