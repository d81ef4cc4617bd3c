#pragma once

#include <string>

#include "smncubic/classify.hpp"
#include "smncubic/cubic.hpp"

namespace smncubic {

// Fixed output geometry: byte-determinism for golden-file comparisons.
inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 600;
inline constexpr double kSvgPadding = 0.05;  // fraction of the world bbox, each side
inline constexpr int kCurveSamples = 512;

struct RenderOptions {
  int sweep = 0;  // overlay this many triangles for c linearly spaced in [c2, c1]
  double tol = kDefaultClassifyTol;
};

/// World-to-pixel mapping used by the renderer (exposed so tests can check
/// vertex coordinates against smn_triangle output at the printed precision).
struct RenderFrame {
  double min_x, max_x;  // padded world bbox
  double min_y, max_y;
  double px_x(double wx) const;
  double px_y(double wy) const;  // y axis flipped
};

/// The frame render_svg would use for this cubic (after envelope snapping).
RenderFrame render_frame(const MonicCubic& p, const RenderOptions& opt = {});

/// Static SVG of the cubic, its roots and the triangle geometry: curve sampled
/// over [nu3 - r, nu1 + r], abscissa, triangle PQR, incircle, root projection
/// markers and dashed verticals at mu2/phi/mu1.  Deterministic byte-for-byte.
/// Throws std::domain_error when the triangle does not exist (b >= a^2/3 or
/// c outside [c2, c1] beyond the envelope snap band).
std::string render_svg(const MonicCubic& p, const RenderOptions& opt = {});

}  // namespace smncubic
