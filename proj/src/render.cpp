#include "smncubic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "smncubic/refine.hpp"
#include "smncubic/triangle.hpp"

namespace smncubic {
namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Geometry {
  MonicCubic snapped;  // c clamped onto [c2, c1] when within the snap band
  Envelope env;
  CriticalData crit;
  BalancedRoots nu;
  double x_lo, x_hi;  // curve sampling range [nu3 - r, nu1 + r]
};

Geometry make_geometry(const MonicCubic& p) {
  const double q = p.a * p.a - 3.0 * p.b;
  if (!(q > 0.0)) throw std::domain_error("render: triangle requires b < a^2/3");
  const Envelope env = envelope(p.a, p.b);
  const double snap =
      kEnvelopeSnapTol * std::max({1.0, std::fabs(env.c1), std::fabs(env.c2)});
  if (p.c < env.c2 - snap || p.c > env.c1 + snap)
    throw std::domain_error("render: c outside [c2, c1], triangle does not exist");
  Geometry g{MonicCubic(p.a, p.b, std::clamp(p.c, env.c2, env.c1)), env,
             *critical_points(p), balanced_roots(p.a, p.b), 0.0, 0.0};
  g.x_lo = g.nu.nu3 - g.crit.r;
  g.x_hi = g.nu.nu1 + g.crit.r;
  return g;
}

// x3 <= x2 <= x1 from a solve report (double roots expanded)
void sorted_roots(const RootReport& rep, double out[3]) {
  int n = 0;
  for (const auto& r : rep.roots)
    for (int i = 0; i < r.multiplicity && n < 3; ++i) out[n++] = r.value;
  std::sort(out, out + 3);
}

}  // namespace

double RenderFrame::px_x(double wx) const {
  return (wx - min_x) / (max_x - min_x) * kSvgWidth;
}

double RenderFrame::px_y(double wy) const {
  return kSvgHeight - (wy - min_y) / (max_y - min_y) * kSvgHeight;
}

RenderFrame render_frame(const MonicCubic& p, const RenderOptions& opt) {
  const Geometry g = make_geometry(p);
  double min_y = 0.0, max_y = 0.0;
  for (int i = 0; i < kCurveSamples; ++i) {
    const double x = g.x_lo + (g.x_hi - g.x_lo) * i / (kCurveSamples - 1);
    const double y = evaluate(g.snapped, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  // triangle vertices (any rotation) stay inside the circumcircle of radius 2r
  min_y = std::min(min_y, -2.0 * g.crit.r);
  max_y = std::max(max_y, 2.0 * g.crit.r);

  const double pad_x = kSvgPadding * (g.x_hi - g.x_lo);
  const double pad_y = kSvgPadding * (max_y - min_y);
  (void)opt;
  return RenderFrame{g.x_lo - pad_x, g.x_hi + pad_x, min_y - pad_y, max_y + pad_y};
}

std::string render_svg(const MonicCubic& p, const RenderOptions& opt) {
  const Geometry g = make_geometry(p);
  const RenderFrame f = render_frame(p, opt);

  std::string svg;
  svg.reserve(32 * 1024);
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  svg += "<rect width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";

  // dashed verticals at mu2, phi, mu1
  for (double wx : {g.crit.mu2, g.crit.phi, g.crit.mu1}) {
    const std::string sx = px(f.px_x(wx));
    svg += "<line x1=\"" + sx + "\" y1=\"0\" x2=\"" + sx +
           "\" y2=\"600\" stroke=\"#b0b0b0\" stroke-width=\"0.8\" stroke-dasharray=\"5 4\"/>\n";
  }

  // abscissa
  const std::string y0 = px(f.px_y(0.0));
  svg += "<line x1=\"0\" y1=\"" + y0 + "\" x2=\"800\" y2=\"" + y0 +
         "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";

  // the cubic itself
  svg += "<polyline fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"1.6\" points=\"";
  for (int i = 0; i < kCurveSamples; ++i) {
    const double x = g.x_lo + (g.x_hi - g.x_lo) * i / (kCurveSamples - 1);
    const double y = evaluate(g.snapped, x);
    if (i) svg += ' ';
    svg += px(f.px_x(x)) + "," + px(f.px_y(y));
  }
  svg += "\"/>\n";

  // incircle: centre (phi, 0), radius r (an ellipse in pixel space because
  // the two axes are scaled independently)
  const double rx = g.crit.r / (f.max_x - f.min_x) * kSvgWidth;
  const double ry = g.crit.r / (f.max_y - f.min_y) * kSvgHeight;
  svg += "<ellipse cx=\"" + px(f.px_x(g.crit.phi)) + "\" cy=\"" + y0 + "\" rx=\"" + px(rx) +
         "\" ry=\"" + px(ry) + "\" fill=\"none\" stroke=\"#c08a8a\" stroke-width=\"1\"/>\n";

  auto triangle_polygon = [&](const MonicCubic& pc, const char* stroke, const char* width) {
    const RootReport rep = solve(pc, opt.tol);
    double v[3];
    sorted_roots(rep, v);
    const SmnTriangle tri = smn_triangle(v[2], v[1], v[0]);
    std::string poly = "<polygon fill=\"none\" stroke=\"";
    poly += stroke;
    poly += "\" stroke-width=\"";
    poly += width;
    poly += "\" points=\"";
    poly += px(f.px_x(tri.P.x)) + "," + px(f.px_y(tri.P.y)) + " ";
    poly += px(f.px_x(tri.Q.x)) + "," + px(f.px_y(tri.Q.y)) + " ";
    poly += px(f.px_x(tri.R.x)) + "," + px(f.px_y(tri.R.y));
    poly += "\"/>\n";
    return poly;
  };

  // rotation family first (light), the input cubic's triangle on top
  if (opt.sweep > 0) {
    const int n = opt.sweep;
    for (int i = 0; i < n; ++i) {
      const double ci =
          (n == 1) ? g.env.c2 : g.env.c2 + (g.env.c1 - g.env.c2) * i / (n - 1);
      svg += triangle_polygon(MonicCubic(p.a, p.b, ci), "#e0a8a8", "0.9");
    }
  }
  svg += triangle_polygon(g.snapped, "#d62728", "1.4");

  // root projection markers on the abscissa
  {
    const RootReport rep = solve(g.snapped, opt.tol);
    for (const auto& r : rep.roots)
      svg += "<circle cx=\"" + px(f.px_x(r.value)) + "\" cy=\"" + y0 +
             "\" r=\"3\" fill=\"#2a9d2a\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace smncubic
