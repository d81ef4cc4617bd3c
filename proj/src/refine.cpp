#include "smncubic/refine.hpp"

#include <algorithm>
#include <cmath>

#include "smncubic/triangle.hpp"

namespace smncubic {
namespace {

// Horner evaluation error is a handful of ulps of the largest term; residuals
// below this floor carry no sign information.
constexpr double kEvalNoise = 4e-16;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double coeff_scale(const MonicCubic& p) {
  return std::max({1.0, std::fabs(p.a), std::fabs(p.b), std::fabs(p.c)});
}

double residual_scale(const MonicCubic& p, double x) {
  const double ax = std::fabs(x);
  return coeff_scale(p) * std::max(1.0, ax * ax * ax);
}

// Accept a no-sign-change bracket only when an endpoint residual is inside the
// tangency tolerance; returns the better endpoint.
double tangent_endpoint(const MonicCubic& p, double lo, double hi, double flo, double fhi) {
  const double rel_lo = std::fabs(flo) / residual_scale(p, lo);
  const double rel_hi = std::fabs(fhi) / residual_scale(p, hi);
  if (rel_lo > kTangencyTol && rel_hi > kTangencyTol)
    throw std::domain_error("bracket error: no sign change and no endpoint near a root");
  return (rel_lo <= rel_hi) ? lo : hi;
}

}  // namespace

double bisect(const MonicCubic& p, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("bisect: lo > hi");
  if (!(tol > 0.0)) throw std::invalid_argument("bisect: tol must be > 0");
  double flo = evaluate(p, lo);
  double fhi = evaluate(p, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (sign_of(flo) == sign_of(fhi)) return tangent_endpoint(p, lo, hi, flo, fhi);

  double mid = lo + (hi - lo) * 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    mid = lo + (hi - lo) * 0.5;
    if ((hi - lo) <= tol * std::max(1.0, std::fabs(mid))) break;
    const double fm = evaluate(p, mid);
    if (fm == 0.0 || std::fabs(fm) <= kEvalNoise * residual_scale(p, mid)) return mid;
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return mid;
}

double newton_refine(const MonicCubic& p, double seed, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("newton_refine: lo > hi");
  if (!(tol > 0.0)) throw std::invalid_argument("newton_refine: tol must be > 0");
  double flo = evaluate(p, lo);
  double fhi = evaluate(p, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (sign_of(flo) == sign_of(fhi)) return tangent_endpoint(p, lo, hi, flo, fhi);

  double x = std::clamp(seed, lo, hi);
  for (int iter = 0; iter < 120; ++iter) {
    const double fx = evaluate(p, x);
    if (fx == 0.0 || std::fabs(fx) <= kEvalNoise * residual_scale(p, x)) return x;
    if (x > lo && x < hi) {
      if (sign_of(fx) == sign_of(flo)) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
        fhi = fx;
      }
    }
    if ((hi - lo) <= tol * std::max(1.0, std::fabs(x))) return lo + (hi - lo) * 0.5;

    const double dfx = evaluate_derivative(p, x);
    const double ax = std::fabs(x);
    const double dscale = std::max(1.0, 3.0 * ax * ax + 2.0 * std::fabs(p.a) * ax + std::fabs(p.b));
    double next;
    if (std::fabs(dfx) < 1e-14 * dscale) {
      next = lo + (hi - lo) * 0.5;  // derivative too flat for a Newton step
    } else {
      next = x - fx / dfx;
      if (!(next > lo && next < hi)) next = lo + (hi - lo) * 0.5;
    }
    if (std::fabs(next - x) <= 0.5 * tol * std::max(1.0, std::fabs(next))) return next;
    x = next;
  }
  return x;
}

double closed_form_b_boundary(const MonicCubic& p, double tol) {
  const double band = classify_band(p, tol);
  if (std::fabs(p.b - p.a * p.a / 3.0) > band)
    throw std::domain_error("closed_form_b_boundary: requires b = a^2/3");
  return inflected_root(p.a, p.c);
}

namespace {

RefinedRoot make_root(const MonicCubic& p, double x, int multiplicity) {
  return RefinedRoot{x, multiplicity, std::fabs(evaluate(p, x))};
}

void fill_vieta(const MonicCubic& p, RootReport& rep) {
  if (rep.complex_pair_present) {
    // conjugate pair through the deflated quadratic x^2 + beta x + gamma
    const double x1 = rep.roots.front().value;
    const double beta = p.a + x1;
    const double gamma = p.b + beta * x1;
    rep.vieta.e1 = std::fabs(x1 - beta + p.a);
    rep.vieta.e2 = std::fabs(x1 * (-beta) + gamma - p.b);
    rep.vieta.e3 = std::fabs(x1 * gamma + p.c);
    return;
  }
  double v[3];
  int n = 0;
  for (const auto& r : rep.roots)
    for (int i = 0; i < r.multiplicity; ++i) v[n++] = r.value;
  rep.vieta.e1 = std::fabs(v[0] + v[1] + v[2] + p.a);
  rep.vieta.e2 = std::fabs(v[0] * v[1] + v[0] * v[2] + v[1] * v[2] - p.b);
  rep.vieta.e3 = std::fabs(v[0] * v[1] * v[2] + p.c);
}

}  // namespace

RootReport solve(const MonicCubic& p, double tol) {
  RootReport rep;
  rep.classification = classify(p, tol);
  rep.isolation = isolation_intervals(p, rep.classification);
  const Classification& cls = rep.classification;

  switch (cls.kind) {
    case Case::TripleRoot: {
      rep.roots = {make_root(p, -p.a / 3.0, 3)};
      break;
    }
    case Case::OneRealInflected: {
      rep.roots = {make_root(p, inflected_root(p.a, p.c), 1)};
      rep.complex_pair_present = true;
      break;
    }
    case Case::ThreeRealLowerArc:
    case Case::ThreeRealUpperArc: {
      const CriticalData cd = *critical_points(p);
      const BalancedRoots nu = balanced_roots(p.a, p.b);
      const ExtremeRoots ex = extreme_roots(p.a, p.b);
      if (cls.flags.c_eq_c2 && cls.kind == Case::ThreeRealLowerArc) {
        rep.roots = {make_root(p, cd.mu2, 2), make_root(p, ex.xi2, 1)};
      } else if (cls.flags.c_eq_c1 && cls.kind == Case::ThreeRealUpperArc) {
        rep.roots = {make_root(p, ex.xi1, 1), make_root(p, cd.mu1, 2)};
      } else if (cls.flags.c_eq_c0) {
        // balanced: the closed-form roots are already exact to rounding
        rep.roots = {make_root(p, nu.nu3, 1), make_root(p, nu.nu2, 1), make_root(p, nu.nu1, 1)};
      } else {
        for (const auto& iv : rep.isolation.intervals) {
          const double seed = iv.lo + (iv.hi - iv.lo) * 0.5;
          rep.roots.push_back(make_root(p, newton_refine(p, seed, iv.lo, iv.hi), 1));
        }
      }
      rep.theta = rotation_angle(p);
      break;
    }
    case Case::OneRealBelowEnvelope:
    case Case::OneRealAboveEnvelope:
    case Case::OneRealNoCritical: {
      const IsolationInterval& iv = rep.isolation.intervals.front();
      double x;
      if (iv.lo == iv.hi)
        x = iv.lo;  // degenerate point interval (e.g. c = ab in subcase II)
      else
        x = newton_refine(p, iv.lo + (iv.hi - iv.lo) * 0.5, iv.lo, iv.hi);
      rep.roots = {make_root(p, x, 1)};
      rep.complex_pair_present = true;
      break;
    }
  }

  fill_vieta(p, rep);
  return rep;
}

}  // namespace smncubic
