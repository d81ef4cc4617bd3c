#include "smncubic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace smncubic {
namespace {

// The oracle keeps its own evaluation/bisection path so that agreement with
// the classifier/refiner is evidence, not tautology.
inline double horner(const MonicCubic& p, double x) {
  return ((x + p.a) * x + p.b) * x + p.c;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double oracle_bisect(const MonicCubic& p, double lo, double hi, double flo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) * 0.5;
    if ((hi - lo) <= 1e-13 * std::max(1.0, std::fabs(mid))) return mid;
    const double fm = horner(p, mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) * 0.5;
}

void attach_complex_pair(const MonicCubic& p, OracleResult& res) {
  if (res.total_multiplicity() != 1) return;
  const double x1 = res.real_roots.front().value;
  const double beta = p.a + x1;                // deflated quadratic x^2 + beta x + gamma
  const double gamma = p.b + beta * x1;
  const double im2 = gamma - 0.25 * beta * beta;
  res.complex_pair = ComplexPair{-0.5 * beta, std::sqrt(std::max(im2, 0.0))};
}

}  // namespace

OracleResult oracle_roots(const MonicCubic& p, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("oracle_roots: grid too small");
  OracleResult res;
  const double scale = std::max({1.0, std::fabs(p.a), std::fabs(p.b), std::fabs(p.c)});
  const double tang = kOracleTangencyTol * scale;

  // Cauchy bound: every root satisfies |x| < 1 + max|coefficient|.
  const double bound = 1.0 + std::max({std::fabs(p.a), std::fabs(p.b), std::fabs(p.c)});
  const double lo_end = -bound - 1.0;
  const double hi_end = bound + 1.0;

  // Stationary points from the derivative's quadratic formula.
  const double q = p.a * p.a - 3.0 * p.b;
  const double qtol = 1e-9 * std::max(1.0, p.a * p.a);
  double stat_lo = 0.0, stat_hi = 0.0;  // local max abscissa <= local min abscissa
  bool has_stat = false;
  if (std::fabs(q) <= qtol) {
    const double phi = -p.a / 3.0;
    if (std::fabs(horner(p, phi)) <= tang) {
      res.real_roots = {{phi, 3}};
      return res;
    }
    // coincident stationary points but the value there is far from zero:
    // effectively monotone, fall through to the plain scan
  } else if (q > 0.0) {
    const double s = std::sqrt(q);
    stat_lo = (-p.a - s) / 3.0;
    stat_hi = (-p.a + s) / 3.0;
    has_stat = true;
  }

  if (has_stat) {
    const double f_max = horner(p, stat_lo);  // local maximum value
    const double f_min = horner(p, stat_hi);  // local minimum value
    const bool tang_max = std::fabs(f_max) <= tang;
    const bool tang_min = std::fabs(f_min) <= tang;
    if (tang_max && tang_min) {
      // both extrema graze the axis: a triple cluster around the midpoint
      res.real_roots = {{0.5 * (stat_lo + stat_hi), 3}};
      return res;
    }
    if (tang_max) {
      const double simple = oracle_bisect(p, stat_hi, hi_end, f_min);
      res.real_roots = {{stat_lo, 2}, {simple, 1}};
      return res;
    }
    if (tang_min) {
      const double simple = oracle_bisect(p, lo_end, stat_lo, horner(p, lo_end));
      res.real_roots = {{simple, 1}, {stat_hi, 2}};
      return res;
    }
  }

  // Uniform sign scan, with the stationary points inserted as extra nodes so a
  // close root pair straddling one of them cannot hide inside a single cell.
  const double step = (hi_end - lo_end) / (grid_points - 1);
  double extras[2];
  int n_extras = 0;
  if (has_stat) {
    if (stat_lo > lo_end && stat_lo < hi_end) extras[n_extras++] = stat_lo;
    if (stat_hi > lo_end && stat_hi < hi_end) extras[n_extras++] = stat_hi;
  }

  int gi = 0, ei = 0;
  auto next_node = [&]() {
    const double g = (gi == grid_points - 1) ? hi_end : lo_end + step * gi;
    if (ei < n_extras && extras[ei] < g) return extras[ei++];
    ++gi;
    return g;
  };

  std::vector<double> found;
  found.reserve(3);
  double prev = next_node();
  double fprev = horner(p, prev);
  int run_sign = sign_of(fprev);
  double run_x = prev, run_f = fprev;
  bool zero_since = (run_sign == 0);
  if (run_sign == 0) found.push_back(prev);

  while (gi < grid_points || ei < n_extras) {
    const double x = next_node();
    if (x == prev) continue;
    const double fx = horner(p, x);
    const int sx = sign_of(fx);
    if (sx == 0) {
      found.push_back(x);
      zero_since = true;
    } else {
      if (run_sign != 0 && sx != run_sign && !zero_since)
        found.push_back(oracle_bisect(p, run_x, x, run_f));
      run_sign = sx;
      run_x = x;
      run_f = fx;
      zero_since = false;
    }
    prev = x;
  }

  std::sort(found.begin(), found.end());
  for (double x : found) res.real_roots.push_back({x, 1});
  attach_complex_pair(p, res);
  return res;
}

OracleResult cardano_roots(const MonicCubic& p) {
  OracleResult res;
  const double phi = -p.a / 3.0;
  // depressed cubic t^3 + pd t + qd, x = t + phi
  const double pd = p.b - p.a * p.a / 3.0;
  const double qd = 2.0 * p.a * p.a * p.a / 27.0 - p.a * p.b / 3.0 + p.c;
  const double disc = -4.0 * pd * pd * pd - 27.0 * qd * qd;
  const double dscale = std::max(1.0, 4.0 * std::fabs(pd * pd * pd) + 27.0 * qd * qd);

  if (std::fabs(disc) <= 1e-12 * dscale) {
    const double pscale = std::max({1.0, p.a * p.a, std::fabs(p.b)});
    if (std::fabs(pd) <= 1e-9 * pscale) {
      res.real_roots = {{phi, 3}};
      return res;
    }
    const double s = -3.0 * qd / (2.0 * pd);  // t^3+pd t+qd = (t-s)^2 (t+2s)
    const double dbl = phi + s;
    const double smp = phi - 2.0 * s;
    if (dbl <= smp)
      res.real_roots = {{dbl, 2}, {smp, 1}};
    else
      res.real_roots = {{smp, 1}, {dbl, 2}};
    return res;
  }

  if (disc > 0.0) {
    // three distinct real roots: trigonometric form
    const double m = 2.0 * std::sqrt(-pd / 3.0);
    const double arg = std::clamp(3.0 * qd / (pd * m), -1.0, 1.0);
    const double psi = std::acos(arg) / 3.0;
    constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
    const double x_hi = phi + m * std::cos(psi);
    const double x_mid = phi + m * std::cos(psi - third_turn);
    const double x_lo = phi + m * std::cos(psi + third_turn);
    res.real_roots = {{x_lo, 1}, {x_mid, 1}, {x_hi, 1}};
    std::sort(res.real_roots.begin(), res.real_roots.end(),
              [](const OracleRoot& l, const OracleRoot& r) { return l.value < r.value; });
    return res;
  }

  // one real root: Cardano radicals, larger cube root first to avoid cancellation
  const double half_q = 0.5 * qd;
  const double rad = std::sqrt(half_q * half_q + pd * pd * pd / 27.0);
  const double u3 = -half_q + rad;
  const double v3 = -half_q - rad;
  double u, v;
  if (std::fabs(u3) >= std::fabs(v3)) {
    u = std::cbrt(u3);
    v = (u != 0.0) ? -pd / (3.0 * u) : std::cbrt(v3);
  } else {
    v = std::cbrt(v3);
    u = (v != 0.0) ? -pd / (3.0 * v) : std::cbrt(u3);
  }
  const double t = u + v;
  res.real_roots = {{phi + t, 1}};
  res.complex_pair = ComplexPair{phi - 0.5 * t, 0.5 * std::sqrt(3.0) * std::fabs(u - v)};
  return res;
}

CrossCheck cross_check(const MonicCubic& p) {
  CrossCheck cc{solve(p), oracle_roots(p), cardano_roots(p), false, false, 0.0};

  auto expand_report = [](const RootReport& rep) {
    std::vector<double> v;
    for (const auto& r : rep.roots)
      for (int i = 0; i < r.multiplicity; ++i) v.push_back(r.value);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto expand_oracle = [](const OracleResult& o) {
    std::vector<double> v;
    for (const auto& r : o.real_roots)
      for (int i = 0; i < r.multiplicity; ++i) v.push_back(r.value);
    std::sort(v.begin(), v.end());
    return v;
  };

  const auto rv = expand_report(cc.report);
  const auto ov = expand_oracle(cc.oracle);
  const auto kv = expand_oracle(cc.cardano);
  cc.count_agreement = (rv.size() == ov.size()) && (ov.size() == kv.size());
  if (!cc.count_agreement) {
    cc.max_discrepancy = std::numeric_limits<double>::infinity();
    cc.multiplicity_agreement = false;
    return cc;
  }
  double d = 0.0;
  for (std::size_t i = 0; i < rv.size(); ++i)
    d = std::max({d, std::fabs(rv[i] - ov[i]), std::fabs(rv[i] - kv[i]), std::fabs(ov[i] - kv[i])});
  cc.max_discrepancy = d;

  auto mult_pattern = [](const std::vector<OracleRoot>& roots) {
    std::vector<int> m;
    for (const auto& r : roots) m.push_back(r.multiplicity);
    return m;
  };
  std::vector<int> rm;
  for (const auto& r : cc.report.roots) rm.push_back(r.multiplicity);
  cc.multiplicity_agreement =
      rm == mult_pattern(cc.oracle.real_roots) && rm == mult_pattern(cc.cardano.real_roots);
  return cc;
}

}  // namespace smncubic
