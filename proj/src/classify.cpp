#include "smncubic/classify.hpp"

#include <algorithm>
#include <cmath>

namespace smncubic {

double classify_band(const MonicCubic& p, double tol) {
  const double aa = std::fabs(p.a);
  return tol * std::max(1.0, aa * aa * aa + std::fabs(p.b) * aa + std::fabs(p.c));
}

Classification classify(const MonicCubic& p, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("classify: tol must be >= 0");
  Classification out;
  out.band = classify_band(p, tol);

  const double b_crit = p.a * p.a / 3.0;
  if (std::fabs(p.b - b_crit) <= out.band) {
    out.flags.b_eq_crit = true;
    const double c_crit = p.a * p.a * p.a / 27.0;
    if (std::fabs(p.c - c_crit) <= out.band) {
      out.kind = Case::TripleRoot;
      // all three envelope values coincide with a^3/27 here
      out.flags.c_eq_c0 = out.flags.c_eq_c1 = out.flags.c_eq_c2 = true;
    } else {
      out.kind = Case::OneRealInflected;
    }
    return out;
  }

  if (p.b > b_crit) {
    out.kind = Case::OneRealNoCritical;
    if (p.a >= 0.0)
      out.subcase = (p.c <= 0.0) ? SignSubcase::I : SignSubcase::II;
    else
      out.subcase = (p.c < 0.0) ? SignSubcase::III : SignSubcase::IV;
    return out;
  }

  const Envelope env = envelope(p.a, p.b);
  out.flags.c_eq_c0 = std::fabs(p.c - env.c0) <= out.band;
  out.flags.c_eq_c1 = std::fabs(p.c - env.c1) <= out.band;
  out.flags.c_eq_c2 = std::fabs(p.c - env.c2) <= out.band;
  if (out.flags.c_eq_c2)
    out.kind = Case::ThreeRealLowerArc;
  else if (out.flags.c_eq_c1)
    out.kind = Case::ThreeRealUpperArc;
  else if (out.flags.c_eq_c0)
    out.kind = Case::ThreeRealLowerArc;  // both arcs valid at c0; pick the lower
  else if (p.c < env.c2)
    out.kind = Case::OneRealBelowEnvelope;
  else if (p.c > env.c1)
    out.kind = Case::OneRealAboveEnvelope;
  else if (p.c < env.c0)
    out.kind = Case::ThreeRealLowerArc;
  else
    out.kind = Case::ThreeRealUpperArc;
  return out;
}

IsolationSet isolation_intervals(const MonicCubic& p, double tol) {
  return isolation_intervals(p, classify(p, tol));
}

IsolationSet isolation_intervals(const MonicCubic& p, const Classification& cls) {
  IsolationSet set;
  auto put = [&set](double lo, double hi, Multiplicity m) {
    set.intervals.push_back({lo, hi, m, 1});
  };

  switch (cls.kind) {
    case Case::ThreeRealLowerArc: {
      const CriticalData cd = *critical_points(p);
      const BalancedRoots nu = balanced_roots(p.a, p.b);
      const ExtremeRoots ex = extreme_roots(p.a, p.b);
      if (cls.flags.c_eq_c2) {
        // x3 and x2 collapse into the double root mu2
        put(cd.mu2, cd.mu2, Multiplicity::Double);
        put(nu.nu1, ex.xi2, Multiplicity::Simple);
      } else {
        put(nu.nu3, cd.mu2, Multiplicity::Simple);
        put(cd.mu2, cd.phi, Multiplicity::Simple);
        put(nu.nu1, ex.xi2, Multiplicity::Simple);
      }
      break;
    }
    case Case::ThreeRealUpperArc: {
      const CriticalData cd = *critical_points(p);
      const BalancedRoots nu = balanced_roots(p.a, p.b);
      const ExtremeRoots ex = extreme_roots(p.a, p.b);
      if (cls.flags.c_eq_c1) {
        // x2 and x1 collapse into the double root mu1
        put(ex.xi1, nu.nu3, Multiplicity::Simple);
        put(cd.mu1, cd.mu1, Multiplicity::Double);
      } else {
        put(ex.xi1, nu.nu3, Multiplicity::Simple);
        put(cd.phi, cd.mu1, Multiplicity::Simple);
        put(cd.mu1, nu.nu1, Multiplicity::Simple);
      }
      break;
    }
    case Case::OneRealBelowEnvelope: {
      const ExtremeRoots ex = extreme_roots(p.a, p.b);
      const double ub = std::min(upper_bound_negcoeff(p), upper_bound_kuniyeda(p));
      put(ex.xi2, std::max(ub, ex.xi2), Multiplicity::Simple);
      break;
    }
    case Case::OneRealAboveEnvelope: {
      const ExtremeRoots ex = extreme_roots(p.a, p.b);
      const double lb =
          std::max(lower_bound(p, BoundMethod::NegCoeffSum), lower_bound(p, BoundMethod::Kuniyeda));
      put(std::min(lb, ex.xi1), ex.xi1, Multiplicity::Simple);
      break;
    }
    case Case::TripleRoot: {
      const double phi = -p.a / 3.0;
      put(phi, phi, Multiplicity::Triple);
      break;
    }
    case Case::OneRealInflected: {
      const double x = inflected_root(p.a, p.c);
      put(x, x, Multiplicity::Simple);
      break;
    }
    case Case::OneRealNoCritical: {
      const double ratio = -p.c / p.b;  // b > a^2/3 >= 0 here
      switch (*cls.subcase) {
        case SignSubcase::I:
          put(0.0, ratio, Multiplicity::Simple);
          break;
        case SignSubcase::II:
        case SignSubcase::III:
          put(std::min(-p.a, ratio), std::max(-p.a, ratio), Multiplicity::Simple);
          break;
        case SignSubcase::IV:
          put(ratio, 0.0, Multiplicity::Simple);
          break;
      }
      break;
    }
  }
  return set;
}

double upper_bound_negcoeff(const MonicCubic& p) {
  double sum = 0.0;
  if (p.a < 0.0) sum -= p.a;
  if (p.b < 0.0) sum -= p.b;
  if (p.c < 0.0) sum -= p.c;
  return std::max(1.0, sum);
}

double upper_bound_kuniyeda(const MonicCubic& p) {
  if (p.a > 0.0 && p.b > 0.0 && p.c > 0.0) return 0.0;
  double H = 0.0;
  if (p.a < 0.0) H = std::max(H, -p.a);
  if (p.b < 0.0) H = std::max(H, -p.b);
  if (p.c < 0.0) H = std::max(H, -p.c);
  int k = 1;  // valid for every sign pattern; sharpened where the rules apply
  if (p.a > 0.0 && p.b < 0.0)
    k = 2;
  else if (p.a > 0.0 && p.b > 0.0 && p.c < 0.0)
    k = 3;
  switch (k) {
    case 2:
      return 1.0 + std::sqrt(H);
    case 3:
      return 1.0 + std::cbrt(H);
    default:
      return 1.0 + H;
  }
}

double lower_bound(const MonicCubic& p, BoundMethod method) {
  const MonicCubic reflected(-p.a, p.b, -p.c);
  const double ub = (method == BoundMethod::NegCoeffSum) ? upper_bound_negcoeff(reflected)
                                                         : upper_bound_kuniyeda(reflected);
  return -ub;
}

Bounds root_bounds(const MonicCubic& p, BoundMethod method) {
  const double ub = (method == BoundMethod::NegCoeffSum) ? upper_bound_negcoeff(p)
                                                         : upper_bound_kuniyeda(p);
  return Bounds{lower_bound(p, method), ub, method};
}

const char* case_name(Case k) {
  switch (k) {
    case Case::ThreeRealLowerArc: return "ThreeRealLowerArc";
    case Case::ThreeRealUpperArc: return "ThreeRealUpperArc";
    case Case::OneRealBelowEnvelope: return "OneRealBelowEnvelope";
    case Case::OneRealAboveEnvelope: return "OneRealAboveEnvelope";
    case Case::TripleRoot: return "TripleRoot";
    case Case::OneRealInflected: return "OneRealInflected";
    case Case::OneRealNoCritical: return "OneRealNoCritical";
  }
  return "?";
}

const char* subcase_name(SignSubcase s) {
  switch (s) {
    case SignSubcase::I: return "I";
    case SignSubcase::II: return "II";
    case SignSubcase::III: return "III";
    case SignSubcase::IV: return "IV";
  }
  return "?";
}

const char* multiplicity_name(Multiplicity m) {
  switch (m) {
    case Multiplicity::Simple: return "simple";
    case Multiplicity::Double: return "double";
    case Multiplicity::Triple: return "triple";
  }
  return "?";
}

std::vector<std::string> flag_names(const BoundaryFlags& f) {
  std::vector<std::string> names;
  if (f.c_eq_c0) names.emplace_back("c=c0");
  if (f.c_eq_c1) names.emplace_back("c=c1");
  if (f.c_eq_c2) names.emplace_back("c=c2");
  if (f.b_eq_crit) names.emplace_back("b=a^2/3");
  return names;
}

}  // namespace smncubic
