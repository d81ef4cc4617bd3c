#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smncubic/cubic.hpp"

namespace smncubic {

/// Complete case taxonomy of the real-root structure of a monic cubic.
enum class Case {
  ThreeRealLowerArc,     // b < a^2/3, c2 <= c <= c0
  ThreeRealUpperArc,     // b < a^2/3, c0 <  c <= c1
  OneRealBelowEnvelope,  // b < a^2/3, c < c2
  OneRealAboveEnvelope,  // b < a^2/3, c > c1
  TripleRoot,            // b = a^2/3, c = a^3/27
  OneRealInflected,      // b = a^2/3, c != a^3/27
  OneRealNoCritical,     // b > a^2/3 (sign subcase I..IV)
};

/// Sign subcases of the no-critical-point family, by the signs of a and c:
/// I: a>=0, c<=0; II: a>=0, c>0; III: a<0, c<0; IV: a<0, c>=0.
enum class SignSubcase { I, II, III, IV };

/// Exact-boundary hits recorded during classification.
struct BoundaryFlags {
  bool c_eq_c0 = false;
  bool c_eq_c1 = false;
  bool c_eq_c2 = false;
  bool b_eq_crit = false;  // b = a^2/3
};

struct Classification {
  Case kind = Case::OneRealNoCritical;
  std::optional<SignSubcase> subcase;  // present iff kind == OneRealNoCritical
  BoundaryFlags flags;
  double band = 0.0;  // absolute comparison band used for the boundary tests
};

enum class Multiplicity { Simple = 1, Double = 2, Triple = 3 };

/// One isolation interval: guaranteed to contain exactly one root of the
/// cubic (a double/triple root counts once, at a degenerate lo == hi interval).
struct IsolationInterval {
  double lo;
  double hi;
  Multiplicity hint = Multiplicity::Simple;
  int expected_roots = 1;
};

struct IsolationSet {
  std::vector<IsolationInterval> intervals;  // ascending
};

enum class BoundMethod { NegCoeffSum, Kuniyeda };

/// A guaranteed enclosure of every real root of the cubic.
struct Bounds {
  double lower;
  double upper;
  BoundMethod method;
};

// Default relative tolerance for the boundary comparisons b vs a^2/3 and
// c vs c0/c1/c2; scaled by max(1, |a|^3 + |b||a| + |c|).
inline constexpr double kDefaultClassifyTol = 1e-12;

/// Absolute comparison band for the given cubic and relative tolerance.
double classify_band(const MonicCubic& p, double tol);

/// Assign the (unique) case and record boundary hits.  Inside the band the
/// boundary case wins; at c = c0 exactly the lower arc is chosen.
Classification classify(const MonicCubic& p, double tol = kDefaultClassifyTol);

/// Isolation intervals for every real root, per case.  One-real cases carry a
/// finite bracket tightened by the root bounds below.
IsolationSet isolation_intervals(const MonicCubic& p, double tol = kDefaultClassifyTol);
IsolationSet isolation_intervals(const MonicCubic& p, const Classification& cls);

/// max(1, sum of |negative coefficients| among a, b, c).
double upper_bound_negcoeff(const MonicCubic& p);

/// 1 + H^(1/k), H = largest |negative coefficient|; k = 1 if a < 0,
/// k = 2 if a > 0 and b < 0, k = 3 if a > 0, b > 0, c < 0; 0 when a, b, c are
/// all positive.  Sign patterns outside those rules fall back to k = 1.
double upper_bound_kuniyeda(const MonicCubic& p);

/// Negated upper bound of the reflected cubic x^3 - a x^2 + b x - c.
double lower_bound(const MonicCubic& p, BoundMethod method);

/// Convenience pair [lower, upper] for one method.
Bounds root_bounds(const MonicCubic& p, BoundMethod method);

const char* case_name(Case k);
const char* subcase_name(SignSubcase s);
const char* multiplicity_name(Multiplicity m);
std::vector<std::string> flag_names(const BoundaryFlags& f);

}  // namespace smncubic
