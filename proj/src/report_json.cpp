#include "smncubic/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "smncubic/triangle.hpp"

namespace smncubic {

double round_sig12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json classification_json(const MonicCubic& p, const Classification& cls) {
  nlohmann::json j;
  j["input"] = {{"a", round_sig12(p.a)}, {"b", round_sig12(p.b)}, {"c", round_sig12(p.c)}};
  j["case"] = case_name(cls.kind);
  if (cls.subcase) j["subcase"] = subcase_name(*cls.subcase);
  j["boundary_flags"] = flag_names(cls.flags);

  const bool envelope_exists = cls.kind != Case::OneRealNoCritical;
  if (envelope_exists) {
    // inside the b = a^2/3 band the envelope degenerates; clamp b onto the
    // boundary so the emitted values are the exact degenerate ones
    const double b_eff = cls.flags.b_eq_crit ? std::min(p.b, p.a * p.a / 3.0) : p.b;
    const Envelope env = envelope(p.a, b_eff);
    j["envelope"] = {{"c0", round_sig12(env.c0)},
                     {"c1", round_sig12(env.c1)},
                     {"c2", round_sig12(env.c2)}};
    const CriticalData cd = *critical_points(MonicCubic(p.a, b_eff, p.c));
    j["critical"] = {{"mu1", round_sig12(cd.mu1)},
                     {"mu2", round_sig12(cd.mu2)},
                     {"phi", round_sig12(cd.phi)},
                     {"r", round_sig12(cd.r)}};
    const BalancedRoots nu = balanced_roots(p.a, b_eff);
    j["balanced"] = {{"nu1", round_sig12(nu.nu1)},
                     {"nu2", round_sig12(nu.nu2)},
                     {"nu3", round_sig12(nu.nu3)}};
    const ExtremeRoots ex = extreme_roots(p.a, b_eff);
    j["extreme"] = {{"xi1", round_sig12(ex.xi1)}, {"xi2", round_sig12(ex.xi2)}};
  }
  return j;
}

nlohmann::json report_json(const MonicCubic& p, const RootReport& rep) {
  nlohmann::json j;
  j["input"] = {{"a", round_sig12(p.a)}, {"b", round_sig12(p.b)}, {"c", round_sig12(p.c)}};
  j["case"] = case_name(rep.classification.kind);
  if (rep.classification.subcase) j["subcase"] = subcase_name(*rep.classification.subcase);

  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& iv : rep.isolation.intervals)
    intervals.push_back({{"lo", round_sig12(iv.lo)},
                         {"hi", round_sig12(iv.hi)},
                         {"multiplicity", multiplicity_name(iv.hint)}});
  j["intervals"] = intervals;

  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rep.roots)
    roots.push_back({{"value", round_sig12(r.value)},
                     {"multiplicity", r.multiplicity},
                     {"residual", round_sig12(r.residual)}});
  j["roots"] = roots;

  j["complex_pair"] = rep.complex_pair_present;
  if (rep.theta) j["theta"] = round_sig12(*rep.theta);
  return j;
}

nlohmann::json cross_check_json(const CrossCheck& cc) {
  nlohmann::json j;
  j["max_discrepancy"] = round_sig12(cc.max_discrepancy);
  j["count_agreement"] = cc.count_agreement;
  j["multiplicity_agreement"] = cc.multiplicity_agreement;
  auto oracle_json = [](const OracleResult& o) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : o.real_roots)
      a.push_back({{"value", round_sig12(r.value)}, {"multiplicity", r.multiplicity}});
    return a;
  };
  j["oracle_roots"] = oracle_json(cc.oracle);
  j["cardano_roots"] = oracle_json(cc.cardano);
  return j;
}

}  // namespace smncubic
