#pragma once

#include <string>

#include "json.hpp"
#include "smncubic/classify.hpp"
#include "smncubic/oracle.hpp"
#include "smncubic/refine.hpp"

namespace smncubic {

/// Round to 12 significant digits (print precision of all emitted reals).
double round_sig12(double v);

/// Classification summary: case, subcase, boundary flags, envelope and the
/// mu/nu/xi/phi/r quantities when they exist.
nlohmann::json classification_json(const MonicCubic& p, const Classification& cls);

/// Solve report: {input, case, [subcase], intervals, roots, complex_pair, [theta]}.
nlohmann::json report_json(const MonicCubic& p, const RootReport& rep);

/// Cross-check summary appended by --check.
nlohmann::json cross_check_json(const CrossCheck& cc);

std::string format_real(double v);  // %.12g

}  // namespace smncubic
