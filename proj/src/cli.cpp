#include "smncubic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "smncubic/batch.hpp"
#include "smncubic/oracle.hpp"
#include "smncubic/refine.hpp"
#include "smncubic/render.hpp"
#include "smncubic/report_json.hpp"

namespace smncubic {
namespace {

void print_value_group(std::ostream& out, const char* label, const nlohmann::json& obj,
                       std::initializer_list<const char*> keys) {
  out << label << ":";
  for (const char* k : keys) out << ' ' << k << '=' << format_real(obj.at(k).get<double>());
  out << '\n';
}

void print_classification_text(std::ostream& out, const nlohmann::json& j) {
  out << "case: " << j.at("case").get<std::string>();
  if (j.contains("subcase")) out << " (subcase " << j.at("subcase").get<std::string>() << ")";
  out << '\n';
  out << "boundary flags:";
  if (j.at("boundary_flags").empty()) out << " none";
  for (const auto& f : j.at("boundary_flags")) out << ' ' << f.get<std::string>();
  out << '\n';
  if (j.contains("envelope")) {
    print_value_group(out, "envelope", j["envelope"], {"c0", "c1", "c2"});
    print_value_group(out, "critical", j["critical"], {"mu1", "mu2", "phi", "r"});
    print_value_group(out, "balanced", j["balanced"], {"nu1", "nu2", "nu3"});
    print_value_group(out, "extreme", j["extreme"], {"xi1", "xi2"});
  }
}

void print_report_text(std::ostream& out, const nlohmann::json& j) {
  out << "case: " << j.at("case").get<std::string>();
  if (j.contains("subcase")) out << " (subcase " << j.at("subcase").get<std::string>() << ")";
  out << '\n';
  for (const auto& iv : j.at("intervals"))
    out << "interval: [" << format_real(iv.at("lo").get<double>()) << ", "
        << format_real(iv.at("hi").get<double>()) << "] "
        << iv.at("multiplicity").get<std::string>() << '\n';
  for (const auto& r : j.at("roots"))
    out << "root: " << format_real(r.at("value").get<double>())
        << "  multiplicity " << r.at("multiplicity").get<int>()
        << "  residual " << format_real(r.at("residual").get<double>()) << '\n';
  out << "complex pair: " << (j.at("complex_pair").get<bool>() ? "yes" : "no") << '\n';
  if (j.contains("theta")) out << "theta: " << format_real(j.at("theta").get<double>()) << '\n';
  if (j.contains("check")) {
    const auto& c = j["check"];
    out << "check: max discrepancy " << format_real(c.at("max_discrepancy").get<double>())
        << ", counts " << (c.at("count_agreement").get<bool>() ? "agree" : "DISAGREE")
        << ", multiplicities "
        << (c.at("multiplicity_agreement").get<bool>() ? "agree" : "DISAGREE") << '\n';
  }
}

int do_classify(const MonicCubic& p, double tol, const std::string& format, std::ostream& out) {
  const nlohmann::json j = classification_json(p, classify(p, tol));
  if (format == "json")
    out << j.dump() << '\n';
  else
    print_classification_text(out, j);
  return kExitOk;
}

int do_solve(const MonicCubic& p, double tol, const std::string& format, bool check,
             std::ostream& out) {
  nlohmann::json j = report_json(p, solve(p, tol));
  bool check_failed = false;
  if (check) {
    const CrossCheck cc = cross_check(p);
    j["check"] = cross_check_json(cc);
    check_failed = !cc.count_agreement || cc.max_discrepancy > kCheckGate;
  }
  if (format == "json")
    out << j.dump() << '\n';
  else
    print_report_text(out, j);
  return check_failed ? kExitCheckFailed : kExitOk;
}

int do_batch(const std::string& in_path, const std::string& out_path, double tol,
             std::ostream& err) {
  std::ifstream in(in_path);
  if (!in) {
    err << "error: cannot read " << in_path << '\n';
    return kExitParseError;
  }
  std::ofstream out(out_path);
  if (!out) {
    err << "error: cannot write " << out_path << '\n';
    return kExitParseError;
  }
  const BatchSummary s = run_batch(in, out, tol);
  return s.errors ? kExitParseError : kExitOk;
}

int do_render(const MonicCubic& p, const std::string& out_path, int sweep, double tol,
              std::ostream& err) {
  std::string svg;
  try {
    svg = render_svg(p, RenderOptions{sweep, tol});
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoTriangle;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    err << "error: cannot write " << out_path << '\n';
    return kExitParseError;
  }
  out << svg;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real-root structure of the monic cubic x^3 + a x^2 + b x + c"};
  app.name("smncubic");
  app.require_subcommand(1);

  double tol = kDefaultClassifyTol;
  app.add_option("--tol", tol, "relative tolerance for boundary comparisons")
      ->capture_default_str();
  app.fallthrough();

  double a = 0.0, b = 0.0, c = 0.0;
  std::string format = "text";
  bool check = false;
  std::string in_path, out_path;
  int sweep = 0;

  const auto add_coeffs = [&](CLI::App* sc) {
    sc->add_option("--a", a, "quadratic coefficient")->required();
    sc->add_option("--b", b, "linear coefficient")->required();
    sc->add_option("--c", c, "free term")->required();
  };

  CLI::App* sc_classify = app.add_subcommand("classify", "classify the root structure");
  add_coeffs(sc_classify);
  sc_classify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* sc_solve = app.add_subcommand("solve", "isolate and refine all real roots");
  add_coeffs(sc_solve);
  sc_solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sc_solve->add_flag("--check", check, "cross-check against the independent oracle");

  CLI::App* sc_batch = app.add_subcommand("batch", "solve a CSV of cubics to JSON lines");
  sc_batch->add_option("--in", in_path, "input CSV (columns a,b,c)")->required();
  sc_batch->add_option("--out", out_path, "output JSON-lines file")->required();

  CLI::App* sc_render = app.add_subcommand("render", "render the triangle geometry as SVG");
  add_coeffs(sc_render);
  sc_render->add_option("--out", out_path, "output SVG file")->required();
  sc_render->add_option("--sweep", sweep, "overlay N triangles for c across [c2, c1]")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  try {
    if (*sc_classify) return do_classify(MonicCubic(a, b, c), tol, format, out);
    if (*sc_solve) return do_solve(MonicCubic(a, b, c), tol, format, check, out);
    if (*sc_batch) return do_batch(in_path, out_path, tol, err);
    if (*sc_render) return do_render(MonicCubic(a, b, c), out_path, sweep, tol, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return kExitParseError;
}

}  // namespace smncubic
