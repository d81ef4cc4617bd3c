#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "smncubic/batch.hpp"
#include "smncubic/cli.hpp"
#include "smncubic/refine.hpp"
#include "smncubic/render.hpp"
#include "smncubic/report_json.hpp"
#include "smncubic/triangle.hpp"

using namespace smncubic;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("smncubic_test_" + name);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("round_sig12 keeps 12 significant digits") {
  CHECK(round_sig12(0.0) == 0.0);
  CHECK(round_sig12(1.0 / 3.0) == 0.333333333333);
  CHECK(round_sig12(-1234567.891234567) == -1234567.89123);
  CHECK(format_real(round_sig12(-5.0 / 3.0)) == "-1.66666666667");
}

TEST_CASE("report JSON round-trips byte-identically") {
  const MonicCubic p(3, 2, -0.25);
  const nlohmann::json j = report_json(p, solve(p));
  const std::string once = j.dump();
  const std::string twice = nlohmann::json::parse(once).dump();
  CHECK(once == twice);
}

TEST_CASE("cli classify: worked example and formats") {
  const CliResult text = cli({"classify", "--a", "3", "--b", "2", "--c", "-0.25"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("ThreeRealLowerArc") != std::string::npos);
  CHECK(text.out.find("c0=0") != std::string::npos);

  const CliResult json =
      cli({"classify", "--a", "3", "--b", "2", "--c", "-0.25", "--format", "json"});
  CHECK(json.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["case"] == "ThreeRealLowerArc");
  CHECK(j["envelope"]["c0"].get<double>() == 0.0);
  CHECK(j["envelope"]["c1"].get<double>() == doctest::Approx(0.385).epsilon(5e-4));
  CHECK(j["envelope"]["c2"].get<double>() == doctest::Approx(-0.385).epsilon(5e-4));

  const CliResult sub = cli({"classify", "--a", "1", "--b", "2", "--c", "-3", "--format", "json"});
  const nlohmann::json js = nlohmann::json::parse(sub.out);
  CHECK(js["case"] == "OneRealNoCritical");
  CHECK(js["subcase"] == "I");
}

TEST_CASE("cli classify: malformed numeric input exits 2") {
  CHECK(cli({"classify", "--a", "x", "--b", "2", "--c", "-3"}).code == kExitParseError);
  CHECK(cli({"classify", "--a", "1", "--b", "2"}).code == kExitParseError);
  CHECK(cli({"bogus"}).code == kExitParseError);
}

TEST_CASE("cli solve: schema, triple root at 12-digit input, --check") {
  const CliResult r =
      cli({"solve", "--a", "3", "--b", "2", "--c", "-0.25", "--format", "json"});
  CHECK(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.contains("input"));
  CHECK(j.contains("case"));
  CHECK(j.contains("intervals"));
  CHECK(j.contains("roots"));
  CHECK(j.contains("complex_pair"));
  CHECK(j.contains("theta"));
  REQUIRE(j["roots"].size() == 3);
  CHECK(j["roots"][2]["value"].get<double>() == doctest::Approx(0.107159871689).epsilon(1e-9));
  CHECK(j["complex_pair"] == false);

  const CliResult t = cli({"solve", "--a", "5", "--b", "8.333333333333", "--c",
                           "4.629629629630", "--format", "json"});
  const nlohmann::json jt = nlohmann::json::parse(t.out);
  CHECK(jt["case"] == "TripleRoot");
  REQUIRE(jt["roots"].size() == 1);
  CHECK(jt["roots"][0]["multiplicity"] == 3);
  CHECK(jt["roots"][0]["value"].get<double>() == doctest::Approx(-5.0 / 3.0).epsilon(1e-11));

  const CliResult c9 = cli({"solve", "--a", "-1", "--b", "10", "--c", "7", "--format", "json"});
  const nlohmann::json j9 = nlohmann::json::parse(c9.out);
  REQUIRE(j9["roots"].size() == 1);
  CHECK(j9["roots"][0]["value"].get<double>() == doctest::Approx(-0.634256833290).epsilon(1e-9));
  CHECK(j9["complex_pair"] == true);
  CHECK_FALSE(j9.contains("theta"));

  const CliResult chk =
      cli({"solve", "--a", "3", "--b", "2", "--c", "-0.25", "--check", "--format", "json"});
  CHECK(chk.code == kExitOk);
  const nlohmann::json jc = nlohmann::json::parse(chk.out);
  CHECK(jc["check"]["max_discrepancy"].get<double>() < 1e-6);
}

TEST_CASE("cli solve output is byte-identical across runs") {
  const std::vector<std::string> args = {"solve", "--a", "3",
                                         "--b",   "2", "--c", "-0.25", "--format", "json"};
  CHECK(cli(args).out == cli(args).out);
  const std::vector<std::string> text_args = {"solve", "--a", "-4", "--b", "2", "--c", "3"};
  CHECK(cli(text_args).out == cli(text_args).out);
}

TEST_CASE("cli batch: order, errors, exit codes") {
  const fs::path in = temp_file("batch_in.csv");
  const fs::path out = temp_file("batch_out.jsonl");
  {
    std::ofstream f(in);
    f << "a,b,c\n";
    f << "# worked examples\n";
    f << "3,2,-0.25\n";
    f << "-4,2,3\n";
    f << "1,2\n";
    f << "-4,3,-1\n";
  }
  const CliResult r = cli({"batch", "--in", in.string(), "--out", out.string()});
  CHECK(r.code == kExitParseError);  // one malformed row

  std::ifstream res(out);
  std::vector<nlohmann::json> lines;
  std::string line;
  while (std::getline(res, line)) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["line_no"] == 3);
  CHECK(lines[0]["case"] == "ThreeRealLowerArc");
  CHECK(lines[1]["line_no"] == 4);
  CHECK(lines[2]["line_no"] == 5);
  CHECK(lines[2]["reason"] == "expected 3 fields");
  CHECK_FALSE(lines[2].contains("roots"));
  CHECK(lines[3]["line_no"] == 6);
  CHECK(lines[3]["case"] == "OneRealBelowEnvelope");

  // batch rows match the single-shot outputs
  const struct {
    std::size_t row;
    int line_no;
    const char *a, *b, *c;
  } shots[] = {{0, 3, "3", "2", "-0.25"}, {1, 4, "-4", "2", "3"}, {3, 6, "-4", "3", "-1"}};
  for (const auto& s : shots) {
    const CliResult single = cli({"solve", "--a", s.a, "--b", s.b, "--c", s.c, "--format", "json"});
    nlohmann::json expect = nlohmann::json::parse(single.out);
    expect["line_no"] = s.line_no;
    CHECK(lines[s.row] == expect);
  }

  fs::remove(in);
  fs::remove(out);
}

TEST_CASE("cli batch: clean input exits 0, empty input emits nothing") {
  const fs::path in = temp_file("batch_ok.csv");
  const fs::path out = temp_file("batch_ok.jsonl");
  {
    std::ofstream f(in);
    f << "3,2,-0.25\n-4,2,3\n";
  }
  CHECK(cli({"batch", "--in", in.string(), "--out", out.string()}).code == kExitOk);
  {
    std::ofstream f(in);  // truncate to empty
  }
  CHECK(cli({"batch", "--in", in.string(), "--out", out.string()}).code == kExitOk);
  CHECK(slurp(out).empty());
  CHECK(cli({"batch", "--in", "/nonexistent/file.csv", "--out", out.string()}).code ==
        kExitParseError);
  fs::remove(in);
  fs::remove(out);
}

TEST_CASE("run_batch output is deterministic under concurrency") {
  std::ostringstream csv;
  csv << "a,b,c\n";
  for (int i = 0; i < 200; ++i)
    csv << (i % 7 - 3) << "," << (i % 11 - 5) << "." << i % 10 << "," << (i % 5 - 2) << "\n";
  csv << "bad,row\n";
  std::istringstream in1(csv.str()), in2(csv.str());
  std::ostringstream out1, out2;
  const BatchSummary s1 = run_batch(in1, out1, kDefaultClassifyTol, 8);
  const BatchSummary s2 = run_batch(in2, out2, kDefaultClassifyTol, 3);
  CHECK(s1.records == 201);
  CHECK(s1.errors == 1);
  CHECK(out1.str() == out2.str());

  // output order equals input order: line_no strictly increasing
  std::istringstream lines(out1.str());
  std::string line;
  long prev = 0;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const long n = nlohmann::json::parse(line)["line_no"].get<long>();
    CHECK(n > prev);
    prev = n;
    ++count;
  }
  CHECK(count == s1.records);
}

TEST_CASE("cli render: balanced, vertical-side and error cases") {
  const fs::path out = temp_file("render.svg");

  CHECK(cli({"render", "--a", "3", "--b", "2", "--c", "0", "--out", out.string()}).code ==
        kExitOk);
  const std::string svg = slurp(out);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<ellipse") != std::string::npos);

  // balanced: P and R share one positive ordinate -> equal pixel y
  {
    const MonicCubic p(3, 2, 0);
    const RootReport rep = solve(p);
    const SmnTriangle tri =
        smn_triangle(rep.roots[2].value, rep.roots[1].value, rep.roots[0].value);
    CHECK(tri.P.y == doctest::Approx(tri.R.y).epsilon(1e-12));
    const RenderFrame f = render_frame(p);
    char want_p[64], want_r[64];
    std::snprintf(want_p, sizeof want_p, "%.3f,%.3f", f.px_x(tri.P.x), f.px_y(tri.P.y));
    std::snprintf(want_r, sizeof want_r, "%.3f,%.3f", f.px_x(tri.R.x), f.px_y(tri.R.y));
    CHECK(svg.find(want_p) != std::string::npos);
    CHECK(svg.find(want_r) != std::string::npos);
  }

  // extreme cubic given at print precision: P and Q share the abscissa mu1
  CHECK(cli({"render", "--a", "3", "--b", "2", "--c", "0.385", "--out", out.string()}).code ==
        kExitOk);
  {
    const std::string svg1 = slurp(out);
    const MonicCubic snapped(3, 2, envelope(3, 2).c1);
    const RootReport rep = solve(snapped);
    double v[3] = {rep.roots[0].value, rep.roots[1].value, rep.roots[1].value};
    if (rep.roots[1].multiplicity == 2) v[2] = rep.roots[1].value;
    const SmnTriangle tri = smn_triangle(v[2], v[1], v[0]);
    CHECK(tri.P.x == doctest::Approx(tri.Q.x).epsilon(1e-12));
    CHECK(tri.P.x == doctest::Approx(-0.4226497).epsilon(1e-4));
    const RenderFrame f = render_frame(MonicCubic(3, 2, 0.385));
    char want[32];
    std::snprintf(want, sizeof want, "%.3f,", f.px_x(tri.P.x));
    CHECK(svg1.find(want) != std::string::npos);
  }

  CHECK(cli({"render", "--a", "1", "--b", "2", "--c", "0", "--out", out.string()}).code ==
        kExitNoTriangle);
  CHECK(cli({"render", "--a", "3", "--b", "2", "--c", "9", "--out", out.string()}).code ==
        kExitNoTriangle);

  fs::remove(out);
}

TEST_CASE("cli render: sweep overlays and byte determinism") {
  const fs::path out1 = temp_file("render_sweep1.svg");
  const fs::path out2 = temp_file("render_sweep2.svg");
  const std::vector<std::string> args1 = {"render", "--a", "3", "--b", "2", "--c", "0",
                                          "--sweep", "7", "--out", out1.string()};
  std::vector<std::string> args2 = args1;
  args2.back() = out2.string();
  CHECK(cli(args1).code == kExitOk);
  CHECK(cli(args2).code == kExitOk);
  const std::string s1 = slurp(out1), s2 = slurp(out2);
  CHECK(s1 == s2);
  // 7 sweep triangles + the main one
  std::size_t polygons = 0;
  for (std::size_t pos = s1.find("<polygon"); pos != std::string::npos;
       pos = s1.find("<polygon", pos + 1))
    ++polygons;
  CHECK(polygons == 8);
  fs::remove(out1);
  fs::remove(out2);
}
