#include "smncubic/batch.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "smncubic/refine.hpp"
#include "smncubic/report_json.hpp"

namespace smncubic {
namespace {

struct CsvRow {
  std::size_t line_no;                          // physical 1-based line number
  std::variant<MonicCubic, std::string> value;  // cubic or parse-error reason
};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    std::size_t b = 0, e = f.size();
    while (b < e && std::isspace(static_cast<unsigned char>(f[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(f[e - 1]))) --e;
    f = f.substr(b, e - b);
  }
  return fields;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<CsvRow> read_rows(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
      line.erase(0, 3);  // UTF-8 BOM
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string trimmed = line;
    std::size_t b = 0;
    while (b < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[b]))) ++b;
    trimmed.erase(0, b);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    const auto fields = split_fields(line);
    if (first_data_line) {
      first_data_line = false;
      bool any_numeric = false;
      for (const auto& f : fields)
        if (parse_number(f)) any_numeric = true;
      if (!any_numeric) continue;  // header line ("a,b,c" or similar)
    }

    if (fields.size() != 3) {
      rows.push_back({line_no, "expected 3 fields"});
      continue;
    }
    const auto a = parse_number(fields[0]);
    const auto bb = parse_number(fields[1]);
    const auto c = parse_number(fields[2]);
    if (!a || !bb || !c) {
      rows.push_back({line_no, "field is not a number"});
      continue;
    }
    try {
      rows.push_back({line_no, MonicCubic(*a, *bb, *c)});
    } catch (const std::invalid_argument& e) {
      rows.push_back({line_no, e.what()});
    }
  }
  return rows;
}

std::string process_row(const CsvRow& row, double tol) {
  nlohmann::json j;
  if (std::holds_alternative<std::string>(row.value)) {
    j["line_no"] = row.line_no;
    j["reason"] = std::get<std::string>(row.value);
  } else {
    const MonicCubic& p = std::get<MonicCubic>(row.value);
    try {
      j = report_json(p, solve(p, tol));
      j["line_no"] = row.line_no;
    } catch (const std::exception& e) {
      j = nlohmann::json{{"line_no", row.line_no}, {"reason", e.what()}};
    }
  }
  return j.dump();
}

}  // namespace

BatchSummary run_batch(std::istream& in, std::ostream& out, double tol, unsigned threads) {
  const std::vector<CsvRow> rows = read_rows(in);
  std::vector<std::string> lines(rows.size());

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, 8);

  if (rows.size() > 1 && workers > 1) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
        lines[i] = process_row(rows[i], tol);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) lines[i] = process_row(rows[i], tol);
  }

  BatchSummary summary;
  summary.records = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << lines[i] << '\n';
    if (std::holds_alternative<std::string>(rows[i].value)) ++summary.errors;
  }
  return summary;
}

}  // namespace smncubic
