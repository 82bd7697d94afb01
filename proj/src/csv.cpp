#include "dctapprox/csv.hpp"

#include <cstdio>
#include <sstream>

#include "dctapprox/error.hpp"

namespace dctapprox {

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_2dp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string metrics_csv_header() {
  return "a1,a2,a3,a4,a5,a6,a7,a8,epsilon,mse,cg,eta,adds,shifts,epsilon_2dp,mse_2dp,cg_2dp,eta_2dp";
}

std::string metrics_csv_row(const ParamVector& a, const MetricsReport& m) {
  std::ostringstream out;
  out << a.to_string() << ',' << format_sig6(m.epsilon) << ',' << format_sig6(m.mse) << ','
      << format_sig6(m.coding_gain_db) << ',' << format_sig6(m.efficiency_pct) << ',' << m.additions << ','
      << m.shifts << ',' << format_2dp(m.epsilon) << ',' << format_2dp(m.mse) << ','
      << format_2dp(m.coding_gain_db) << ',' << format_2dp(m.efficiency_pct);
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw Error(ErrorKind::kParse, "missing CSV column '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw Error(ErrorKind::kParse, "CSV line " + std::to_string(line_no) + " has " +
                                         std::to_string(cells.size()) + " fields, expected " +
                                         std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw Error(ErrorKind::kParse, "CSV input is empty");
  return t;
}

}  // namespace dctapprox
