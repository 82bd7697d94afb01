#pragma once

#include <istream>
#include <string>
#include <vector>

#include "dctapprox/metrics.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

/// Six significant digits, e.g. "6.8543" or "0.0275247".
std::string format_sig6(double v);
/// Two decimals, as presented in summary tables.
std::string format_2dp(double v);

/// "a1,...,a8,epsilon,mse,cg,eta,adds,shifts,epsilon_2dp,mse_2dp,cg_2dp,eta_2dp"
std::string metrics_csv_header();
std::string metrics_csv_row(const ParamVector& a, const MetricsReport& m);

/// Comma-separated table with a header row. Throws Error(kParse) on ragged
/// rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws Error(kParse) when absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace dctapprox
