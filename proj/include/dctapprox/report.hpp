#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

namespace dctapprox {

/// Rendered summary tables keyed by file name ("seeds.md", "metrics_16.csv",
/// ...). Seeds and 8-point metrics come straight from the front CSV; the 16-
/// and 32-point tables are computed by size-doubling each seed.
using RenderedTables = std::map<std::string, std::string>;

/// Throws Error(kParse) when the CSV is malformed.
RenderedTables render_tables(std::istream& front_csv, double rho);

/// Writes every rendered table into `out_dir` (created if needed).
void report_tables(const std::filesystem::path& front_csv, const std::filesystem::path& out_dir, double rho);

}  // namespace dctapprox
