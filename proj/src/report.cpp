#include "dctapprox/report.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "dctapprox/csv.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/jam.hpp"
#include "dctapprox/metrics.hpp"

namespace dctapprox {

namespace {

struct Row {
  ParamVector a;
  MetricsReport m;
};

double parse_double(const std::string& s, const std::string& column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, "bad numeric value '" + s + "' in column " + column);
}

int parse_int(const std::string& s, const std::string& column) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, "bad integer value '" + s + "' in column " + column);
}

std::string bracketed(const ParamVector& a) {
  std::string s = "[";
  for (int i = 0; i < kParamCount; ++i) {
    if (i) s += ' ';
    s += format_param_value(a.doubled(i));
  }
  return s + "]";
}

void metrics_table(const std::vector<Row>& rows, std::string& md, std::string& csv) {
  std::ostringstream m, c;
  m << "| j | epsilon | MSE | Cg | eta | A | S |\n|---|---|---|---|---|---|---|\n";
  c << "j,epsilon,mse,cg,eta,adds,shifts\n";
  int j = 0;
  for (const auto& r : rows) {
    ++j;
    m << "| " << j << " | " << format_2dp(r.m.epsilon) << " | " << format_2dp(r.m.mse) << " | "
      << format_2dp(r.m.coding_gain_db) << " | " << format_2dp(r.m.efficiency_pct) << " | " << r.m.additions
      << " | " << r.m.shifts << " |\n";
    c << j << ',' << format_2dp(r.m.epsilon) << ',' << format_2dp(r.m.mse) << ',' << format_2dp(r.m.coding_gain_db)
      << ',' << format_2dp(r.m.efficiency_pct) << ',' << r.m.additions << ',' << r.m.shifts << '\n';
  }
  md = m.str();
  csv = c.str();
}

}  // namespace

RenderedTables render_tables(std::istream& front_csv, double rho) {
  const CsvTable t = read_csv(front_csv);
  std::array<std::size_t, kParamCount> acol{};
  for (int i = 0; i < kParamCount; ++i) acol[i] = t.column("a" + std::to_string(i + 1));
  const std::size_t eps = t.column("epsilon"), mse_col = t.column("mse"), cg = t.column("cg"),
                    eta = t.column("eta"), adds = t.column("adds"), shifts = t.column("shifts");

  std::vector<Row> rows;
  for (const auto& cells : t.rows) {
    std::string params;
    for (int i = 0; i < kParamCount; ++i) params += (i ? "," : "") + cells[acol[i]];
    Row r;
    r.a = parse_params(params);
    r.m.epsilon = parse_double(cells[eps], "epsilon");
    r.m.mse = parse_double(cells[mse_col], "mse");
    r.m.coding_gain_db = parse_double(cells[cg], "cg");
    r.m.efficiency_pct = parse_double(cells[eta], "eta");
    r.m.additions = parse_int(cells[adds], "adds");
    r.m.shifts = parse_int(cells[shifts], "shifts");
    rows.push_back(r);
  }

  RenderedTables out;
  {
    std::ostringstream m, c;
    m << "| j | a |\n|---|---|\n";
    c << "j,a1,a2,a3,a4,a5,a6,a7,a8\n";
    int j = 0;
    for (const auto& r : rows) {
      ++j;
      m << "| " << j << " | " << bracketed(r.a) << " |\n";
      c << j << ',' << r.a.to_string() << '\n';
    }
    out["seeds.md"] = m.str();
    out["seeds.csv"] = c.str();
  }
  metrics_table(rows, out["metrics_8.md"], out["metrics_8.csv"]);

  for (int size : {16, 32}) {
    const SignalModel model(rho, size);
    std::vector<Row> scaled;
    for (const auto& r : rows) {
      const ScaledTransform s = build_scaled(r.a, size);
      Row sr{r.a, evaluate_matrix(s.transform.composed(), model)};
      sr.m.additions = s.complexity.additions;
      sr.m.shifts = s.complexity.shifts;
      scaled.push_back(sr);
    }
    const std::string stem = "metrics_" + std::to_string(size);
    metrics_table(scaled, out[stem + ".md"], out[stem + ".csv"]);
  }
  return out;
}

void report_tables(const std::filesystem::path& front_csv, const std::filesystem::path& out_dir, double rho) {
  std::ifstream in(front_csv);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + front_csv.string());
  const RenderedTables tables = render_tables(in, rho);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + out_dir.string() + ": " + ec.message());
  for (const auto& [name, text] : tables) {
    std::ofstream f(out_dir / name);
    if (!f) throw Error(ErrorKind::kIo, "cannot write " + (out_dir / name).string());
    f << text;
  }
}

}  // namespace dctapprox
