#include "dctapprox/transform_io.hpp"

#include <cmath>
#include <fstream>

#include "dctapprox/error.hpp"

namespace dctapprox {

nlohmann::json transform_to_json(const OrthonormalTransform& t) {
  const DyadicMatrix& m = t.integer_part();
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.num(r, c));
    entries.push_back(std::move(row));
  }
  nlohmann::json j;
  j["n"] = t.size();
  j["den"] = m.denominator();
  j["entries"] = std::move(entries);
  j["scale"] = t.scale();
  return j;
}

OrthonormalTransform transform_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto den = j.at("den").get<std::int64_t>();
    const auto& entries = j.at("entries");
    if (n < 2 || !entries.is_array() || entries.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::kParse, "transform JSON: 'entries' must have n rows");
    }
    std::vector<std::int64_t> nums;
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::kParse, "transform JSON: every row must have n entries");
      }
      for (const auto& v : row) nums.push_back(v.get<std::int64_t>());
    }
    auto scale = j.at("scale").get<std::vector<double>>();
    OrthonormalTransform t(DyadicMatrix::from_numerators(n, n, std::move(nums), den), std::move(scale));
    const Eigen::MatrixXd c = t.composed();
    const double err = (c * c.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(err <= 1e-9)) throw Error(ErrorKind::kInfeasible, "transform JSON rows are not orthonormal");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("transform JSON: ") + e.what());
  }
}

void save_transform(const std::filesystem::path& path, const OrthonormalTransform& t) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << transform_to_json(t).dump(2) << '\n';
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

OrthonormalTransform load_transform(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
  return transform_from_json(j);
}

}  // namespace dctapprox
