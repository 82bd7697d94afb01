#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dctapprox/csv.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/jam.hpp"
#include "dctapprox/transform_io.hpp"
#include "test_support.hpp"

using namespace dctapprox;
using namespace dctapprox::testing;

TEST_CASE("number formatting") {
  CHECK(format_sig6(6.854316) == "6.85432");
  CHECK(format_sig6(0.0275247) == "0.0275247");
  CHECK(format_sig6(24) == "24");
  CHECK(format_2dp(85.6419) == "85.64");
  CHECK(format_2dp(0.0251) == "0.03");
}

TEST_CASE("metrics CSV row") {
  MetricsReport m{6.8543, 0.0275, 7.9118, 85.6419, 16, 0};
  const std::string row = metrics_csv_row(known(1), m);
  CHECK(row == "0,0,0,1,1,0,0,1,6.8543,0.0275,7.9118,85.6419,16,0,6.85,0.03,7.91,85.64");
  CHECK(metrics_csv_header() == "a1,a2,a3,a4,a5,a6,a7,a8,epsilon,mse,cg,eta,adds,shifts,epsilon_2dp,mse_2dp,cg_2dp,eta_2dp");
}

TEST_CASE("CSV reader") {
  std::istringstream good("x,y\n1,2\n3,4\n");
  const CsvTable t = read_csv(good);
  CHECK(t.header.size() == 2);
  CHECK(t.rows.size() == 2);
  CHECK(t.column("y") == 1);
  CHECK(t.rows[1][t.column("x")] == "3");
  CHECK_THROWS_AS(t.column("z"), Error);
  std::istringstream ragged("x,y\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), Error);
}

TEST_CASE("transform JSON round trip") {
  for (int n : {8, 16, 32}) {
    const OrthonormalTransform t = n == 8 ? orthonormal_approx(known(13)) : build_scaled(known(13), n).transform;
    const OrthonormalTransform back = transform_from_json(transform_to_json(t));
    CHECK(back.size() == n);
    CHECK(back.integer_part() == t.integer_part());
    CHECK((back.composed() - t.composed()).cwiseAbs().maxCoeff() == 0.0);
  }
  const auto path = std::filesystem::temp_directory_path() / "dctapprox_test_transform.json";
  save_transform(path, orthonormal_approx(known(2)));
  CHECK(load_transform(path).integer_part() == build_t(known(2)));
  std::filesystem::remove(path);
  try {
    load_transform(path);
    FAIL("expected I/O error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("transform JSON validation") {
  nlohmann::json j = transform_to_json(orthonormal_approx(known(1)));
  nlohmann::json bad_scale = j;
  bad_scale["scale"][0] = 1.0;
  try {
    transform_from_json(bad_scale);
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInfeasible);
  }
  nlohmann::json missing = j;
  missing.erase("entries");
  CHECK_THROWS_AS(transform_from_json(missing), Error);
  nlohmann::json ragged = j;
  ragged["entries"][3].erase(0);
  CHECK_THROWS_AS(transform_from_json(ragged), Error);
  CHECK_THROWS_AS(transform_from_json(nlohmann::json::array()), Error);
}
