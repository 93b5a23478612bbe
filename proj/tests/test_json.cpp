#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "degloci/errors.hpp"
#include "degloci/json_io.hpp"
#include "degloci/singularity.hpp"

using namespace degloci;

TEST_CASE("matrix and ideal round trips") {
  Json m = Json::parse(R"({"vars": ["x", "y", "z"], "entries": [["x", "y", "0"], ["y", "z", "x"]]})");
  PolyMatrix phi = matrix_from_json(m);
  CHECK(to_json(phi) == m);
  Json i = Json::parse(R"({"vars": ["x", "y"], "generators": ["x^2", "x*y"], "order": "lex"})");
  Ideal I = ideal_from_json(i);
  CHECK(I.order() == MonomialOrder::lex());
  CHECK(to_json(I)["generators"] == i["generators"]);
}

TEST_CASE("malformed jobs") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"entries": [["x", "y"]]})")), ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars": ["x"], "generators": ["x"], "order": "grlex"})")),
                  ParseError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars": ["x"], "generators": [3]})")), ParseError);
  CHECK_THROWS_AS(padic_config_from_json(Json::parse(R"({"p": "five"})")), ConfigError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/job.json"), ConfigError);
}

TEST_CASE("scaling job") {
  Json j = Json::parse(R"({"origin": {"vars": ["x", "y", "z"], "entries": [["x", "y", "0"], ["y + z^2", "x", "z"]]},
                           "weights": {"x": 1, "y": 1, "z": 1}, "row_powers": [-1, -1], "col_powers": [0, 0, 0]})");
  ScalingJob s = scaling_job_from_json(j);
  CHECK(s.weights.at("z") == 1);
  CHECK(s.row_powers == std::vector<int>{-1, -1});
}

TEST_CASE("certificate serialization is stable") {
  auto R = make_ring({"x", "y", "z"});
  PolyMatrix mu = PolyMatrix::parse(R, {{"x", "y", "0"}, {"y", "z", "x"}});
  Json a = to_json(certify_matrix(mu)), b = to_json(certify_matrix(mu));
  CHECK(a.dump() == b.dump());
  CHECK(a["kind"] == "ChartCoverNode");
  CHECK(a["children"].size() == 3);
  auto path = (std::filesystem::temp_directory_path() / "degloci_cert_test.json").string();
  write_json_file(path, a);
  CHECK(read_json_file(path) == a);
  std::remove(path.c_str());
}

TEST_CASE("padic configuration defaults") {
  PadicConfig c = padic_config_from_json(Json::parse(R"({"p": 3, "centers": [0, 2]})"));
  CHECK(c.p == 3);
  CHECK(c.K == 8);
  CHECK(c.centers == std::vector<long long>{0, 2});
}
