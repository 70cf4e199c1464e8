#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtoric/pipeline.hpp"

using namespace wtoric;

TEST_CASE("config parsing") {
  Json j = Json::parse(R"json({"type":"A2","lambda":[[1,1]],"K":[1,2],"checks":["all"]})json");
  JobConfig cfg = parse_config(j);
  CHECK(cfg.type_label == "A2");
  CHECK(cfg.K == std::vector<int>({0, 1}));
  CHECK(cfg.lambda_weight.size() == 1);
  CHECK(cfg.lambda_weight[0] == std::vector<Rational>({Rational(1), Rational(1)}));

  // rationals as strings
  Json j2 = Json::parse(R"json({"type":"B2","lambda":[["3/2","1"]],"checks":["classify"]})json");
  CHECK(parse_config(j2).lambda_weight[0][0] == Rational(3, 2));

  CHECK_THROWS_AS(parse_config(Json::parse(R"json({"lambda":[[1]]})")), Error);
  CHECK_THROWS_AS(parse_config(Json::parse(R"json({"type":"A2","lambda":[]})")), Error);
  CHECK_THROWS_AS(parse_config(Json::parse(R"json({"type":"A2","lambda":[[-1,1]]})")), Error);
  CHECK_THROWS_AS(parse_config(Json::parse(R"json({"type":"A2","lambda":[[1,1]],"checks":[]})")), Error);
  CHECK_THROWS_AS(parse_config(Json::parse(R"json({"type":"A2","lambda":[[1,1]],"checks":["nope"]})")),
                  Error);
}

TEST_CASE("scalar json round trip") {
  CHECK(scalar_to_json(Scalar(Rational(3, 4))) == Json("3/4"));
  const Scalar q(Rational(1, 2), Rational(-2, 3), 5);
  const Json j = scalar_to_json(q);
  CHECK(j.is_array());
  CHECK(scalar_from_json(j, 5) == q);
  CHECK(scalar_from_json(Json("7/2"), 5) == Scalar(Rational(7, 2)));
}

TEST_CASE("full A2 run passes every requested check") {
  Json j = Json::parse(R"json({"type":"A2","lambda":[[1,1]],"K":[1,2],"checks":["all"]})json");
  RunResult rr = run(parse_config(j));
  CHECK(rr.ok);
  CHECK(rr.report["checks"]["classify"] == true);
  CHECK(rr.report["checks"]["algebra"] == true);
  CHECK(rr.report["checks"]["characters"] == true);
  CHECK(rr.report["checks"]["iso"] == true);
  CHECK(rr.report["checks"]["scaling"] == true);
  CHECK(rr.report["dossier"]["all_true"] == true);
  CHECK(rr.report["polytope"]["h_vector"] == Json::array({1, 4, 1}));
  CHECK(rr.report["field"]["discriminant"] == 1);
}

TEST_CASE("report bytes are deterministic") {
  Json j = Json::parse(R"json({"type":"I2(5)","lambda":[[1,0]],"K":[1,2],"checks":["all"]})json");
  RunResult a = run(parse_config(j));
  RunResult b = run(parse_config(j));
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.ok);
}

TEST_CASE("iso with K empty is trivially true") {
  Json j = Json::parse(R"json({"type":"A2","lambda":[[1,1]],"K":[],"checks":["iso"]})json");
  RunResult rr = run(parse_config(j));
  CHECK(rr.ok);
  CHECK(rr.report["dossier"]["all_true"] == true);
}

TEST_CASE("degenerate gate outside rank 2") {
  Json j = Json::parse(R"json({"type":"B3","lambda":[[1,0,1]],"K":[1],"checks":["classify"]})json");
  RunResult rr = run(parse_config(j));
  CHECK(!rr.ok);
  CHECK(rr.report.contains("error"));

  // rank 2 degenerate runs without the flag
  Json j2 = Json::parse(R"json({"type":"G2","lambda":[[1,0]],"K":[1,2],"checks":["iso"]})json");
  CHECK(run(parse_config(j2)).ok);
}

TEST_CASE("unknown type is a config-stage error") {
  Json j = Json::parse(R"json({"type":"E8","lambda":[[1,1,1,1,1,1,1,1]],"checks":["classify"]})json");
  RunResult rr = run(parse_config(j));
  CHECK(!rr.ok);
  CHECK(rr.report.contains("error"));
}

TEST_CASE("golden examples") {
  CHECK(run_example("a2-hexagon").ok);
  CHECK(run_example("i25-pentagon").ok);
  CHECK_THROWS_AS(run_example("nope"), Error);
}

TEST_CASE("selftest sweep at rank 2") {
  RunResult rr = selftest(2);
  CHECK(rr.ok);
  const std::string summary = rr.report["summary"].get<std::string>();
  CHECK(summary.find("FAIL") == std::string::npos);
  CHECK(summary.find("A2 singleton") != std::string::npos);
  CHECK(summary.find("I2(5) two-point") != std::string::npos);
}
