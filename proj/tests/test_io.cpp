#include "cgt/game_io.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cgt;
using std::numbers::pi;

TEST_CASE("fixture files parse to the expected games") {
  const ComplexGame g = load_game_file(std::string(FIXTURES_DIR) + "/example_8_2.json");
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 3);
  // pi_fraction evaluates as pi*num/den in that order.
  CHECK(g.alpha == pi * 1.0 / 4.0);
  CHECK(g.beta == pi * 5.0 / 12.0);
  CHECK(g.A(0, 2) == Complex{5, 2});
  CHECK(g.A(1, 2) == Complex{4, -1});

  const ComplexGame s = load_game_file(std::string(FIXTURES_DIR) + "/no_saddle.json");
  CHECK(s.A(0, 1) == Complex{2, 0});
}

TEST_CASE("parse errors name the offending field") {
  const auto expect_error = [](const char* text, const char* needle) {
    try {
      parse_game(Json::parse(text));
      FAIL_CHECK("expected GameFileError for ", text);
    } catch (const GameFileError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error(R"({"n":1,"alpha":{},"beta":{},"matrix":[]})", "m");
  expect_error(
      R"({"m":1,"n":1,"alpha":{"kind":"radians","value":2.0},
          "beta":{"kind":"pi_fraction","num":1,"den":4},"matrix":[[[1,0]]]})",
      "alpha");
  expect_error(
      R"({"m":1,"n":1,"alpha":{"kind":"pi_fraction","num":1,"den":2},
          "beta":{"kind":"pi_fraction","num":1,"den":4},"matrix":[[[1,0]]]})",
      "alpha");  // pi/2 is outside the open interval
  expect_error(
      R"({"m":1,"n":2,"alpha":{"kind":"pi_fraction","num":1,"den":4},
          "beta":{"kind":"pi_fraction","num":1,"den":4},"matrix":[[[1,0]]]})",
      "matrix[0]");
  expect_error(
      R"({"m":1,"n":1,"alpha":{"kind":"pi_fraction","num":1,"den":4},
          "beta":{"kind":"pi_fraction","num":1,"den":4},"matrix":[[[1]]]})",
      "matrix[0][0]");
}

TEST_CASE("load failure for a missing file") {
  CHECK_THROWS_AS(load_game_file("/nonexistent/game.json"), GameFileError);
}

TEST_CASE("solve report JSON round-trips bit-for-bit") {
  const ComplexGame g = load_game_file(std::string(FIXTURES_DIR) + "/example_8_2.json");
  const SolveReport report = solve(g);
  const Json j = to_json(report);
  const std::string once = j.dump();
  const Json reparsed = Json::parse(once);
  CHECK(reparsed.dump() == once);

  // Doubles survive the trip exactly.
  REQUIRE(report.final.has_value());
  CHECK(reparsed["final"]["value"].get<double>() == report.final->value);
  CHECK(reparsed["pure"]["h_low"].get<double>() == report.pure.h_low);
  for (Eigen::Index k = 0; k < report.final->z.size(); ++k) {
    CHECK(reparsed["final"]["z"][static_cast<size_t>(k)][0].get<double>() ==
          report.final->z(k).real());
    CHECK(reparsed["final"]["z"][static_cast<size_t>(k)][1].get<double>() ==
          report.final->z(k).imag());
  }

  // The game echo parses back to the same matrix and arguments.
  const ComplexGame echo = parse_game(game_to_json(g));
  CHECK(echo.alpha == g.alpha);
  CHECK(echo.beta == g.beta);
  CHECK((echo.A - g.A).norm() == 0.0);
}

TEST_CASE("strategy vectors parse from JSON arrays") {
  const CVector v = cvector_from_json(Json::parse("[[0.4,0.2],[0.6,-0.2]]"));
  REQUIRE(v.size() == 2);
  CHECK(v(0) == Complex{0.4, 0.2});
  CHECK(v(1) == Complex{0.6, -0.2});
  CHECK_THROWS_AS(cvector_from_json(Json::parse("[[1,2,3]]")), GameFileError);
}
