#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "omegabound/bounds.hpp"
#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/series.hpp"

using namespace omegabound;

TEST_CASE("linear and log-spaced points") {
  CHECK(linear_points(2, 10, 3) == std::vector<std::uint64_t>{2, 5, 8});
  CHECK(linear_points(5, 5, 1) == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(linear_points(5, 4, 1), DomainError);
  CHECK_THROWS_AS(linear_points(1, 4, 0), DomainError);

  const auto pts = log_spaced_points(1000, 1000000, 31);
  CHECK(pts.front() == 1000);
  CHECK(pts.back() == 1000000);
  CHECK(pts.size() == 31);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i] > pts[i - 1]);
  CHECK(log_spaced_points(1, 3, 100).size() == 3);
}

TEST_CASE("f-ratio over 2..2000 gives 1999 rows") {
  const auto pts = linear_points(2, 2000, 1);
  const auto table = evaluate_series("f-ratio", pts);
  CHECK(table.columns == std::vector<std::string>{"value"});
  REQUIRE(table.n.size() == 1999);
  CHECK(table.rows[0][0] == 1.0);
  CHECK(table.rows[2][0] == 1.25);
  for (const auto& row : table.rows) REQUIRE(row[0] >= 1.0);
}

TEST_CASE("hardy-ramanujan-remainder over log-spaced n") {
  const auto pts = log_spaced_points(1000, 1000000, 20);
  const auto table = evaluate_series("hardy-ramanujan-remainder", pts);
  REQUIRE(table.n.size() == pts.size());
  const auto tail = evaluate_series("omega-prefix-sum", std::vector<std::uint64_t>{1000000});
  const double n = 1e6;
  const double expected = (tail.rows[0][0] - hardy_ramanujan_main(1000000)) * std::log(n) / n;
  CHECK(table.rows.back()[0] == expected);
}

TEST_CASE("omega-gamma-band at 24") {
  const auto table = evaluate_series("omega-gamma-band", std::vector<std::uint64_t>{24});
  REQUIRE(table.n.size() == 1);
  CHECK(table.columns == std::vector<std::string>{"lhs", "rhs", "margin"});
  const double centre = 3.0 * std::log(std::log(3.0));
  CHECK(table.rows[0][0] == doctest::Approx(std::abs(4.0 - centre)).epsilon(1e-10));
  CHECK(table.rows[0][1] == doctest::Approx(69.0).epsilon(1e-12));
  CHECK(table.rows[0][2] > 0.0);
}

TEST_CASE("evaluate_series errors") {
  CHECK_THROWS_AS(evaluate_series("nope", std::vector<std::uint64_t>{5}), CatalogError);
  CHECK_THROWS_AS(evaluate_series("main-theorem", std::vector<std::uint64_t>{2, 3}), DomainError);
  CHECK_THROWS_AS(evaluate_series("pi", std::vector<std::uint64_t>{5, 5}), DomainError);
}

TEST_CASE("CSV and JSON emissions carry identical numbers") {
  const auto table = evaluate_series("prop2-envelope", linear_points(2, 500, 7));
  const auto json = nlohmann::json::parse(series_to_json(table).dump());
  std::istringstream csv(series_to_csv(table));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,lhs,rhs,margin");
  std::size_t row = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 4);
    const auto& j = json["rows"][row];
    CHECK(std::stoull(cells[0]) == j["n"].get<std::uint64_t>());
    CHECK(parse_real(cells[1]) == j["lhs"].get<double>());
    CHECK(parse_real(cells[2]) == j["rhs"].get<double>());
    CHECK(parse_real(cells[3]) == j["margin"].get<double>());
    CHECK(parse_real(cells[1]) == table.rows[row][0]);
    ++row;
  }
  CHECK(row == table.n.size());
}
