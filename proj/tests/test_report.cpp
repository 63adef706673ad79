#include <doctest.h>

#include "uniserial/error.hpp"
#include "uniserial/galilei.hpp"
#include "uniserial/report.hpp"

using namespace uniserial;

TEST_SUITE("report") {

TEST_CASE("length-3 markdown table") {
  const auto report = search_length3(AlgebraSpec::from_m(3), 12);
  const std::string md = to_markdown(report);
  CHECK(md.find("| 3 | V(0),V(3),V(0) |") != std::string::npos);
  CHECK(md.find("| 3 | V(4),V(3),V(4) |") != std::string::npos);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = md.find("\n| 3 |", pos)) != std::string::npos; ++pos) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("length-3 json and csv") {
  const auto report = search_length3(AlgebraSpec::from_m(5), 7);
  const auto j = to_json(report);
  CHECK(j["m"] == 5);
  CHECK(j["found"].size() == 3);
  CHECK(j["found"][0]["socle"] == nlohmann::json{0, 5, 0});
  CHECK(j["rejected"].size() + j["found"].size() == 8u * 8u * 8u);
  const std::string csv = to_csv(report);
  CHECK(csv.rfind("socle,status,reason,dimension,lambda\n", 0) == 0);
  CHECK(csv.find("\n0 5 0,found,,") != std::string::npos);
  CHECK(csv.find("\n0 0 1,rejected,c!=a,,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 8 * 8 * 8);
}

TEST_CASE("renders are deterministic") {
  const AlgebraSpec spec = AlgebraSpec::from_m(1);
  for (ReportFormat f : {ReportFormat::json, ReportFormat::csv, ReportFormat::md}) {
    CHECK(render(search_length3(spec, 4), f) == render(search_length3(spec, 4), f));
    CHECK(render(length4_search(spec, 5), f) == render(length4_search(spec, 5), f));
    CHECK(render(length_ge5_check(spec, 5, 5), f) == render(length_ge5_check(spec, 5, 5), f));
  }
}

TEST_CASE("longer-length reports") {
  const auto l4 = length4_search(AlgebraSpec::from_m(1), 5);
  CHECK(to_markdown(l4).find("no faithful uniserial modules") != std::string::npos);
  const auto j = to_json(l4);
  CHECK(j["survivors"].empty());
  CHECK(j["obstructions"].size() == l4.case2);
  CHECK(j["obstructions"][0]["nonzero"] == true);
  const auto l5 = length_ge5_check(AlgebraSpec::from_m(3), 5, 8);
  CHECK(to_json(l5)["faithful_candidates"].empty());
  CHECK(to_csv(l5).find("faithful_candidates,0") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK(parse_report_format("md") == ReportFormat::md);
  CHECK_THROWS_AS(parse_report_format("xml"), ParseError);
}

}  // TEST_SUITE
