#include <doctest.h>

#include <fstream>
#include <sstream>

#include "superfock/dsl.hpp"
#include "superfock/operators.hpp"
#include "superfock/report.hpp"

using namespace superfock;

namespace {

std::string suite_text() {
  // Assembled in-line so the unit test does not depend on file paths.
  return R"([
    {"id": "b-virasoro", "check": "modealg.verify", "spec": "virasoro", "c": "7/3"},
    {"id": "a-charge", "check": "fock.central-charge", "dim": [1, 0]},
    {"id": "c-defect", "check": "fock.ext", "dim": [1, 0],
     "xi": "exp(i*1*t)*d1", "eta": "exp(-i*1*t)*x1*d1",
     "window": [2, 1], "margin": [2, 1]}
  ])";
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("single jobs pass and carry exact constants") {
  CheckRecord r = run_job_json(R"({"check":"modealg.verify","spec":"virasoro","c":"7/3"})");
  CHECK(r.ok());
  CHECK(r.residual == "0");

  CheckRecord c = run_job_json(R"({"check":"fock.central-charge","dim":[1,0]})");
  CHECK(c.ok());
  REQUIRE_FALSE(c.constants.empty());
  CHECK(c.constants[0].first == "c_temp");
  CHECK(c.constants[0].second == "2");

  CheckRecord p = run_job_json(R"({"check":"modealg.params","c":"0","k1":"0","k2":"0"})");
  CHECK(p.ok());
  CHECK(p.constants[0].second == "-11/12");
}

TEST_CASE("auxiliary charge jobs agree with the declaration") {
  CheckRecord rec = run_job_json(
      R"({"check":"fock.central-charge","dim":[1,0],"aux":"oscillator:b1f0"})");
  CHECK(rec.ok());
  CHECK(rec.constants[0].second == "4");  // 2 from the trajectory, 2 from the module
}

TEST_CASE("margin violations and parse errors surface as typed exceptions") {
  CHECK_THROWS_AS(run_job_json(
                      R"({"check":"fock.ext","dim":[1,0],"xi":"exp(i*2*t)*d1",
                          "eta":"exp(-i*2*t)*x1*d1","window":[2,1],"margin":[1,1]})"),
                  MarginError);
  CHECK_THROWS_AS(run_job_json(R"({"check":"fock.generator","dim":[1,0],
                                   "xi":"x1*","window":[1,0]})"),
                  ParseError);
  CHECK_THROWS_AS(run_job_json(R"({"check":"nope"})"), ParseError);
  CHECK_THROWS_AS(run_job_json("not json"), ParseError);
}

TEST_CASE("suite reports are ordered by job id and byte-stable") {
  SuiteResult first = run_suite(suite_text());
  SuiteResult second = run_suite(suite_text());
  CHECK(first.all_ok());
  REQUIRE(first.records.size() == 3);
  CHECK(first.records[0].job == "a-charge");
  CHECK(first.records[1].job == "b-virasoro");
  CHECK(first.records[2].job == "c-defect");
  CHECK(render_records(first) == render_records(second));
  // Record lines parse back as json with the fixed schema tag.
  std::istringstream lines(render_records(first));
  std::string line;
  while (std::getline(lines, line)) CHECK(line.find("\"superfock.report/1\"") != std::string::npos);
}

TEST_CASE("shipped demo suite passes end to end") {
  std::ifstream in(SUPERFOCK_TEST_DATA "/demo_suite.json");
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  SuiteResult result = run_suite(text);
  CHECK(result.all_ok());
  CHECK(result.records.size() == 12);
}

TEST_SUITE_END();
