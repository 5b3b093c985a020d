#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "eigenkit/report.hpp"

using namespace eigenkit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json envelope") {
  const Run r = run({"--format", "json", "roots", "--group", "C3"});
  REQUIRE(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "eigenkit-report");
  CHECK(j["version"] == 1);
  CHECK(j["config"]["command"] == "roots");
  CHECK(j["config"]["group"] == "C3");
  CHECK(j["config"]["format"] == "json");
  CHECK(j["result"].is_object());
}

TEST_CASE("table and csv headers") {
  for (const char* fmt : {"table", "csv"}) {
    const Run r = run({"cosets", "--group", "G2", "--parabolic", "1", "--format", fmt});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.rfind("# eigenkit-report v1\n# config {", 0) == 0);
    CHECK(r.out.find("12121") != std::string::npos);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"--format", "json", "inequalities", "--group", "C2", "--n", "3"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("tables") {
  const Run r = run({"tables", "g2f4"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("432132343213234") != std::string::npos);
  CHECK(r.out.find("123214321324321") != std::string::npos);
}

TEST_CASE("membership") {
  const Run in = run({"--format", "json", "membership", "--group", "A1", "--weights", "0,0,0"});
  REQUIRE(in.code == cli::kOk);
  CHECK(Json::parse(in.out)["result"]["member"] == true);
  const Run out = run({"--format", "json", "membership", "--group", "A1", "--weights", "1;1;3"});
  REQUIRE(out.code == cli::kOk);
  CHECK(Json::parse(out.out)["result"]["member"] == false);
}

TEST_CASE("multiply") {
  const Run r = run({"--format", "json", "multiply", "--group", "G2", "--parabolic", "1", "--words", "1,2121"});
  REQUIRE(r.code == cli::kOk);
  const Json product = Json::parse(r.out)["result"]["product"];
  REQUIRE(product.size() == 1);
  CHECK(product[0]["word"] == "e");
  CHECK(product[0]["coefficient"] == "1");
}

TEST_CASE("verify") {
  CHECK(run({"verify", "identities", "--r", "3", "--s", "2", "--k", "1"}).code == cli::kOk);
  CHECK(run({"verify", "tables"}).code == cli::kOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "no-such-target"}).code == cli::kUsage);
  CHECK(run({"roots"}).code == cli::kUsage);
  CHECK(run({"roots", "--group", "Q7"}).code == cli::kUsage);
  CHECK(run({"cosets", "--group", "C2", "--parabolic", "5"}).code == cli::kUsage);
  CHECK(run({"membership", "--group", "A1", "--weights", "1,2"}).code == cli::kUsage);
  CHECK(run({"membership", "--group", "A1", "--weights", "-1;1;1"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "roots", "--group", "A1"}).code == cli::kUsage);
  const Run r = run({"multiply", "--group", "G2", "--parabolic", "2", "--words", "1,9"});
  CHECK(r.code == cli::kUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("resource limits") {
  CHECK(run({"--tuple-cap", "5", "inequalities", "--group", "C3", "--n", "3"}).code == cli::kResource);
}
