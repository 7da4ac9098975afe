#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "gpretzel/cli.hpp"
#include "gpretzel/construct.hpp"
#include "gpretzel/diagram.hpp"
#include "gpretzel/invariants.hpp"

using namespace gpretzel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("jones of the first family member") {
  Result r = call({"jones", "kn:0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1\n");
}

TEST_CASE("build with PD export reports one component") {
  Result r = call({"build", "kn:1", "--export", "pd"});
  REQUIRE(r.code == kExitOk);
  auto nl = r.out.find('\n');
  CHECK(parse_pd(r.out.substr(0, nl)) == build_kn(1));
  CHECK(r.out.substr(nl + 1) == "components: 1\n");
}

TEST_CASE("export re-imports to the same diagram") {
  for (const char* src : {"kn:2", "theta:3"}) {
    std::vector<std::string> args = {"export", src};
    if (std::string(src) == "theta:3") args.insert(args.end(), {"--twists", "1,-2"});
    Result r = call(args);
    REQUIRE(r.code == kExitOk);
    GraphProjection g = *projection_preset("theta:3");
    Diagram expect = std::string(src) == "kn:2" ? build_kn(2) : build_graph_pretzel(g, {{1, -2}});
    CHECK(parse_pd(r.out) == expect);
  }
}

TEST_CASE("output is stable across runs") {
  CHECK(call({"verify", "paper", "--n-max", "1", "--seed", "9"}).out ==
        call({"verify", "paper", "--n-max", "1", "--seed", "9"}).out);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"transmogrify", "kn:1"}).code == kExitUsage);
  CHECK(call({"jones", "dodecahedron"}).code == kExitUsage);
  CHECK(call({"jones", "theta2"}).code == kExitUsage);
  CHECK(call({"jones", "kn:1", "--oracle-limit", "99"}).code == kExitUsage);
  CHECK(call({"alexander", "theta2", "--twists", "1,1"}).code == kExitDomain);
  CHECK(call({"jones", "--pd", "/nonexistent/x.pd"}).code == kExitDomain);
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("diagnostics are one line") {
  Result r = call({"jones", "dodecahedron"});
  CHECK(r.err.find("dodecahedron") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("verify on a diagram") {
  Result r = call({"verify", "k4", "--twists", "1,0,0,-1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output") {
  Result r = call({"jones", "kn:1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == closed_form_jones(1).to_string());
}
