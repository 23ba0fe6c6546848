#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "dot_fixture.hpp"
#include "kncrystal/cli.hpp"

using kn::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  const Result r = invoke({"enumerate", "--shape", "1", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"shape\":[1],\"m\":1,\"count\":2,\"weights\":[{\"chi\":[-1],\"count\":1},{\"chi\":[1],\"count\":1}]}\n");
  CHECK(r.err.empty());
  const Result t = invoke({"enumerate", "--shape", "2,1", "--m", "2", "--format", "table"});
  CHECK(t.code == 0);
  CHECK(t.out.starts_with("SP(2,1), m=2: 16 tableaux\n"));
}

TEST_CASE("output is byte-stable") {
  for (const char* cmd : {"enumerate", "graph", "csp", "check"}) {
    const std::vector<std::string> args{cmd, "--shape", "2,1", "--m", "3"};
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("csp exit codes follow the verdict") {
  const Result ok = invoke({"csp", "--shape", "2,1", "--m", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"verdict\":true") != std::string::npos);
  const Result bad = invoke({"csp", "--shape", "2,1", "--m", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"verdict\":false") != std::string::npos);
  const Result table = invoke({"csp", "--shape", "2,1", "--m", "3", "--format", "table"});
  CHECK(table.out.find("non-integer") != std::string::npos);
  CHECK(table.out.find("cyclic sieving fails") != std::string::npos);
}

TEST_CASE("check reports n/a outside the hypotheses") {
  const Result r = invoke({"check", "--shape", "2,1", "--m", "3", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n/a") != std::string::npos);
  CHECK(r.out.ends_with("OK\n"));
  CHECK(invoke({"check", "--shape", "2,1", "--m", "2"}).out.find("\"passed\":true") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"enumerate", "--m", "2"}).code == 2);
  CHECK(invoke({"enumerate", "--shape", "2,1,1", "--m", "1"}).code == 2);
  CHECK(invoke({"enumerate", "--shape", "1,2", "--m", "3"}).code == 2);
  CHECK(invoke({"enumerate", "--shape", "x", "--m", "3"}).code == 2);
  CHECK(invoke({"enumerate", "--shape", "1", "--m", "0"}).code == 2);
  CHECK(invoke({"frobnicate", "--shape", "1", "--m", "1"}).code == 2);
  const Result dot = invoke({"csp", "--shape", "1", "--m", "1", "--format", "dot"});
  CHECK(dot.code == 2);
  CHECK(dot.err.starts_with("error: "));
  CHECK(invoke({"enumerate", "--shape", "1", "--m", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("enumeration cap") {
  const Result r = invoke({"enumerate", "--shape", "2,1", "--m", "3", "--cap", "10"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(invoke({"enumerate", "--shape", "2,1", "--m", "3", "--cap", "64"}).code == 0);
}

TEST_CASE("graph of the empty shape is a single node") {
  const Result r = invoke({"graph", "--shape", "", "--m", "2"});
  REQUIRE(r.code == 0);
  const auto g = kn::test::parse_dot(r.out);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("graph of a single box is a path") {
  const Result r = invoke({"graph", "--shape", "1", "--m", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find(R"("edges":[{"from":0,"to":1,"label":1},{"from":1,"to":2,"label":2},{"from":2,"to":3,"label":1}])") !=
        std::string::npos);
  const auto g = kn::test::parse_dot(invoke({"graph", "--shape", "1", "--m", "2"}).out);
  CHECK(g.nodes.size() == 4);
  CHECK(g.edges.size() == 3);
}

TEST_CASE("graph matches the golden fixture") {
  const auto ours = kn::test::parse_dot(invoke({"graph", "--shape", "2,1", "--m", "2"}).out);
  const auto golden = kn::test::parse_dot(kn::test::read_file(std::string(KN_FIXTURE_DIR) + "/c2_shape21_crystal.dot"));
  CHECK(ours.nodes == golden.nodes);
  CHECK(ours.edges == golden.edges);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "kncrystal_cli_out_test.json";
  std::filesystem::remove(path);
  const Result r = invoke({"enumerate", "--shape", "1", "--m", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(kn::test::read_file(path.string()) == invoke({"enumerate", "--shape", "1", "--m", "1"}).out);
  std::filesystem::remove(path);
}
