#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sepset/cli.hpp"
#include "sepset/fixtures.hpp"

using namespace sepset;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SEPSET_SOURCE_DIR) + "/tests/data/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("sepset-test-" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  auto ex = scratch("ex.sepset", find_fixture("EX")->text);
  CHECK(cli({"audit", ex.string()}).code == kExitPass);

  auto failing = cli({"audit", data("failing.sepset")});
  CHECK(failing.code == kExitFail);
  CHECK(failing.out.find("FAIL") != std::string::npos);

  auto malformed = cli({"audit", data("malformed.sepset")});
  CHECK(malformed.code == kExitInvalid);
  CHECK(malformed.err.find("malformed.sepset:7:") != std::string::npos);
  CHECK(malformed.err.find("1/2") != std::string::npos);

  CHECK(cli({"audit", "/nonexistent/doc.sepset"}).code == kExitInvalid);
  CHECK(cli({"audit"}).code == kExitInvalid);
  CHECK(cli({"frobnicate"}).code == kExitInvalid);
  CHECK(cli({"audit", ex.string(), "--format", "xml"}).code == kExitInvalid);

  // A two-atom enumeration bound forces the product check to skip.
  CHECK(cli({"audit", ex.string(), "--check", "complsep", "--max-enum", "2"}).code == kExitPass);
  CHECK(cli({"audit", ex.string(), "--check", "complsep", "--max-enum", "2", "--strict-bounds"}).code == kExitBound);

  CHECK(cli({"audit", ex.string(), "--check", "nothing-matches"}).code == kExitPass);
}

TEST_CASE("machine output is byte-stable") {
  auto ex = scratch("ex2.sepset", find_fixture("EX")->text);
  auto a = cli({"audit", ex.string(), "--format", "machine"});
  auto b = cli({"audit", ex.string(), "--format", "machine", "--jobs", "2"});
  REQUIRE(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schemaVersion\"") != std::string::npos);
}

TEST_CASE("version, laws and fixtures verbs") {
  auto v = cli({"version"});
  CHECK(v.code == kExitPass);
  CHECK(v.out == std::string("sepset ") + kVersion + "\n");

  auto l = cli({"laws"});
  CHECK(l.code == kExitPass);
  CHECK(std::count(l.out.begin(), l.out.end(), '\n') == 24);

  CHECK(cli({"fixtures", "--name", "metric"}).out == find_fixture("metric")->text);
  CHECK(cli({"fixtures", "--name", "nope"}).code == kExitInvalid);
}

TEST_CASE("checked-in fixtures match the built-in documents") {
  for (const auto& fx : builtin_fixtures()) {
    CAPTURE(fx.name);
    std::ifstream in(std::string(SEPSET_SOURCE_DIR) + "/fixtures/" + fx.name + ".sepset", std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == fx.text);
    auto path = scratch(fx.name + ".sepset", fx.text);
    CHECK(cli({"audit", path.string(), "--strict-bounds"}).code == kExitPass);
  }
}
