#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "millerzeros/cli.hpp"
#include "millerzeros/io.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "millerzeros");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = mz::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("faber golden files") {
  auto a = call({"faber", "--k", "48", "--m", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == golden("faber_48_1.json"));
  auto j = mz::json::parse(a.out);
  CHECK(j["coeffs"] == mz::json::array({"-24903328", "931860", "-2136", "1"}));
  auto b = call({"faber", "--k", "124", "--m", "1"});
  CHECK(b.code == 0);
  CHECK(b.out == golden("faber_124_1.json"));
  auto t = call({"--format", "text", "faber", "--k", "48", "--m", "1"});
  CHECK(t.out == golden("faber_48_1.txt"));
}

TEST_CASE("expand") {
  auto a = call({"expand", "--form", "E4", "--trunc", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == "1+240q+2160q^2\n");
  auto d = call({"expand", "--form", "Delta", "--trunc", "4", "--format", "json"});
  CHECK(d.out == golden("expand_delta_4.json"));
  auto g = call({"expand", "--form", "g", "--k", "24", "--m", "1", "--trunc", "3"});
  CHECK(g.out == "q+195660q^3\n");
}

TEST_CASE("miller json schema") {
  auto a = call({"miller", "--k", "24", "--m", "0", "--trunc", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == golden("miller_24_0.json"));
}

TEST_CASE("roots") {
  auto a = call({"roots", "--k", "48", "--m", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == golden("roots_48_1.json"));
  auto t = call({"roots", "--k", "48", "--m", "1", "--format", "text", "--digits", "4"});
  CHECK(t.out == "28.5703\n565.1814\n1542.2483\n");
  auto c = call({"roots", "--k", "132", "--m", "9"});
  auto j = mz::json::parse(c.out);
  CHECK(j["real_outside"].get<long>() + j["complex_pairs"].get<long>() > 0);
}

TEST_CASE("arc-zeros") {
  auto a = call({"arc-zeros", "--k", "48", "--m", "1"});
  CHECK(a.code == 0);
  auto j = mz::json::parse(a.out);
  CHECK(j["valence_ok"] == true);
  CHECK(j["cross_ok"] == true);
  CHECK(j["arc_angles"].size() == 3);
}

TEST_CASE("verify-thm2 csv") {
  auto a = call({"verify-thm2", "--format", "csv"});
  CHECK(a.code == 0);
  std::istringstream in(a.out);
  std::string line;
  int n = 0;
  std::getline(in, line);
  CHECK(line == "k,ell,kprime,degree,roots_in,real_outside,complex_pairs,simple,passed");
  while (std::getline(in, line)) {
    ++n;
    CHECK(line.back() == '1');
  }
  CHECK(n == 84);
}

TEST_CASE("mrl-check") {
  auto a = call({"mrl-check", "--k", "192", "--m", "1"});
  CHECK(a.code == 0);
  auto b = call({"mrl-check", "--k", "132", "--m", "9"});
  CHECK(b.code == 1);
}

TEST_CASE("dist csv") {
  auto a = call({"dist", "--k-list", "120,240", "--bins", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("k,m,zeros,star_discrepancy,max_bin_deviation,bin0,bin1,bin2\n", 0) == 0);
  CHECK(call({"dist", "--k-list", "120,x"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(call({}).code == 2);
  CHECK(call({"faber", "--k", "48"}).code == 2);
  CHECK(call({"faber", "--k", "2", "--m", "0"}).code == 2);
  CHECK(call({"faber", "--k", "48", "--m", "9"}).code == 2);
  CHECK(call({"expand", "--form", "X"}).code == 2);
  CHECK(call({"--format", "xml", "faber", "--k", "48", "--m", "1"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  auto h = call({"roots", "--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("--digits") != std::string::npos);
  auto x = call({"roots", "--k", "124", "--m", "1"});
  auto y = call({"roots", "--k", "124", "--m", "1"});
  CHECK(x.out == y.out);
}

TEST_CASE("the binary writes to --out") {
  std::string path = (std::filesystem::temp_directory_path() / "millerzeros_cli_out.json").string();
  std::string cmd = std::string(CLI_PATH) + " faber --k 48 --m 1 --out " + path;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == golden("faber_48_1.json"));
  std::remove(path.c_str());
}
