#include "helpers.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace latb;
using namespace latb::testing;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LATB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string write_matrix(const std::string& name, const std::string& content) {
  std::string path = "cli_" + name + ".mat";
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kA2 = "2\n1 -1\n0 1\n";

}  // namespace

TEST_CASE("analyze reports a distinguished A_2 seed") {
  std::string path = write_matrix("a2", kA2);
  RunResult r = run("--json analyze " + path);
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["result"]["definiteness"] == "positive_definite");
  CHECK(doc["result"]["report"]["verdict"] == "distinguished");
  CHECK(doc["result"]["report"]["type"] == "A_2");
  CHECK(doc["result"]["report"]["trace"] == "1");
  CHECK(doc["result"]["report"]["spectrum"] == json::parse(R"(["-1/6","1/6"])"));
}

TEST_CASE("analyze classifies the E7 tubular seed") {
  std::ostringstream content;
  TriangularSeed seed = tubular_seed(TubularType::E7);
  content << seed.n() << "\n";
  for (Eigen::Index i = 0; i < seed.n(); ++i) {
    for (Eigen::Index j = 0; j < seed.n(); ++j) content << seed.s()(i, j).get_str() << " ";
    content << "\n";
  }
  std::string path = write_matrix("e7t", content.str());
  RunResult r = run("--json analyze " + path);
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["definiteness"] == "positive_semidefinite_degenerate");
  CHECK(doc["result"]["report"]["verdict"] == "E~7");
  CHECK(doc["result"]["report"]["trace"] == "1");
  CHECK(doc["result"]["report"]["variance_equal"] == true);
}

TEST_CASE("analyze flags indefinite seeds as out of scope") {
  std::string path = write_matrix("indef", "2\n1 -3\n0 1\n");
  RunResult r = run("--json analyze " + path);
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["definiteness"] == "other");
  std::string verdict = doc["result"]["report"]["verdict"];
  CHECK(verdict.find("indefinite") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  std::string path = write_matrix("det", kA2);
  RunResult first = run("--json analyze " + path);
  RunResult second = run("--json analyze " + path);
  CHECK(first.out == second.out);
  RunResult orbit1 = run("--json orbit " + path + " --max-states 100");
  RunResult orbit2 = run("--json orbit " + path + " --max-states 100");
  CHECK(orbit1.out == orbit2.out);
}

TEST_CASE("orbit command") {
  std::string path = write_matrix("orb", kA2);
  RunResult r = run("--json orbit " + path);
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["status"] == "exhausted");
  CHECK(doc["result"]["size"] == 2);
  CHECK(doc["result"]["orbit"][0]["word"] == "");
  CHECK(doc["result"]["orbit"][1]["word"] == "s1");
}

TEST_CASE("spectrum command") {
  std::string path = write_matrix("spec", "3\n1 -1 0\n0 1 -1\n0 0 1\n");
  RunResult r = run("--json spectrum " + path);
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["spectrum"] == json::parse(R"(["-1/4","0","1/4"])"));
}

TEST_CASE("moments command") {
  std::string path = write_matrix("mom", "3\n1 -1 0\n0 1 -1\n0 0 1\n");
  RunResult r = run("--json moments " + path + " --nu 1/2 --K 3");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["nu"] == "1/2");
  CHECK(doc["result"]["Gamma"][1] == "0");
}

TEST_CASE("chain command") {
  RunResult r = run("--json chain 2,2");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["b"] == 2);
  CHECK(doc["result"]["milnor_number"] == "3");
  CHECK(doc["result"]["Gamma_2"] == "0");
  CHECK(doc["result"]["power_identity"] == true);
  CHECK(doc["result"]["spectrum"] == json::parse(R"(["-1/4","0","1/4"])"));
}

TEST_CASE("hor command") {
  RunResult r = run("--json hor 1,2,3,4,8,12,16 --b 2");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["result"]["n"] == 22);
  CHECK(doc["result"]["trace"] == "1");
  CHECK(doc["result"]["variance"] == "7/48");
  CHECK(doc["result"]["variance_bound"] == "7/48");
}

TEST_CASE("dot export") {
  std::string path = write_matrix("dot", kA2);
  RunResult r = run("analyze " + path + " --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("graph cdd {") != std::string::npos);
  CHECK(r.out.find("v1 -- v2") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  CHECK(run("analyze no_such_file.mat").exit_code == 1);
  std::string bad = write_matrix("bad", "2\n1 2\n3 x\n");
  CHECK(run("analyze " + bad).exit_code == 1);
  std::string lower = write_matrix("lower", "2\n1 0\n1 1\n");
  CHECK(run("analyze " + lower).exit_code == 1);
  CHECK(run("chain 1,2").exit_code == 1);
}

TEST_CASE("verify passes on this build") {
  RunResult r = run("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS variance-table") != std::string::npos);
}

TEST_CASE("shipped data file matches the generator output") {
  RunResult gen = [] {
    std::string cmd = std::string(LATB_GEN_TABLES_PATH) + " regen_tables.json";
    RunResult r;
    r.exit_code = WEXITSTATUS(std::system(cmd.c_str()));
    return r;
  }();
  REQUIRE(gen.exit_code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp("regen_tables.json") == slurp(LATB_DATA_FILE));
}
