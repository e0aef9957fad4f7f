#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

namespace {

std::string plab_bin() {
  const char* p = std::getenv("PLAB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "PLAB_BIN must point at the plab binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + plab_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("tables --which 3 reproduces the Kostant table") {
  auto r = run("tables --which 3 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::set<std::pair<long, long>> h2sl3;
  for (const auto& e : j["entries"])
    if (e["module"] == "sl3" && e["degree"] == 2)
      for (const auto& w : e["weights"]) h2sl3.insert({w[0].get<long>(), w[1].get<long>()});
  CHECK(h2sl3 == std::set<std::pair<long, long>>({{1, -5}, {-5, 1}}));
}

TEST_CASE("cohomology --method both agrees and exits 0 (H^1_1 = 0)") {
  auto r = run("cohomology --kind hyperbolic --degree 1 --homogeneity 1 --method both --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["slices"].size() == 1);
  CHECK(j["slices"][0]["direct_dim"] == 0);
  CHECK(j["slices"][0]["kostant_dim"] == 0);
  CHECK(j["slices"][0]["agree"] == true);
}

TEST_CASE("chain --beta 0 emits collinear points") {
  auto r = run("chain --kind hyperbolic --alpha 1 --beta 0 --samples 5 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["points"].size() == 5);
  for (const auto& p : j["points"]) {
    // on the line u1 = u2: both w's real and equal
    CHECK(p["w1"][0] == p["w2"][0]);
    CHECK(p["w1"][1] == "0/1");
    CHECK(p["w2"][1] == "0/1");
  }
}

TEST_CASE("JSON output is byte-deterministic") {
  for (const std::string& args :
       {std::string("tables --which 4 --json"), std::string("tables --which 1 --json"),
        std::string("classify --kind elliptic --json")}) {
    auto r1 = run(args), r2 = run(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(nlohmann::json::parse(r1.out)["schema_version"] == 1);
  }
}

TEST_CASE("unknown flags are rejected with exit code 2") {
  CHECK(run("tables --which 3 --frobnicate").exit_code == 2);
  CHECK(run("cohomology --kind nosuch --degree 2").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("quadric --check") {
  auto r = run("quadric --kind hyperbolic --json --check "
               "'{\"z1\":[\"1/1\",\"0/1\"],\"z2\":[\"0/1\",\"0/1\"],"
               "\"w1\":[\"0/1\",\"1/1\"],\"w2\":[\"0/1\",\"0/1\"]}'");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["on_quadric"] == true);
  CHECK(j["in_mu0"] == false);
}

TEST_CASE("normalform subcommand reads a series file") {
  std::string path = "/tmp/plab_cli_series.txt";
  {
    std::ofstream f(path);
    f << "N1: z1 z2 zb2 + z2 zb1 zb2\nN2: 0\n";
  }
  auto r = run("normalform --kind hyperbolic --file " + path + " --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["condition"] == "d^2 N1_{21} / dz1 dz2");
  std::remove(path.c_str());
  // missing file is an input error
  CHECK(run("normalform --kind hyperbolic --file /tmp/plab_no_such_file").exit_code == 2);
}

TEST_CASE("chain --csv respects PARABOLIC_LAB_PRECISION") {
  auto r = run("chain --kind elliptic --alpha 1/3 --beta 1/2 --samples 3 --csv",
               "PARABOLIC_LAB_PRECISION=4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("u1,u2") == 0);
  // a beta pole is an input error (exit 2)
  CHECK(run("chain --kind hyperbolic --alpha 1 --beta 2 --samples 1").exit_code == 2);
}

TEST_CASE("kostant subcommand") {
  auto r = run("kostant --a 1 --b 1 --degree 2 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::set<std::pair<long, long>> ws;
  for (const auto& w : j["weights"]) ws.insert({w[0].get<long>(), w[1].get<long>()});
  CHECK(ws == std::set<std::pair<long, long>>({{1, -5}, {-5, 1}}));
  // non-dominant weights are input errors
  CHECK(run("kostant --a -1 --b 0 --degree 1").exit_code == 2);
}
