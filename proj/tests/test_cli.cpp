#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
#ifdef QSYM_CLI_PATH
  return QSYM_CLI_PATH;
#else
  const char* env = std::getenv("QSYM_CLI_PATH");
  return env ? env : "./qsym";
#endif
}

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("raise reports the oracle comparison", "[cli]") {
  auto r = run_cli("raise --lambda 1,1 --q 3/5 --t 2/7 --json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["tool_version"] == "1.0.0");
  CHECK(doc["config"]["lambda"] == "1,1");
  CHECK(doc["matches_oracle"] == true);
  CHECK(doc["all_passed"] == true);
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["id"] == "raise-oracle");
  CHECK(doc["checks"][0]["status"] == "pass");

  bool saw_g2 = false;
  for (const auto& term : doc["g_expansion"]["terms"])
    if (term["partition"] == "2") {
      saw_g2 = true;
      CHECK(term["coeff"] == "-40/29");
    }
  CHECK(saw_g2);
}

TEST_CASE("identical configuration gives identical bytes", "[cli]") {
  auto a = run_cli("suite truncation --trials 2 --json");
  auto b = run_cli("suite truncation --trials 2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("exit codes follow the check results", "[cli]") {
  CHECK(run_cli("eigen --n 2 --N 4 --seed 1").exit_code == 0);
  // the swapped parameter order is a hard n = 2 failure
  CHECK(run_cli("eigen --n 2 --N 4 --seed 1 --param-order tq").exit_code == 1);
  CHECK(run_cli("raise --lambda 1,2").exit_code == 2);   // not a partition
  CHECK(run_cli("raise --lambda 2,1 --q 1").exit_code == 2);  // degenerate point
  CHECK(run_cli("raise").exit_code != 0);                // missing required flag
  CHECK(run_cli("no-such-command").exit_code != 0);
}

TEST_CASE("strict promotes conjecture-tier checks", "[cli]") {
  auto soft = run_cli("identity-n3 --N 2 --json");
  REQUIRE(soft.exit_code == 0);
  json sdoc = json::parse(soft.out);
  CHECK(sdoc["checks"][0]["status"] == "reported");

  auto hard = run_cli("identity-n3 --N 2 --strict --json");
  REQUIRE(hard.exit_code == 0);
  json hdoc = json::parse(hard.out);
  CHECK(hdoc["checks"][0]["status"] == "pass");
}

TEST_CASE("n = 3 operator comparison is fiber-exact", "[cli]") {
  auto r = run_cli("compare-ls --n 3 --lambda 2,1 --bound 2 --json");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  const auto& check = doc["checks"][0];
  CHECK(check["id"] == "compare-ls");
  CHECK(check["status"] == "pass");
  CHECK(check["witness"]["fiber_mismatches"] == "0");
}

TEST_CASE("human summary", "[cli]") {
  auto r = run_cli("suite schur --lambda 2,1 --trials 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("qsym 1.0.0") != std::string::npos);
  CHECK(r.out.find("[pass] schur-raising") != std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);
  CHECK(r.out.find("{") == std::string::npos);
}
