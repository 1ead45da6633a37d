#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the real binary through the shell, capturing stdout and exit code.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += ' ';
  cmd += '"';
  cmd += CAYLEYLAB_CLI_PATH;
  cmd += "\" ";
  cmd += args;
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  return result;
}

nlohmann::json parse_json(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("cli exact: documented json example") {
  const CliResult r = run_cli("exact --n 5 --k 2 --t 1 --output json");
  REQUIRE(r.code == 0);
  const nlohmann::json j = parse_json(r.out);
  CHECK(j.at("n") == 5);
  CHECK(j.at("k") == 2);
  CHECK(j.at("t") == 1);
  CHECK(j.at("p_num") == "5");
  CHECK(j.at("p_den") == "6");
}

TEST_CASE("cli exact: csv output and degenerate instance") {
  CHECK(run_cli("exact --n 5 --k 2 --t 1 --output csv").out ==
        "n,k,t,p_num,p_den\n5,2,1,5,6\n");
  const CliResult edge = run_cli("exact --n 2 --k 1 --t 0");
  REQUIRE(edge.code == 0);
  const nlohmann::json j = parse_json(edge.out);
  CHECK(j.at("p_num") == "1");
  CHECK(j.at("p_den") == "1");
}

TEST_CASE("cli exit codes: usage errors are 2") {
  CHECK(run_cli("exact --n 5 --t 1").code == 2);       // missing required --k
  CHECK(run_cli("").code == 2);                        // subcommand required
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("exact --n 5 --k 2 --t 1 --output yaml").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("exact --help").code == 0);
}

TEST_CASE("cli exit codes: precondition violations are 3") {
  CHECK(run_cli("exact --n 5 --k 9 --t 1").code == 3);   // k > n-1
  CHECK(run_cli("exact --n 5 --k 2 --t 3").code == 3);   // 2t > n-1
  CHECK(run_cli("bounds --regime general --n 3 --k 1").code == 3);
  CHECK(run_cli("simulate --group Zfoo --k 2").code == 3);
  CHECK(run_cli("simulate --group Z2^4 --k 0 --trials 10").code == 3);
  CHECK(run_cli("threshold-scan --t-min 1 --t-max 8").code == 3);
  CHECK(run_cli("asymptotics --regime linear").code == 3);      // needs --c
  CHECK(run_cli("asymptotics --regime sublinear --alpha 0.4").code == 3);
}

TEST_CASE("cli exit codes: feasibility guards are 4") {
  // Z2^22 x Z2 exceeds the structural order cap.
  CHECK(run_cli("simulate --group Z2^22xZ2 --k 3 --trials 1").code == 4);
  CHECK(run_cli("group-info --group Z2^22xZ2").code == 4);
}

TEST_CASE("cli bounds: abelian regime documented example") {
  const CliResult r = run_cli("bounds --regime abelian --d 3 --k 3");
  REQUIRE(r.code == 0);
  const nlohmann::json j = parse_json(r.out);
  CHECK(j.at("n") == 8);
  CHECK(j.at("k") == 3);
  CHECK(j.at("t_used") == 3);
  CHECK(j.at("p_num") == "4");
  CHECK(j.at("p_den") == "7");
  CHECK(j.at("lower_num") == "1");
  CHECK(j.at("lower_den") == "7");
  CHECK(j.at("upper_num") == "1");
  CHECK(j.at("upper_den") == "1");
  CHECK(j.at("raw_upper_num") == "4");
  CHECK(j.at("raw_upper_den") == "1");
  CHECK(j.at("regime") == "elem_abelian_2");
}

TEST_CASE("cli bounds: general regime with and without t override") {
  const nlohmann::json j =
      parse_json(run_cli("bounds --regime general --n 16 --k 8").out);
  CHECK(j.at("t_used") == 1);
  CHECK(j.at("raw_upper_num") == "11");
  CHECK(j.at("raw_upper_den") == "1");
  CHECK(j.at("upper_num") == "1");
  const nlohmann::json jt =
      parse_json(run_cli("bounds --regime general --n 16 --k 8 --t 2").out);
  CHECK(jt.at("t_used") == 2);
}

TEST_CASE("cli simulate: deterministic replay and thread invariance") {
  const std::string args = "simulate --group Z2^4 --k 5 --trials 5000 --seed 99";
  const CliResult one = run_cli(args, "CAYLEYLAB_THREADS=1");
  const CliResult eight = run_cli(args, "CAYLEYLAB_THREADS=8");
  const CliResult replay = run_cli(args);
  REQUIRE(one.code == 0);
  CHECK(one.out == eight.out);
  CHECK(one.out == replay.out);
  const nlohmann::json j = parse_json(one.out);
  CHECK(j.at("group_spec") == "Z2^4");
  CHECK(j.at("n") == 16);
  CHECK(j.at("k") == 5);
  CHECK(j.at("trials") == 5000);
  CHECK(j.at("seed") == 99);
  const long hits = j.at("hits").get<long>();
  CHECK(j.at("point").get<double>() == static_cast<double>(hits) / 5000);
}

TEST_CASE("cli simulate: default seed is the documented constant") {
  const nlohmann::json j =
      parse_json(run_cli("simulate --group Z5 --k 1 --trials 200").out);
  CHECK(j.at("seed") == 0xCA11E7);
  // Every 1-subset of Z5 generates a directed 5-cycle: diameter 4.
  CHECK(j.at("point").get<double>() == 1.0);
  CHECK(j.at("hits") == 200);
}

TEST_CASE("cli simulate: per-target mode via --y") {
  const CliResult r =
      run_cli("simulate --group Z2^3 --y 5 --k 3 --trials 2000 --seed 7");
  REQUIRE(r.code == 0);
  const nlohmann::json j = parse_json(r.out);
  CHECK(j.at("y") == 5);
  // True value is p(8,3,3) = 4/7; 2000 trials stay well inside +-0.1.
  const double point = j.at("point").get<double>();
  CHECK(point > 0.45);
  CHECK(point < 0.68);
  CHECK(run_cli("simulate --group Z2^3 --y 0 --k 3 --trials 10").code == 3);
  CHECK(run_cli("simulate --group Z2^3 --y 8 --k 3 --trials 10").code == 3);
}

TEST_CASE("cli simulate: csv header") {
  const CliResult r =
      run_cli("simulate --group Z12 --k 3 --trials 100 --output csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "group_spec,n,k,trials,hits,point,ci_low,ci_high,seed");
}

TEST_CASE("cli group-info") {
  const nlohmann::json j = parse_json(run_cli("group-info --group Q8xZ2^2").out);
  CHECK(j.at("spec") == "Q8xZ2^2");
  CHECK(j.at("order") == 32);
  CHECK(j.at("elem_abelian_2") == false);
  CHECK(j.at("max_sqrt_ratio_num") == "3");
  CHECK(j.at("max_sqrt_ratio_den") == "4");
  CHECK(j.at("axioms_ok") == true);
  CHECK(run_cli("group-info --group Z2^5 --output csv").out ==
        "spec,order,elem_abelian_2,max_sqrt_ratio,axioms_ok\n"
        "Z2^5,32,true,0/1,true\n");
}

TEST_CASE("cli asymptotics: single-point runs in each regime") {
  const nlohmann::json sq =
      parse_json(run_cli("asymptotics --regime sqrt --c 1 --d 12 --output json").out);
  REQUIRE(sq.at("rows").size() == 1);
  CHECK(sq.at("rows")[0].at("regime") == "sqrt");
  CHECK(sq.at("rows")[0].at("n_or_t") == 4096);
  CHECK(sq.at("rows")[0].at("k") == 64);
  CHECK(sq.at("rows")[0].at("relative_error").get<double>() < 1e-3);

  const nlohmann::json lin = parse_json(
      run_cli("asymptotics --regime linear --c 0.25 --n 240 --output json").out);
  REQUIRE(lin.at("rows").size() == 1);
  CHECK(lin.at("rows")[0].at("k") == 60);
  CHECK(lin.at("rows")[0].at("relative_error").get<double>() < 0.07);

  const nlohmann::json sub = parse_json(
      run_cli("asymptotics --regime sublinear --alpha 0.75 --n 4096 --output json").out);
  REQUIRE(sub.at("rows").size() == 1);
  CHECK(sub.at("rows")[0].at("k") == 512);
  CHECK(sub.at("rows")[0].at("relative_error").get<double>() < 0.05);

  const CliResult csv = run_cli("asymptotics --regime sqrt --c 1 --d 12");
  CHECK(csv.out.substr(0, csv.out.find('\n')) ==
        "regime,n_or_t,k,exact_value,rate_prediction,relative_error");
}

TEST_CASE("cli threshold-scan") {
  const CliResult r = run_cli("threshold-scan --t-min 64 --t-max 256 --output csv");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,k_star,upper_bound");
  std::getline(lines, line);
  CHECK(line.rfind("64,33,", 0) == 0);  // k* = ceil(2 sqrt(64 ln 64)) = 33
  std::getline(lines, line);
  CHECK(line.rfind("128,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("256,", 0) == 0);
  CHECK_FALSE(std::getline(lines, line));

  const nlohmann::json j =
      parse_json(run_cli("threshold-scan --t-min 64 --t-max 256 --output json").out);
  CHECK(j.at("rows").size() == 3);
  // The refined threshold uses a strictly larger k at the same t.
  const nlohmann::json refined = parse_json(
      run_cli("threshold-scan --t-min 64 --t-max 64 --refined --output json").out);
  CHECK(refined.at("rows")[0].at("k_star").get<long>() >= 33);
}

TEST_CASE("cli --out writes the file instead of stdout") {
  const std::string path = "/tmp/cayleylab_cli_test_out.json";
  const CliResult r = run_cli("exact --n 5 --k 2 --t 1 --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const nlohmann::json j = parse_json(buf.str());
  CHECK(j.at("p_num") == "5");
  std::remove(path.c_str());
}
