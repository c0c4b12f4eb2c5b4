#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "eds/io.hpp"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(EDS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
  std::vector<nlohmann::json> lines;
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::size_t end = out.find('\n', pos);
    if (end == std::string::npos) end = out.size();
    std::string line = out.substr(pos, end - pos);
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
    pos = end + 1;
  }
  return lines;
}

const char* kCurve1 = "--curve 0,0,0,1,1 --point 0,1";
const char* kCurve6 = "--curve 0,0,0,1,6 --point -1,2";

}  // namespace

TEST_CASE("sequence subcommand emits the beta columns", "[cli]") {
  CmdResult res = run_cli(std::string("sequence ") + kCurve1 + " --max-n 4");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 5);
  const char* betas[] = {"0", "1", "2", "-1", "-36"};
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(lines[n]["n"] == static_cast<long>(n));
    CHECK(lines[n]["beta"] == betas[n]);
  }
  CHECK(lines[2]["x"] == "1/4");
  CHECK(lines[0]["is_identity"] == true);
  CHECK_FALSE(lines[0].contains("x"));

  CmdResult res6 = run_cli(std::string("sequence ") + kCurve6 + " --max-n 5");
  REQUIRE(res6.status == 0);
  auto lines6 = json_lines(res6.out);
  const char* betas6[] = {"0", "1", "1", "-1", "-3", "1"};
  REQUIRE(lines6.size() == 6);
  for (std::size_t n = 0; n < 6; ++n) CHECK(lines6[n]["beta"] == betas6[n]);
}

TEST_CASE("sequence with max-n 0 prints the zero row only", "[cli]") {
  CmdResult res = run_cli(std::string("sequence ") + kCurve1 + " --max-n 0");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["n"] == 0);
  CHECK(lines[0]["B"] == "0");
  CHECK(lines[0]["g"] == "1");
}

TEST_CASE("sequence csv format", "[cli]") {
  CmdResult res = run_cli(std::string("sequence ") + kCurve1 +
                          " --max-n 2 --format csv");
  REQUIRE(res.status == 0);
  CHECK(res.out ==
        "n,is_identity,B,beta,h,g,x\n"
        "0,true,0,0,0,1,\n"
        "1,false,1,1,1,1,0\n"
        "2,false,2,2,2,1,1/4\n");
}

TEST_CASE("sequence output is byte-identical across runs", "[cli]") {
  std::string args = std::string("sequence ") + kCurve6 + " --max-n 12";
  CmdResult first = run_cli(args);
  CmdResult second = run_cli(args);
  REQUIRE(first.status == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("profile subcommand", "[cli]") {
  CmdResult res = run_cli(std::string("profile ") + kCurve6);
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 1);
  const nlohmann::json& profile = lines[0];
  CHECK(profile["delta"] == "-15616");
  CHECK(profile["M"] == 3);
  REQUIRE(profile["primes"].size() == 2);
  CHECK(profile["primes"][0]["p"] == "2");
  CHECK(profile["primes"][0]["ord_delta"] == 8);
  CHECK(profile["primes"][0]["r"] == 3);
  CHECK(profile["primes"][1]["p"] == "61");
  CHECK(profile["primes"][1]["r"] == 1);

  CmdResult res1 = run_cli(std::string("profile ") + kCurve1);
  REQUIRE(res1.status == 0);
  CHECK(json_lines(res1.out)[0]["M"] == 1);
}

TEST_CASE("generate subcommand", "[cli]") {
  CmdResult res = run_cli("generate --initial 1,2,-1,-36 --count 5");
  REQUIRE(res.status == 0);
  CHECK(res.out == "0\n1\n2\n-1\n-36\n-287\n");

  CmdResult echo = run_cli("generate --initial 1,1,-1,1 --count 4");
  REQUIRE(echo.status == 0);
  CHECK(echo.out == "0\n1\n1\n-1\n1\n");

  CmdResult bad = run_cli("generate --initial 1,2,-1,-35 --count 5");
  CHECK(bad.status == 2);
}

TEST_CASE("verify main on the sharpness example", "[cli]") {
  CmdResult res = run_cli(std::string("verify main ") + kCurve6 + " --bound 12");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() >= 2);
  const nlohmann::json& summary = lines.back();
  CHECK(summary["qualifying_violations"] == 0);
  CHECK(summary["nonqualifying_nonzero"].get<long>() >= 1);
  bool saw_642 = false;
  for (const auto& line : lines) {
    if (line.contains("m") && line["m"] == 4 && line["n"] == 6 && line["r"] == 2) {
      saw_642 = true;
      CHECK(line["qualifying"] == false);
      CHECK(line["defect"] != "0");
    }
  }
  CHECK(saw_642);
}

TEST_CASE("verify main csv mode", "[cli]") {
  CmdResult res = run_cli(std::string("verify main ") + kCurve6 +
                          " --bound 4 --format csv");
  REQUIRE(res.status == 0);
  CHECK(res.out.rfind("m,n,r,qualifying,defect\n", 0) == 0);
  CHECK(res.out.find("1,1,1,false,0\n") != std::string::npos);
  CHECK(res.out.find("3,3,3,true,0\n") != std::string::npos);
}

TEST_CASE("verify main rejects torsion points", "[cli]") {
  CmdResult res = run_cli("verify main --curve 0,-1,1,0,0 --point 0,0 --bound 6");
  CHECK(res.status == 2);
}

TEST_CASE("verify ward passes on both contexts", "[cli]") {
  for (const char* ctx : {kCurve1, kCurve6}) {
    CmdResult res = run_cli(std::string("verify ward ") + ctx + " --bound 30");
    REQUIRE(res.status == 0);
    auto lines = json_lines(res.out);
    REQUIRE(lines.size() == 1);  // violations would add lines
    CHECK(lines[0]["violations"] == 0);
  }
}

TEST_CASE("verify gcd-law", "[cli]") {
  CmdResult res = run_cli(std::string("verify gcd-law ") + kCurve6 +
                          " --bound 12 --p 2");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  CHECK(lines.back()["violations"] == 0);
}

TEST_CASE("verify cheon", "[cli]") {
  CmdResult res = run_cli(std::string("verify cheon ") + kCurve6 +
                          " --p 2 --bound 20");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 21);
  CHECK(lines.back()["mismatches"] == 0);
  // r(2,P) = 1 on the other curve: a validation error, not a failure.
  CmdResult inapplicable =
      run_cli(std::string("verify cheon ") + kCurve1 + " --p 2 --bound 5");
  CHECK(inapplicable.status == 2);
}

TEST_CASE("verify identity", "[cli]") {
  CmdResult res = run_cli("verify identity --curve 0,0,0,1,1 --bound 3");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 7);  // 6 pairs + summary
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i]["holds"] == true);
  CHECK(lines.back()["failures"] == 0);
}

TEST_CASE("verify torsion", "[cli]") {
  CmdResult res = run_cli("verify torsion --curve 0,-1,1,0,0 --point 0,0 --bound 8");
  REQUIRE(res.status == 0);
  auto lines = json_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["status"] == "checked");
  CHECK(lines[0]["torsion_order"] == 5);
  CHECK(lines[0]["M"] == 1);
  CHECK(lines[0]["violations"] == 0);

  CmdResult nontors = run_cli(std::string("verify torsion ") + kCurve1);
  CHECK(nontors.status == 2);

  // Torsion but singular mod 2: reported as skipped, not as a failure.
  CmdResult skipped = run_cli("verify torsion --curve 0,0,0,-1,0 --point 1,0");
  REQUIRE(skipped.status == 0);
  auto skipped_lines = json_lines(skipped.out);
  REQUIRE(skipped_lines.size() == 1);
  CHECK(skipped_lines[0]["status"] == "skipped");
  CHECK(skipped_lines[0]["M"] == 2);
}

TEST_CASE("parse and validation failures exit with 2", "[cli]") {
  CHECK(run_cli("sequence --curve 0,0,0,1 --point 0,1 --max-n 2").status == 2);
  CHECK(run_cli("sequence --curve 0,0,0,1,1 --point 0,2 --max-n 2").status == 2);
  CHECK(run_cli("sequence --curve 0,0,0,0,0 --point 0,0 --max-n 2").status == 2);
  CHECK(run_cli("sequence --curve 0,0,0,1,1 --point 0x,1 --max-n 2").status == 2);
  CHECK(run_cli("verify cheon --curve 0,0,0,1,6 --point -1,2 --p 4 --bound 3").status == 2);
}

TEST_CASE("parsing round-trips decimal strings", "[cli]") {
  using namespace eds;
  CHECK(dec(parse_int("-1234567890123456789012345")) ==
        "-1234567890123456789012345");
  CHECK(dec(parse_rational("22/-8")) == "-11/4");
  CHECK(dec(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_int("12 34"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_point("1,2,3"), Error);
  WeierstrassCurve c = parse_curve(" 0, 0, 0, 1, 6 ");
  CHECK(c.a6 == 6);
  RationalPoint p = parse_point("1/4,-9/8");
  CHECK(p.x() == make_rat(1, 4));
}
