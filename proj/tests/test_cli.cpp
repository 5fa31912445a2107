#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "einstab/errors.hpp"
#include "einstab/render.hpp"

using namespace einstab;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(EINSTAB_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze flag:e8 as JSON") {
  auto r = run("--format json analyze flag:e8");
  REQUIRE(r.code == 0);
  auto j = ordered_json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["rho"] == "4/15");
  CHECK(j["lambda_p"] == "4/5");
  CHECK(j["verdict"]["kind"] == "G-stable");
  CHECK(j["verdict"]["coindex"] == 0);
  CHECK(j["spectrum"].size() == 3);
  CHECK(j["spectrum"][1]["value"] == "4/5");
  CHECK(j["spectrum"][1]["mult"] == 35);
  CHECK(j.contains("criteria"));
  CHECK(j.contains("errata"));
}

TEST_CASE("JSON round trip") {
  for (const char* spec : {"flag:e8", "som:sphere(3)x3", "e8-spin9", "som:grassmann(3)x2", "grassmann-square:n=4", "som:adjoint(su(3))x2"}) {
    CAPTURE(spec);
    auto r = run(std::string("--format json analyze '") + spec + "'");
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    auto s = j.get<cli::ReportSummary>();
    ordered_json again = s;
    CHECK(again.dump(2) + "\n" == r.out);
    CHECK(again.get<cli::ReportSummary>() == s);
  }
  CHECK_THROWS_AS(ordered_json::parse(R"({"schema_version": 2})").get<cli::ReportSummary>(), ParseError);
  CHECK_THROWS_AS(ordered_json::parse(R"({"schema_version": 1})").get<cli::ReportSummary>(), ParseError);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"--format json analyze flag:e7", "--format csv table IB3", "oracle grassmann:n=3"}) {
    CAPTURE(args);
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  auto r = run("analyze grassmann-square:n=2", true);
  CHECK(r.code == 3);
  CHECK(r.out.find("n >= 3") != std::string::npos);
  CHECK(run("analyze 'flag:'").code == 2);
  CHECK(run("analyze nonsense:x=1").code == 2);
  CHECK(run("analyze flag:e7 --bogus").code == 2);
  CHECK(run("table IC").code == 2);
  CHECK(run("criteria q7 dim_k=3").code == 2);
  CHECK(run("criteria e8 size=3").code == 2);
  CHECK(run("oracle nonsense").code == 2);
  CHECK(run("oracle 'som:sphere(3)+e6-f4'").code == 3);
}

TEST_CASE("analyze markdown") {
  auto r = run("analyze e8-spin9");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| rho | 13/40 |") != std::string::npos);
  CHECK(r.out.find("| lambda_p | 53/60 |") != std::string::npos);
  CHECK(r.out.find("G-stable") != std::string::npos);
  auto c = run("--format csv analyze flag:e6");
  CHECK(c.out.rfind("field,value\n", 0) == 0);
}

TEST_CASE("tables") {
  for (const char* t : {"IA", "IAA", "IB1", "IB2", "IB3"}) {
    CAPTURE(t);
    CHECK(run(std::string("table ") + t).code == 0);
  }
  auto j = ordered_json::parse(run("--format json table IB1").out);
  CHECK(j["summary"]["mismatches"] == 0);
  CHECK(j["summary"]["errata"] == 1);
  auto iaa = run("table IAA").out;
  CHECK(iaa.find("erratum-adjusted (lambda_max)") != std::string::npos);
}

TEST_CASE("criteria") {
  auto r = run("criteria e8 dim_k=24");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sc2-i fires: 24 < 36 → G-stable") != std::string::npos);
  r = run("criteria e6");
  CHECK(r.out.find("| thresholds | 9 and 91/3 |") != std::string::npos);
  // f4 thresholds are 26/5 and 22, so dim k = 14 sits strictly between them
  r = run("--format json criteria g=f4 dim_k=14");
  auto j = ordered_json::parse(r.out);
  CHECK(j["thresholds"] == ordered_json::array({"26/5", "22"}));
  CHECK(j["c2"]["part"] == "none");
  j = ordered_json::parse(run("--format json criteria 'g=so(8)' dim_k=14").out);
  CHECK(j["c2"]["part"] == "sc2-iv");
  j = ordered_json::parse(run("--format json criteria e7 rho=5/18").out);
  CHECK(j["c1"]["part"] == "sc1-i");
  r = run("criteria e8 --dim-k 24");
  CHECK(r.out.find("sc2-i") != std::string::npos);
}

TEST_CASE("oracle") {
  auto r = run("oracle grassmann:n=3");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("[1 1 2] | 2.67857142857 ≈ 75/28 | 75/28") != std::string::npos);
  r = run("oracle 'som:sphere(3)x3'");
  CHECK(r.code == 0);
  CHECK(r.out.find("all targets pass") != std::string::npos);
  r = run("oracle resolve-lambda-max");
  CHECK(r.code == 0);
  CHECK(r.out.find("eigenvector formula confirmed: 13/14") != std::string::npos);
  r = run("--format json oracle all");
  CHECK(r.code == 0);
  CHECK(ordered_json::parse(r.out)["pass"] == true);
}

TEST_CASE("--out writes the file") {
  std::string path = "/tmp/einstab_cli_out_test.json";
  std::remove(path.c_str());
  auto r = run("--format json --out " + path + " analyze flag:e8");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ordered_json::parse(ss.str())["rho"] == "4/15");
}

TEST_CASE("registry override") {
  std::string reg = std::string(EINSTAB_SOURCE_DIR) + "/data/killing_ratios.txt";
  std::string cmd = "EINSTAB_REGISTRY=" + reg + " " + std::string(EINSTAB_CLI_PATH) + " --format json analyze e8-spin9";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  CHECK(pclose(p) == 0);
  CHECK(ordered_json::parse(out)["rho"] == "13/40");
  cmd = "EINSTAB_REGISTRY=/nonexistent " + std::string(EINSTAB_CLI_PATH) + " analyze e8-spin9 2>/dev/null";
  int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
}
