#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TUA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("presets generate and solve end to end") {
  const std::string path = tmp_path("d1.txt");
  CHECK(run("gen --preset d1 --out " + path).exit_code == 0);

  const auto solved = run("solve --instance " + path + " --k 1");
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("phi: 1") != std::string::npos);
  CHECK(solved.output.find("winners: e1") != std::string::npos);
  CHECK(solved.output.find("certificate: verified") != std::string::npos);

  const auto infeasible = run("solve --instance " + path + " --k 3");
  CHECK(infeasible.exit_code == 2);
  CHECK(infeasible.output.find("infeasible") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("missing input files exit with a usage error") {
  const auto r = run("solve --instance does_not_exist.txt --k 1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("malformed instances report the offending line") {
  const std::string path = tmp_path("bad.txt");
  std::ofstream(path) << "TU-AUCTION v1\nm 1 n 1\nA\nnope\n";
  const auto r = run("solve --instance " + path + " --k 1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("line") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("random generation is reproducible byte for byte") {
  const std::string a = tmp_path("ra.txt"), b = tmp_path("rb.txt");
  const std::string args = "gen --random --nodes 6 --edges 9 --cost-bound 5 --seed 42";
  CHECK(run(args + " --out " + a).exit_code == 0);
  CHECK(run(args + " --out " + b).exit_code == 0);
  const std::string ta = slurp(a), tb = slurp(b);
  CHECK(!ta.empty());
  CHECK(ta == tb);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("generator argument validation") {
  CHECK(run("gen --random --nodes 6 --edges 0 --cost-bound 5 --seed 1 --out x.txt")
            .exit_code == 1);
  CHECK(run("gen --out x.txt").exit_code != 0);  // neither preset nor random
}

TEST_CASE("verify reports per-check outcomes and an overall verdict") {
  const std::string path = tmp_path("d2.txt");
  REQUIRE(run("gen --preset d2 --out " + path).exit_code == 0);
  const auto r = run("verify --instance " + path + " --kmax 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("theorem1_identity: pass") != std::string::npos);
  CHECK(r.output.find("theorem2_sandwich: pass") != std::string::npos);
  CHECK(r.output.find("theorem3_bound: pass") != std::string::npos);
  CHECK(r.output.find("result: all-pass") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify flags monopolies without failing the run") {
  const std::string path = tmp_path("d3.txt");
  REQUIRE(run("gen --preset d3 --out " + path).exit_code == 0);
  const auto r = run("verify --instance " + path + " --kmax 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("monopoly_free: no (e1)") != std::string::npos);
  CHECK(r.output.find("skipped") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("unimodularity check subcommand") {
  const std::string path = tmp_path("tu.txt");
  REQUIRE(run("gen --preset d4 --out " + path).exit_code == 0);
  const auto ok = run("check tu --instance " + path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("confirmed") != std::string::npos);

  std::ofstream(path) << "TU-AUCTION v1\nm 1 n 1\nA\n2\nb\n1\nc\n1\n";
  const auto bad = run("check tu --instance " + path);
  CHECK(bad.exit_code != 0);
  CHECK(bad.output.find("refuted") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("benchmark subcommands emit exact values") {
  const std::string path = tmp_path("bm.txt");
  REQUIRE(run("gen --preset d2 --out " + path).exit_code == 0);
  const auto mx = run("bench max --instance " + path + " --k 1");
  CHECK(mx.exit_code == 0);
  CHECK(mx.output.find("mu: 6") != std::string::npos);
  const auto mn = run("bench min --instance " + path + " --k 1");
  CHECK(mn.exit_code == 0);
  CHECK(mn.output.find("nu: 6") != std::string::npos);
  CHECK(mn.output.find("gamma: 6") != std::string::npos);
  std::remove(path.c_str());
}
