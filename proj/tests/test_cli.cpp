#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Path of the command-line binary, injected by the build.
#ifndef ODEFRAME_CLI_PATH
#error "ODEFRAME_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string temp_path(const std::string& name) {
  return std::string("cli_scratch_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  std::string out = temp_path("stdout.txt");
  std::string cmd = std::string(ODEFRAME_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
  r.output = read_file(out);
  std::remove(out.c_str());
  return r;
}

}  // namespace

TEST_CASE("repeated runs with a fixed seed are byte-identical") {
  std::string prob = temp_path("det.prob");
  write_file(prob, "k = 3\nrhs = x0^2\nseed = 7\n");
  RunResult a = run("analyze " + prob);
  RunResult b = run("analyze " + prob);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(!a.output.empty());
  CHECK(a.output == b.output);
  std::remove(prob.c_str());
}

TEST_CASE("exit code contract") {
  std::string good = temp_path("good.prob");
  write_file(good, "k = 3\nrhs = 0\n");
  std::string small_k = temp_path("smallk.prob");
  write_file(small_k, "k = 2\nrhs = 0\n");
  std::string bad_key = temp_path("badkey.prob");
  write_file(bad_key, "k = 3\nrhs = 0\nwut = 9\n");
  std::string bad_expr = temp_path("badexpr.prob");
  write_file(bad_expr, "k = 3\nrhs = x0 +\n");

  SUBCASE("success is 0") {
    CHECK(run("analyze " + good).exit_code == 0);
    CHECK(run("verify " + good).exit_code == 0);
  }
  SUBCASE("input rejections are 2") {
    CHECK(run("analyze " + small_k).exit_code == 2);
    CHECK(run("analyze " + bad_key).exit_code == 2);
    CHECK(run("analyze " + bad_expr).exit_code == 2);
    CHECK(run("analyze does_not_exist.prob").exit_code == 2);
    CHECK(run("analyze " + good + " --order 5").exit_code == 2);  // below the pipeline floor
  }
  SUBCASE("internal-consistency failures are 3") {
    CHECK(run("verify " + good + " --corrupt-frame").exit_code == 3);
  }
  SUBCASE("usage problems") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("analyze").exit_code != 0);       // missing file argument
    CHECK(run("frobnicate x").exit_code != 0);  // unknown subcommand
  }

  for (const auto& f : {good, small_k, bad_key, bad_expr}) std::remove(f.c_str());
}

TEST_CASE("verify prints one verdict line per check and an overall verdict") {
  std::string prob = temp_path("verify.prob");
  write_file(prob, "k = 3\nrhs = x1*x2\n");
  RunResult r = run("verify " + prob);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass  regularity") != std::string::npos);
  CHECK(r.output.find("VERIFY PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
  std::remove(prob.c_str());
}

TEST_CASE("compare distinguishes the trivial equation from a curved one") {
  std::string flat = temp_path("cmp_flat.prob");
  write_file(flat, "k = 3\nrhs = 0\n");
  std::string bent = temp_path("cmp_bent.prob");
  write_file(bent, "k = 3\nrhs = x0^2\n");

  RunResult r = run("compare " + flat + " " + bent);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict = distinguishable") != std::string::npos);

  RunResult same = run("compare " + flat + " " + flat);
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("verdict = not distinguished at tested points") != std::string::npos);

  std::string k4 = temp_path("cmp_k4.prob");
  write_file(k4, "k = 4\nrhs = 0\n");
  CHECK(run("compare " + flat + " " + k4).exit_code == 2);  // mismatched k

  for (const auto& f : {flat, bent, k4}) std::remove(f.c_str());
}

TEST_CASE("analyze honors the output-file option") {
  std::string prob = temp_path("outfile.prob");
  write_file(prob, "k = 3\nrhs = 0\n");
  std::string dest = temp_path("report.txt");
  RunResult r = run("analyze " + prob + " -o " + dest);
  CHECK(r.exit_code == 0);
  std::string body = read_file(dest);
  CHECK(body.find("report.schema = odeframe/1") != std::string::npos);
  CHECK(body.find("flat = true") != std::string::npos);
  std::remove(prob.c_str());
  std::remove(dest.c_str());
}

TEST_CASE("full-jet reporting is stable and opt-in") {
  std::string prob = temp_path("jets.prob");
  write_file(prob, "k = 3\nrhs = x0^2\n");
  RunResult plain = run("analyze " + prob);
  CHECK(plain.output.find(".jet = ") == std::string::npos);
  RunResult full = run("analyze " + prob + " --full-jets");
  CHECK(full.exit_code == 0);
  CHECK(full.output.find(".jet = ") != std::string::npos);
  std::remove(prob.c_str());
}
