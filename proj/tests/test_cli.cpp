#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// captures stdout; append "2>/dev/null" or "2>&1" to the args as needed
RunResult run(const std::string &args) {
  RunResult r;
  std::string cmd = std::string(VBRAID_CLI_PATH) + " " + args;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("gauss subcommand") {
  RunResult r = run("gauss -n 2 \"s1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n=2; perm=2,1; arrows=(1>2:+)\n");

  // strand count inferred from the largest index
  CHECK(run("gauss \"s2\"").out == "n=3; perm=1,3,2; arrows=(2>3:+)\n");

  RunResult j = run("gauss --json -n 2 \"s1\"");
  CHECK(j.out == "{\"arrows\":[{\"from\":1,\"sign\":1,\"to\":2}],\"n\":2,\"perm\":[2,1]}\n");

  RunResult c = run("gauss --canonical \"s2 s1 t1\"");
  CHECK(c.exit_code == 0);

  RunResult bad = run("gauss \"q1\" 2>/dev/null");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("equal subcommand") {
  RunResult vm = run("equal \"t1 t1\" \"\"");
  CHECK(vm.exit_code == 0);
  CHECK(vm.out == "equal\n");

  RunResult far = run("equal \"s1 s2 s1\" \"s2 s1 s2\"");
  CHECK(far.exit_code == 1);
  CHECK(far.out == "distinct\n");

  RunResult reid = run("equal --reid \"s1 s2 s1\" \"s2 s1 s2\"");
  CHECK(reid.exit_code == 0);
  CHECK(reid.out ==
        "equivalent\ntrace=[{\"arrows\":[0,1,2],\"direction\":\"forward\",\"kind\":\"omega3\"}]\n");

  RunResult ineq = run("equal --reid \"s1\" \"s1'\"");
  CHECK(ineq.exit_code == 1);
  CHECK(ineq.out.find("inequivalent\ncertificate=writhe") == 0);

  RunResult unk = run("equal --reid --budget 0 \"s1 s2 s1\" \"s2 s1 s2\"");
  CHECK(unk.exit_code == 2);
  CHECK(unk.out == "unknown\nnodes=0\n");
}

TEST_CASE("budget environment variable") {
  // two moves apart: a starved search gives up, the default finds it
  RunResult starved;
  {
    std::string cmd = "VBRAID_BUDGET=1 " + std::string(VBRAID_CLI_PATH) +
                      " equal --reid \"s1 s2 s1 s1 s1'\" \"s2 s1 s2\"";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 512> buf;
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) starved.out += buf.data();
    starved.exit_code = WEXITSTATUS(pclose(p));
  }
  CHECK(starved.exit_code == 2);
  CHECK(starved.out == "unknown\nnodes=1\n");

  RunResult fine = run("equal --reid \"s1 s2 s1 s1 s1'\" \"s2 s1 s2\"");
  CHECK(fine.exit_code == 0);
  CHECK(fine.out.find("equivalent\n") == 0);
}

TEST_CASE("genus subcommand") {
  CHECK(run("genus \"t1 s1 t1 s1\"").out == "genus=0\n");
  RunResult g2 = run("genus \"t2 s1 t3 s3 t1 t2\"");
  CHECK(g2.out == "genus=2\n");
  RunResult mini = run("genus --minimize --budget 200 \"s1 t1\"");
  CHECK(mini.exit_code == 0);
  CHECK(mini.out.find("genus=0\nwitness=") == 0);
}

TEST_CASE("graph subcommand") {
  RunResult r = run("graph -n 1 \"\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ribbon n=1 vertices=2 edges=3\n") == 0);
}

TEST_CASE("realize subcommand") {
  RunResult arg = run("realize \"n=3; perm=1,2,3; arrows=(1>3:+)\"");
  CHECK(arg.exit_code == 0);
  CHECK(arg.out == "t2 s1 t1 t2\n");

  RunResult piped;
  {
    std::string cmd = "echo 'n=2; perm=2,1; arrows=(1>2:+)' | " +
                      std::string(VBRAID_CLI_PATH) + " realize";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 512> buf;
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) piped.out += buf.data();
    piped.exit_code = WEXITSTATUS(pclose(p));
  }
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == "s1\n");
}

TEST_CASE("selftest subcommands") {
  RunResult pv = run("selftest pv -n 3");
  CHECK(pv.exit_code == 0);
  CHECK(pv.out == "pv n=3 instances=6 ok\n");

  RunResult rt = run("selftest roundtrip --trials 25 --seed 7");
  CHECK(rt.exit_code == 0);
  CHECK(rt.out == "roundtrip trials=25 ok\n");
}
