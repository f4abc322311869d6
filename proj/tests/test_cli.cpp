// End-to-end CLI tests: output pins, formats, exit codes, determinism, and
// the configuration round-trip.

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"

#include "acor/config.hpp"

#ifndef ACOR_CLI_PATH
#error "ACOR_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + ACOR_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli correlate reproduces the mu pair value") {
  const RunResult r =
      run_cli("correlate --domain integers --x 10000 --terms mu@0,mu@1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"value\": 12"));
  CHECK(contains(r.out, "\"term_count\": 10000"));
}

TEST_CASE("cli census emits the short-interval lambda grid") {
  const RunResult r = run_cli(
      "census --fn lambda --shifts 0,1 --domain short --x 10000000 --y 1000 "
      "--format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "key,count,empirical,predicted,source"));
  CHECK(contains(r.out, "++,275,"));
  CHECK(contains(r.out, "+-,244,"));
  CHECK(contains(r.out, "-+,243,"));
  CHECK(contains(r.out, "--,239,"));
  CHECK(contains(r.out, "00,0,"));
}

TEST_CASE("cli census json carries the signed combination") {
  const RunResult r = run_cli(
      "census --fn lambda --shifts 0,1 --domain integers --x 10000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"signed_combination\": 112"));
  CHECK(contains(r.out, "\"joined_plus\": 5056"));
  CHECK(contains(r.out, "\"joined_minus\": 4944"));
}

TEST_CASE("cli constants reports value and published reference digits") {
  const RunResult r = run_cli("constants --name zeta2inv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.607927101854026"));  // computed value
  CHECK(contains(r.out, "\"reference\": \"0.607988295164627617135754\""));
}

TEST_CASE("cli sum csv format") {
  const RunResult r = run_cli("sum --kind mertens --x 10000 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "kind,x,value\nmertens,10000,-23\n");
}

TEST_CASE("cli table emits mangoldt structure") {
  const RunResult r = run_cli("table --fn mangoldt --lo 8 --hi 9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"p\": 2"));
  CHECK(contains(r.out, "\"k\": 3"));
  CHECK(contains(r.out, "\"p\": 3"));
  CHECK(contains(r.out, "\"k\": 2"));
}

TEST_CASE("cli output is byte-identical across thread counts") {
  for (const std::string cmd : {
           std::string("correlate --domain integers --x 100000 "
                       "--terms mu2@1 --weight mangoldt"),
           std::string("census --fn mu --shifts 0,1 --domain integers "
                       "--x 100000 --format csv"),
           std::string("sum --kind psi --x 200000"),
       }) {
    const RunResult one = run_cli(cmd + " --threads 1");
    const RunResult four = run_cli(cmd + " --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("cli repro passes end to end") {
  const RunResult r = run_cli("repro");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK(contains(r.out, "mu-pair-integers-1e4"));
  CHECK(contains(r.out, "s0-product-vs-series"));
}

TEST_CASE("cli audit exit code reflects the verdict") {
  const RunResult ok = run_cli("audit --which mu-partition --x 1000");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "\"ok\": true"));
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("correlate --domain integers --x 10000").exit_code == 2);
  CHECK(run_cli("correlate --nope 1 --x 10 --terms mu@0").exit_code == 2);
  CHECK(run_cli("table --fn mu --lo 5 --hi 1").exit_code == 2);
  CHECK(run_cli("sum --kind unknown --x 10").exit_code == 2);
  CHECK(run_cli("constants --name s9").exit_code == 2);
}

TEST_CASE("cli resource guard exits with 1") {
  const RunResult r = run_cli("table --fn mu --lo 1 --hi 200000000");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli hypothesis pins") {
  const RunResult r =
      run_cli("hypothesis --fn mu --shifts 1 --x 1000 --b 0 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "mu,1000,0,163,31,168,"));
}

TEST_CASE("config round-trips through the dump") {
  const RunResult r = run_cli(
      "census --fn mu --shifts 0,1 --domain integers --x 100 --dump-config");
  REQUIRE(r.exit_code == 0);
  const acor::ExperimentConfig cfg = acor::config_from_json(r.out);
  CHECK(cfg.subcommand == "census");
  CHECK(cfg.fn == "mu");
  CHECK(cfg.x == 100);
  CHECK(cfg.shifts == std::vector<acor::i64>{0, 1});
  const std::string again = acor::to_json_string(cfg);
  CHECK(acor::config_from_json(again) == cfg);
  // The dump itself is exactly the serialized form of the parsed config.
  CHECK(again + "\n" == r.out);
}
