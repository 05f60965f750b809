// Integration tests for the installed binary: exit-code contract, output
// determinism, environment overrides, fault injection.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// env_prefix is a shell "VAR=value" assignment list (may be empty).
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  ++counter;
  std::string out_path = "cli_out_" + std::to_string(counter) + ".tmp";
  std::string err_path = "cli_err_" + std::to_string(counter) + ".tmp";
  std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + METABLOCK_CLI_PATH + " " +
                    args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("structure subcommand reports class data") {
  RunResult r = run_cli("structure --p 3 --m 2 --n 1 --l 1");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("class count: 11") != std::string::npos);
  REQUIRE(r.out.find("k(D): 11") != std::string::npos);

  RunResult with_oracle = run_cli("structure --p 3 --m 2 --n 1 --l 1 --oracle");
  REQUIRE(with_oracle.code == 0);
  REQUIRE(with_oracle.out.find("closed-form = oracle: OK") != std::string::npos);
}

TEST_CASE("validation failures exit 2 with a diagnostic") {
  RunResult r = run_cli("structure --p 4 --m 2 --n 1 --l 1");
  REQUIRE(r.code == 2);
  REQUIRE(r.err.find("p must be an odd prime") != std::string::npos);

  REQUIRE(run_cli("invariants --p 3 --m 2 --n 1 --e 5").code == 2);
  REQUIRE(run_cli("replay --which bogus").code == 2);
  REQUIRE(run_cli("").code == 2);  // a subcommand is required
  REQUIRE(run_cli("--help").code == 0);
}

TEST_CASE("invariants subcommand emits the JSON schema") {
  RunResult r = run_cli("invariants --p 5 --m 2 --n 1 --e 4 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("params").at("p") == 5);
  REQUIRE(j.at("invariants").at("k") == "26");
  REQUIRE(j.at("invariants").at("k0") == "25");
  REQUIRE(j.at("provenance") == "proved");

  RunResult extrapolated = run_cli("invariants --p 7 --m 3 --n 1 --e 6");
  REQUIRE(extrapolated.code == 0);
  REQUIRE(extrapolated.out.find("extrapolated") != std::string::npos);

  RunResult csv = run_cli("invariants --p 3 --m 3 --n 2 --e 2 --format csv");
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.find("3,3,2,2,2,63,54,9,2,2,") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical stdout") {
  for (std::string cmd : {std::string("invariants --p 5 --m 2 --n 1 --e 4 --format json"),
                          std::string("structure --p 3 --m 3 --n 2 --l 2 --format json"),
                          std::string("replay --which p5 --format json"),
                          std::string("fusion --p 3 --m 2 --n 1 --e 2 --format json")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
  }

  // --timing writes to stderr only; stdout stays byte-identical.
  RunResult plain = run_cli("invariants --p 3 --m 2 --n 1 --e 2");
  RunResult timed = run_cli("--timing invariants --p 3 --m 2 --n 1 --e 2");
  REQUIRE(plain.out == timed.out);
  REQUIRE(timed.err.find("elapsed_ms=") != std::string::npos);
}

TEST_CASE("fusion subcommand cross-checks the oracle") {
  RunResult r = run_cli("fusion --p 3 --m 2 --n 1 --e 2 --oracle");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("x -> x^8") != std::string::npos);
  REQUIRE(r.out.find("ledger total (k - l): 8") != std::string::npos);
  REQUIRE(r.out.find("closed-form = oracle: OK") != std::string::npos);
}

TEST_CASE("verify subcommand runs the sweep and is jobs-invariant") {
  RunResult r = run_cli("verify --sweep 5 2 2 --jobs 2");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("checks passed") != std::string::npos);
  REQUIRE(r.out.find("FAIL") == std::string::npos);

  RunResult one = run_cli("verify --sweep 7 3 3 --skip-oracle --jobs 1");
  RunResult four = run_cli("verify --sweep 7 3 3 --skip-oracle --jobs 4");
  REQUIRE(one.code == 0);
  REQUIRE(one.out == four.out);
}

TEST_CASE("fault injection must fail the run") {
  RunResult r = run_cli("verify --sweep 5 3 3 --skip-oracle --inject-fault k1");
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("FAIL invariants.k_identity") != std::string::npos);
  REQUIRE(r.out.find("first failure: invariants.k_identity at (p=3,m=2,n=1,l=1)+e=1") !=
          std::string::npos);
  REQUIRE(run_cli("verify --sweep 5 2 2 --inject-fault k2").code == 2);  // unknown fault name
}

TEST_CASE("replay subcommand prints certificates") {
  RunResult amc = run_cli("replay --which amc --p 3 --m 2 --n 1 --e 2");
  REQUIRE(amc.code == 0);
  REQUIRE(amc.out.find("contradiction") != std::string::npos);
  REQUIRE(amc.out.find("L = 42") != std::string::npos);
  REQUIRE(amc.out.find("U = 27") != std::string::npos);

  RunResult primes = run_cli("replay --which primes --range 5 31");
  REQUIRE(primes.code == 0);
  REQUIRE(primes.out.find("infeasible set: {7, 11, 13, 17, 23, 29}") != std::string::npos);

  RunResult p5 = run_cli("replay --which p5 --format json");
  REQUIRE(p5.code == 0);
  auto j = nlohmann::json::parse(p5.out);
  REQUIRE(j.at("certificates").size() == 3);
  REQUIRE(j.at("certificates").at(0).at("kind") == "feasible_witness");

  RunResult ts = run_cli("replay --which two-squares --p 13");
  REQUIRE(ts.code == 0);
  REQUIRE(ts.out.find("witness: (2, 3)") != std::string::npos);
}

TEST_CASE("oracle subcommand and the cap override") {
  RunResult r = run_cli("oracle --p 3 --m 2 --n 1 --l 1 --list-classes");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("class count: 11") != std::string::npos);
  REQUIRE(r.out.find("class x^3 y^0: size 1") != std::string::npos);

  RunResult capped = run_cli("oracle --p 3 --m 2 --n 1 --l 1", "METABLOCK_ORACLE_CAP=10");
  REQUIRE(capped.code == 2);
  REQUIRE(capped.err.find("error:") != std::string::npos);

  RunResult junk = run_cli("oracle --p 3 --m 2 --n 1 --l 1", "METABLOCK_ORACLE_CAP=banana");
  REQUIRE(junk.code == 2);

  // an explicit --cap flag overrides the environment
  RunResult flag = run_cli("oracle --p 3 --m 2 --n 1 --l 1 --cap 27", "METABLOCK_ORACLE_CAP=10");
  REQUIRE(flag.code == 0);
}
