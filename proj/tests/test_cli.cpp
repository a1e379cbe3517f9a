#include "doctest.h"

#include <cstdlib>

#include "json.hpp"
#include "commands.hpp"

using ramlab::cli::run;
using Json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(RAMLAB_FIXTURE_DIR) + "/" + name; }

Json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  const auto r = run(args);
  CHECK_MESSAGE(r.exit_code == expected_exit, r.err);
  REQUIRE(!r.out.empty());
  return Json::parse(r.out);
}

std::string rational(const Json& j) {
  const std::string num = j["num"].dump();
  const std::string den = j["den"].dump();
  return den == "1" ? num : num + "/" + den;
}

Json without_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("bound") {
  const Json j = run_json({"bound", "-p", "3", "-i", "1", "--compare"});
  CHECK(rational(j["crystalline"]) == "2");
  CHECK(rational(j["semistable"]) == "5/2");
  CHECK(rational(j["difference"]) == "1/2");
  CHECK(j["alpha"] == 1);
  CHECK(rational(run_json({"bound", "-p", "2", "-i", "1"})["crystalline"]) == "3");

  const auto degenerate = run({"bound", "-p", "3", "-i", "0"});
  CHECK(degenerate.exit_code == 2);
  CHECK(degenerate.err.find("DegenerateWeightRange") != std::string::npos);
  CHECK(run({"bound", "-p", "4", "-i", "1"}).exit_code == 2);
  CHECK(run({"bound", "-p", "3"}).exit_code == 2);
  CHECK(run({"nonsense"}).exit_code == 2);
}

TEST_CASE("text and csv output") {
  const auto text = run({"--format", "text", "bound", "-p", "3", "-i", "1", "--compare"});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("crystalline: 2\n") != std::string::npos);
  CHECK(text.out.find("semistable: 5/2\n") != std::string::npos);
  const auto csv = run({"--format", "csv", "grid", "--primes", "3", "--imax", "2"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "p,i,alpha,crystalline_num,crystalline_den,semistable_num,semistable_den\n3,1,1,2,1,5,2\n3,2,2,3,1,7,2\n");
  CHECK(run({"--format", "csv", "herbrand", "cyclotomic", "-p", "3", "-n", "2"}).exit_code == 2);
}

TEST_CASE("herbrand") {
  CHECK(rational(run_json({"herbrand", "cyclotomic", "-p", "3", "-n", "2", "--mu"})["mu"]) == "2");
  CHECK(rational(run_json({"herbrand", "kummer-tate", "-p", "3", "--mu"})["mu"]) == "5/2");
  CHECK(rational(run_json({"herbrand", "cyclotomic", "-p", "2", "-n", "1", "--mu"})["mu"]) == "0");
  const Json j = run_json({"herbrand", "cyclotomic", "-p", "3", "-n", "2", "--eval", "3", "--eval", "9", "--inverse", "2"});
  CHECK(j["phi"] == "(0, 0) (1, 1) (3, 2); slope=1/6");
  CHECK(rational(j["phi_values"][0]["phi"]) == "2");
  CHECK(rational(j["phi_values"][1]["phi"]) == "3");
  CHECK(rational(j["psi_values"][0]["psi"]) == "3");
  const Json f = run_json({"herbrand", "file", "--breaks", "order=4; (lambda=1, size=2); (lambda=3, size=1)", "--mu"});
  CHECK(rational(f["mu"]) == "2");
  const auto unsupported = run({"herbrand", "kummer-tate", "-p", "11"});
  CHECK(unsupported.exit_code == 2);
  CHECK(unsupported.err.find("UnsupportedPrime") != std::string::npos);
}

TEST_CASE("solve") {
  const Json r = run_json({"solve", fixture("rank1_p3_i1.json")});
  CHECK(r["cardinality"] == 3);
  CHECK(r["character_exponent"] == 1);
  CHECK(r["galois_permutes"] == true);
  CHECK(r["injective_at_b"] == true);

  const Json unit = run_json({"solve", fixture("unit_p3.json")});
  CHECK(unit["cardinality"] == 3);
  CHECK(unit["character_exponent"] == 0);

  CHECK(run_json({"solve", fixture("rank2_p2.json"), "--depth", "1"})["cardinality"] == 4);
  const Json untilted = run_json({"solve", fixture("rank1_p3_i1.json"), "--mode", "untilted", "--trace"});
  CHECK(untilted["cardinality"] == 3);
  CHECK(untilted["contraction_rate_holds"] == true);
  CHECK(untilted["transcripts"].size() == 3);

  const auto regime = run({"solve", fixture("rank1_p3_i1.json"), "--mode", "untilted", "--level", "0"});
  CHECK(regime.exit_code == 2);
  CHECK(regime.err.find("RegimeViolation") != std::string::npos);
  CHECK(regime.err.find("p^s > a") != std::string::npos);

  const auto height = run({"solve", fixture("height_exceeded_p3.json")});
  CHECK(height.exit_code == 1);
  CHECK(height.err.find("HeightExceeded") != std::string::npos);

  const auto budget = run({"solve", fixture("rank1_p3_i1.json"), "--budget", "2"});
  CHECK(budget.exit_code == 2);
  CHECK(budget.err.find("BudgetExceeded") != std::string::npos);
  CHECK(run({"solve", "/nonexistent.json"}).exit_code == 2);
}

TEST_CASE("verify suites") {
  const Json tate = run_json({"verify", "tate-exclusion", "-p", "3"});
  CHECK(tate["verdict"] == "pass");
  CHECK(rational(tate["checks"][0]["tate_mu"]) == "5/2");
  const Json approx = run_json({"verify", "approx1", "-p", "2", "-i", "1", "--budget", "1e6"});
  CHECK(approx["verdict"] == "pass");
  CHECK(approx["image_size"] == 2);
  CHECK(approx["tstar_size"] == 2);
  CHECK(run_json({"verify", "bounds-grid", "--pmax", "13", "--imax", "50"})["rows"] == 300);
  CHECK(run_json({"verify", "gamma-power", "--count", "20"})["verdict"] == "pass");
  CHECK(run({"verify", "approx1", "-p", "3", "-i", "2", "--budget", "10"}).exit_code == 2);
  CHECK(run({"verify", "unknown"}).exit_code == 2);
}

TEST_CASE("output is deterministic apart from timing") {
  const std::vector<std::string> args{"solve", fixture("rank2_p2.json"), "--depth", "1", "--trace"};
  CHECK(without_timing(run_json(args)) == without_timing(run_json(args)));
  const std::vector<std::string> gp{"verify", "gamma-power", "--count", "10", "--seed", "7"};
  CHECK(without_timing(run_json(gp)) == without_timing(run_json(gp)));
}

TEST_CASE("budget from the environment") {
  setenv("PADIC_RAMLAB_BUDGET", "2", 1);
  const auto r = run({"solve", fixture("rank1_p3_i1.json")});
  unsetenv("PADIC_RAMLAB_BUDGET");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("BudgetExceeded") != std::string::npos);
}
