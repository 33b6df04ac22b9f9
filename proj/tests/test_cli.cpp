#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = polarmm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), "--json");
  const Outcome o = run(args);
  CHECK(o.code == expected_code);
  return json::parse(o.out);
}

// The published report schema.
void check_schema(const json& j, const std::string& command) {
  REQUIRE(j.is_object());
  CHECK(j.size() == 4);
  CHECK(j.at("command") == command);
  CHECK(j.at("inputs").is_object());
  CHECK(j.at("results").is_object());
  const std::string verdict = j.at("verdict");
  CHECK((verdict == "pass" || verdict == "fail" || verdict == "info"));
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(POLARMM_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(run({"reproduce-paper"}).code == 0);
  const Outcome zeta = run({"polarize", "cm", "--field", "Qzeta5", "--alpha", "1+1*w"});
  CHECK(zeta.code == 1);
  CHECK(zeta.out.find("verdict: fail") != std::string::npos);
  const Outcome zero = run({"polarize", "cm", "--field", "Qi", "--alpha", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("nonzero") != std::string::npos);
}

TEST_CASE("every subcommand emits schema-conforming JSON") {
  const std::string matrix = write_temp("alpha.json", R"({"matrix": [[1,0,1,0],[0,1,0,1],[1,0,-1,0],[0,1,0,-1]]})");
  struct Case {
    std::vector<std::string> args;
    std::string command;
    int code;
  };
  const std::vector<Case> cases{
      {{"polarize", "cm", "--alpha", "2+1*w"}, "polarize cm", 0},
      {{"polarize", "pair", "--alpha", "2+1*w"}, "polarize pair", 0},
      {{"polarize", "pair", "--alpha", "1+1*w"}, "polarize pair", 1},
      {{"polarize", "matrix", "--file", matrix, "--other-example", "beta"}, "polarize matrix", 0},
      {{"curve", "two-torsion"}, "curve two-torsion", 0},
      {{"curve", "kernel", "--multiplier", "2+1*w"}, "curve kernel", 0},
      {{"curve", "criterion", "--multiplier", "2+1*w"}, "curve criterion", 0},
      {{"curve", "criterion", "--multiplier", "1+1*w"}, "curve criterion", 1},
      {{"lattes", "build", "--multiplier", "2-1*w", "--samples", "5"}, "lattes build", 0},
      {{"dynamics", "orbit", "--map-of", "2+1*w", "--start", "w"}, "dynamics orbit", 0},
      {{"dynamics", "height-probe", "--map-of", "2+1*w", "--start", "3/2"}, "dynamics height-probe", 0},
      {{"dynamics", "verify-counterexample", "--orders", "2,3"}, "dynamics verify-counterexample", 0},
      {{"frobenius", "identify", "--p", "13"}, "frobenius identify", 0},
      {{"frobenius", "verify", "--p", "5"}, "frobenius verify", 0},
      {{"reproduce-paper"}, "reproduce-paper", 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.command);
    const json j = run_json(c.args, c.code);
    check_schema(j, c.command);
    CHECK(json::parse(j.dump()) == j);
  }
}

TEST_CASE("report payloads") {
  const json cm = run_json({"polarize", "cm", "--alpha", "2+1*w"}, 0);
  CHECK(cm["results"]["weight"] == 5);
  CHECK(cm["results"]["reason"] == "norm-is-integer");

  const json crit = run_json({"curve", "criterion", "--multiplier", "1+1*w"}, 1);
  CHECK(crit["results"]["criterion"]["kernel_two_torsion"] == 2);
  CHECK(crit["results"]["oracle"]["principal"] == false);
  CHECK(crit["results"]["agree"] == true);

  const json mat = run_json({"polarize", "matrix", "--example", "alpha", "--other-example", "beta"}, 0);
  CHECK(mat["results"]["weight"] == 2);
  CHECK(mat["results"]["power_coincidence"] == 2);

  const json lat = run_json({"lattes", "build", "--multiplier", "2+1*w", "--expect-paper-phi", "--samples", "10"}, 0);
  CHECK(lat["results"]["matches_reference"] == true);
  CHECK(lat["results"]["numerator"] == json({"0", "-25", "0", "-10-20*w", "0", "3-4*w"}));
  CHECK(lat["results"]["denominator"] == json({"-3+4*w", "0", "10+20*w", "0", "25"}));
  CHECK(lat["results"]["degree"] == 5);

  const json frob = run_json({"frobenius", "verify", "--p", "13", "--iota-choice", "1"}, 0);
  CHECK(frob["results"]["norm"] == 13);
  CHECK(frob["results"]["checks"]["passed"] == true);

  const json ce = run_json({"dynamics", "verify-counterexample"}, 0);
  CHECK(ce["results"]["stages"].size() == 4);
  CHECK(ce["results"]["verdict"] == "counterexample verified at desk scale");
}

TEST_CASE("negative controls exit 1") {
  CHECK(run({"dynamics", "verify-counterexample", "--corrupt-formula", "--orders", "2"}).code == 1);
  const json neg = run_json({"dynamics", "verify-counterexample", "--stage4-multiplier", "1+1*w", "--orders", "2"}, 1);
  CHECK(neg["results"]["stages"][3]["pass"] == false);
  CHECK(neg["results"]["stages"][3]["details"].get<std::string>().find("order 4") != std::string::npos);
  CHECK(run({"lattes", "build", "--multiplier", "1+1*w", "--expect-paper-phi"}).code == 1);
}

TEST_CASE("reproduce-paper is deterministic and honours --seed") {
  const Outcome a = run({"--json", "reproduce-paper"});
  const Outcome b = run({"reproduce-paper", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["inputs"]["seed"] == 20240229);
  CHECK(j["results"]["stages"].size() == 8);
  for (const auto& s : j["results"]["stages"]) {
    CAPTURE(s["name"].get<std::string>());
    CHECK(s["pass"] == true);
  }
  const Outcome c = run({"--json", "--seed", "7", "reproduce-paper"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["inputs"]["seed"] == 7);
  CHECK(c.out != a.out);
}

TEST_CASE("usage errors exit 2 with targeted messages") {
  struct Case {
    std::vector<std::string> args;
    std::string message;
  };
  const std::vector<Case> cases{
      {{"polarize", "cm", "--alpha", "2+"}, "malformed element literal"},
      {{"polarize", "cm", "--field", "Qsqrt7", "--alpha", "1"}, "unknown field"},
      {{"frobenius", "identify", "--p", "10009"}, "exceeds"},
      {{"frobenius", "identify", "--p", "7"}, "inert"},
      {{"frobenius", "identify", "--p", "2"}, "ramified"},
      {{"frobenius", "identify", "--p", "15"}, "not prime"},
      {{"curve", "kernel", "--multiplier", "1/2"}, "not a Gaussian integer"},
      {{"curve", "criterion", "--multiplier", "0"}, "zero multiplier"},
      {{"curve", "two-torsion", "--curve", R"({"a": 0, "b": 1})"}, "does not split"},
      {{"curve", "two-torsion", "--curve", "{bad"}, "malformed curve JSON"},
      {{"polarize", "matrix", "--file", "/nonexistent/m.json"}, "cannot read"},
      {{"polarize", "matrix", "--example", "gamma"}, "unknown example matrix"},
      {{"dynamics", "orbit", "--map-of", "2+1*w", "--start", "0", "--budget", "0"}, "budget"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.message);
    const Outcome o = run(c.args);
    CHECK(o.code == 2);
    CHECK(o.err.find(c.message) != std::string::npos);
  }
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"polarize", "cm"}).code == 2);  // --alpha is required
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("usage errors still produce JSON under --json") {
  const Outcome o = run({"--json", "polarize", "cm", "--alpha", "0"});
  CHECK(o.code == 2);
  const json j = json::parse(o.out);
  CHECK(j["verdict"] == "usage-error");
  CHECK(j["command"] == "polarize cm");
}

TEST_CASE("config file mirrors flags; the command line wins") {
  const std::string cfg = write_temp("cfg.json", R"({"json": true, "alpha": "1+1*w", "field": "Qzeta5"})");
  const Outcome o = run({"polarize", "cm", "--config", cfg});
  CHECK(o.code == 1);
  const json j = json::parse(o.out);
  CHECK(j["inputs"]["field"] == "Qzeta5");

  const Outcome override = run({"polarize", "cm", "--config", cfg, "--field", "Qi"});
  CHECK(override.code == 0);
  CHECK(json::parse(override.out)["inputs"]["field"] == "Qi");

  const std::string orders = write_temp("orders.json", R"({"orders": [2, 3], "n_max": 2})");
  const json ce = run_json({"dynamics", "verify-counterexample", "--config", orders}, 0);
  CHECK(ce["inputs"]["orders"] == json({2, 3}));
  CHECK(ce["inputs"]["n_max"] == 2);

  CHECK(run({"reproduce-paper", "--config", "/nonexistent.json"}).code == 2);
}
