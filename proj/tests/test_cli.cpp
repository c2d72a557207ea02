#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "confrac/cli.hpp"
#include "confrac/errors.hpp"

using namespace confrac;
using nlohmann::json;

namespace {
struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "confrac");
  std::ostringstream out, err;
  const int status = cli::main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Runs the built binary through the shell and returns its exit status.
int run_binary(const std::vector<std::string>& args, std::string* output = nullptr) {
  std::string cmd = CONFRAC_TOOL_PATH;
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) text += buf;
  const int status = pclose(pipe);
  if (output != nullptr) *output = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

TEST_CASE("parse_decimal accepts plain decimal literals only") {
  CHECK(cli::parse_decimal("1.0") == 1.0);
  CHECK(cli::parse_decimal("-2.5e-3") == -2.5e-3);
  CHECK(cli::parse_decimal("+4") == 4.0);
  for (const char* bad : {"", "1.", ".5", "0x10", "1e", "2*3", "inf", "nan", "1_000"}) {
    CHECK_THROWS_AS(cli::parse_decimal(bad), ArgumentError);
  }
}

TEST_CASE("jacobian command") {
  const auto r = run_cli({"jacobian", "--expr", "sin(x)", "--vars", "x,y", "--point", "1.0,2.0",
                          "--alpha", "0.5"});
  REQUIRE(r.status == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["command"] == "jacobian");
  CHECK(doc["alpha"] == 0.5);
  CHECK(doc["vars"] == json({"x", "y"}));
  CHECK(doc["point"] == json({1.0, 2.0}));
  CHECK(doc["result"][0][0].get<double>() == 0.5403023058681398);
  CHECK(doc["result"][0][1].get<double>() == 0.0);
  CHECK(doc["status"] == "ok");
  CHECK(r.out.find("0.5403023058681398") != std::string::npos);
  CHECK_FALSE(doc.contains("oracle"));
}

TEST_CASE("JSON keys come in schema order and output is reproducible") {
  const std::vector<std::string> args{"verify", "--expr", "x^2*y, x+y^2", "--vars", "x,y",
                                      "--point", "1.0,2.0", "--alpha", "0.5"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "alpha", "vars", "point", "result", "oracle",
                                         "max_delta", "status"});
}

TEST_CASE("partial and tangent commands") {
  const auto p = run_cli({"partial", "--expr", "x^2*y", "--vars", "x,y", "--point", "4.0,2.0",
                          "--alpha", "0.5", "--index", "1"});
  REQUIRE(p.status == 0);
  CHECK(json::parse(p.out)["result"].get<double>() == 2.0 * 2.0 * 4.0 * 2.0);
  const auto byname = run_cli({"partial", "--expr", "x^2*y", "--vars", "x,y", "--point",
                               "4.0,2.0", "--alpha", "0.5", "--index", "x"});
  CHECK(byname.out == p.out);
  CHECK(run_cli({"partial", "--expr", "x^2*y", "--vars", "x,y", "--point", "4.0,2.0", "--alpha",
                 "0.5", "--index", "3"})
            .status == 2);

  const auto t = run_cli({"tangent", "--expr", "t^2", "--vars", "t", "--point", "1.0", "--alpha",
                          "0.5"});
  REQUIRE(t.status == 0);
  CHECK(json::parse(t.out)["result"].get<double>() == 2.0);
  CHECK(run_cli({"tangent", "--expr", "x*y", "--vars", "x,y", "--point", "1.0,1.0", "--alpha",
                 "0.5"})
            .status == 2);
}

TEST_CASE("verify command") {
  const auto r = run_cli({"verify", "--expr", "x^2*y, x+y^2", "--vars", "x,y", "--point",
                          "1.0,2.0", "--alpha", "0.5", "--tol", "1e-5"});
  CHECK(r.status == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["status"] == "PASS");
  CHECK(doc["max_delta"].get<double>() < 1e-5);
  CHECK(doc["result"]["analytic"][1][1].get<double>() == doctest::Approx(5.656854249492380));
  CHECK(doc["oracle"]["jacobian"][0][0].get<double>() == doctest::Approx(4.0));

  // An absurd tolerance makes the oracle disagree: FAIL carries max_delta.
  const auto fail = run_cli({"verify", "--expr", "sin(x)*y", "--vars", "x,y", "--point",
                             "1.0,2.0", "--alpha", "0.5", "--tol", "1e-30", "--levels", "2"});
  CHECK(fail.status == 1);
  const auto fdoc = json::parse(fail.out);
  CHECK(fdoc["status"] == "FAIL");
  CHECK(fdoc["max_delta"].get<double>() > 1e-30);
}

TEST_CASE("chain-check command") {
  const auto r = run_cli({"chain-check", "--expr", "u*v", "--inner", "x+y, x*y", "--vars", "x,y",
                          "--point", "1.0,1.0", "--alpha", "0.5"});
  REQUIRE(r.status == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["status"] == "PASS");
  CHECK(doc["result"]["outer_vars"] == json({"u", "v"}));
  CHECK(doc["result"]["direct"][0][0].get<double>() == doctest::Approx(3.0));
  CHECK(doc["result"]["chain_rhs"][0][1].get<double>() == doctest::Approx(3.0));
  CHECK(doc["max_delta"].get<double>() < 1e-12);

  const auto swapped = run_cli({"chain-check", "--expr", "v*u^2", "--outer-vars", "u,v",
                                "--inner", "x+y, x*y", "--vars", "x,y", "--point", "1.0,1.0",
                                "--alpha", "0.5"});
  CHECK(swapped.status == 0);

  const auto bad = run_cli({"chain-check", "--expr", "u*v", "--inner", "x, x - 2", "--vars", "x",
                            "--point", "1.0", "--alpha", "0.5"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("chain rule needs every inner component positive") != std::string::npos);
}

TEST_CASE("table output") {
  const auto r = run_cli({"jacobian", "--expr", "x^2*y, x+y^2", "--vars", "x,y", "--point",
                          "1.0,2.0", "--alpha", "0.5", "--format", "table"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("command: jacobian") != std::string::npos);
  CHECK(r.out.find("[ 4 1.4142135623730951 ]") != std::string::npos);
}

TEST_CASE("usage and domain errors exit with status 2 and one diagnostic line") {
  const std::vector<std::vector<std::string>> cases{
      {"jacobian", "--expr", "x", "--vars", "x", "--point", "1.0", "--alpha", "1.5"},
      {"jacobian", "--expr", "x", "--vars", "x", "--point", "1.0", "--alpha", "0"},
      {"jacobian", "--expr", "x*y", "--vars", "x,y", "--point", "1.0,-2.0", "--alpha", "0.5"},
      {"jacobian", "--expr", "x*y", "--vars", "x,y", "--point", "1.0", "--alpha", "0.5"},
      {"jacobian", "--expr", "x*", "--vars", "x", "--point", "1.0", "--alpha", "0.5"},
      {"jacobian", "--expr", "x*z", "--vars", "x", "--point", "1.0", "--alpha", "0.5"},
      {"jacobian", "--expr", "ln(x - 1)", "--vars", "x", "--point", "1.0", "--alpha", "0.5"},
      {"jacobian", "--expr", "x", "--vars", "x", "--point", "1+1", "--alpha", "0.5"},
      {"jacobian", "--expr", "x", "--vars", "x", "--point", "1.0"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    const auto r = run_cli(args);
    INFO("args: " << (args.empty() ? std::string("<none>") : args.back()));
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
  const auto r = run_cli({"jacobian", "--expr", "x/y", "--vars", "x,y", "--point", "1.0,-3.0",
                          "--alpha", "0.5"});
  CHECK(r.err.find("point=1,-3") != std::string::npos);
}

TEST_CASE("binary exit codes") {
  std::string out;
  CHECK(run_binary({"jacobian", "--expr", "sin(x)", "--vars", "x,y", "--point", "1.0,2.0",
                    "--alpha", "0.5"},
                   &out) == 0);
  CHECK(json::parse(out)["result"][0][0].get<double>() == 0.5403023058681398);
  CHECK(run_binary({"verify", "--expr", "x^2*y, x+y^2", "--vars", "x,y", "--point", "1.0,2.0",
                    "--alpha", "0.5", "--tol", "1e-5"}) == 0);
  CHECK(run_binary({"verify", "--expr", "sin(x)*y", "--vars", "x,y", "--point", "1.0,2.0",
                    "--alpha", "0.5", "--tol", "1e-30", "--levels", "2"}) == 1);
  CHECK(run_binary({"jacobian", "--expr", "x", "--vars", "x", "--point", "0.0", "--alpha",
                    "0.5"}) == 2);
  CHECK(run_binary({"--help"}) == 0);
}
