#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "qpadic/lfunction.hpp"
#include "qpadic/qparam.hpp"

using namespace qpadic;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("bernoulli exact display at a rational q") {
  auto r = run({"bernoulli", "--n", "0", "--q", "2", "--exact"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["values"][0]["rational_part"] == "0");
  CHECK(j["values"][0]["mu_part"] == "(q - 1)");
  CHECK(j["values"][0]["at_q"]["display"] == "1*mu");

  r = run({"bernoulli", "--n", "1", "--q", "2", "--exact"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["values"][0]["at_q"]["rational"] == "1");
  CHECK(j["values"][0]["at_q"]["mu"] == "-1");
  CHECK(j["values"][0]["at_q"]["display"] == "1 - 1*mu");
}

TEST_CASE("bernoulli p-adic digits reduce the exact value") {
  auto r = run({"bernoulli", "--n", "2", "--p", "5", "--q", "1+5", "--prec", "8"});
  REQUIRE(r.code == 0);
  const auto pj = json::parse(r.out)["values"][0]["value"];

  r = run({"bernoulli", "--n", "2", "--q", "6", "--exact"});
  REQUIRE(r.code == 0);
  const auto ej = json::parse(r.out)["values"][0]["at_q"];
  const PadicQ q(5, 6, 30);
  const PadicScalar expect = PadicScalar::from_rational(5, mpq_class(ej["rational"].get<std::string>()), 30) +
                             PadicScalar::from_rational(5, mpq_class(ej["mu"].get<std::string>()), 30) / q.log_q();
  const PadicScalar got = PadicScalar::from_parts(5, pj["valuation"].get<int>(), mpz_class(pj["unit"].get<std::string>()),
                                                  pj["precision"].get<int>() - pj["valuation"].get<int>());
  CHECK(pj["precision"].get<int>() >= 8);
  CHECK(got.difference_valuation(expect) >= pj["precision"].get<int>());
}

TEST_CASE("lfunction at s = 0 matches the interpolation value") {
  auto r = run({"lfunction", "--p", "5", "--q", "6", "--s", "0", "--t", "0"});
  REQUIRE(r.code == 0);
  const auto v = json::parse(r.out)["results"][0]["value"];
  const PadicScalar got =
      PadicScalar::from_parts(5, v["valuation"].get<int>(), mpz_class(v["unit"].get<std::string>()),
                              v["precision"].get<int>() - v["valuation"].get<int>());
  const auto rhs = interpolation_rhs(1, 0, DirichletCharacter(), 5, 6, 12);
  CHECK(got.difference_valuation(rhs.scalar_part()) >= 10);
}

TEST_CASE("lfunction sweeps") {
  auto r = run({"lfunction", "--s", "0,1/2", "--t", "0,1,5", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);

  r = run({"lfunction", "--s-near-one", "3", "--s", "", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  r = run({"lfunction", "--chi", "3:1", "--s", "1"});
  CHECK(r.code == 0);
  r = run({"lfunction", "--chi", "3:1", "--s", "1", "--variant", "theorem-f"});
  CHECK(r.code == 2);
}

TEST_CASE("characters listing") {
  auto r = run({"characters", "--modulus", "3"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["characters"].size() == 2);
  CHECK(j["characters"][1]["values"] == json::array({"0", "1", "-1"}));
  CHECK(j["characters"][1]["primitive"] == true);

  r = run({"characters", "--modulus", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["characters"].size() == 1);

  r = run({"characters", "--modulus", "5", "--twist", "2", "--p", "5"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["characters"].size() == 4);
  // chi_0 w^-2 is the quadratic character mod 5
  CHECK(j["characters"][0]["values"] == json::array({"0", "1", "-1", "-1", "1"}));
}

TEST_CASE("exit codes") {
  CHECK(run({"--p", "4", "characters"}).code == 2);
  CHECK(run({"characters", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"lfunction", "--s", "1"}).code == 2);
  CHECK(run({"lfunction", "--q", "2"}).code == 2);
  CHECK(run({"lfunction", "--s", "1/5"}).code == 2);
  CHECK(run({"lfunction", "--chi", "3:7"}).code == 2);
  CHECK(run({"lfunction", "--chi", "nonsense"}).code == 2);
  CHECK(run({"lfunction", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"bernoulli", "--exact", "--x", "1/2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed config files") {
  CHECK(run({"--config", "/nonexistent/qpadic.cfg", "characters"}).code == 2);
  for (const char* text : {"p 5\n", "colour=blue\n", "p=five\n", "exact=maybe\n", "precision=-3\n"}) {
    const auto path = write_temp("qpadic_bad.cfg", text);
    CAPTURE(text);
    CHECK(run({"--config", path, "bernoulli"}).code == 2);
  }
}

TEST_CASE("config round trip and precedence") {
  cli::RunConfig c;
  c.p = 7;
  c.q = "1+p^2";
  c.s = {"0", "-1/3"};
  c.suite = {"lemma1", "eq12"};
  c.exact = true;
  c.seed = 99;
  const std::string text = cli::serialize(c);
  CHECK(cli::serialize(cli::parse_config(text, cli::RunConfig{})) == text);

  const auto path = write_temp("qpadic_good.cfg", "# comment\np = 7\nprecision=12\nformat=csv\n");
  setenv("QPADIC_PRECISION", "9", 1);
  auto r = run({"--dump-config", "characters"});
  CHECK(r.out.find("precision=9\n") != std::string::npos);
  r = run({"--config", path, "--dump-config", "characters"});
  CHECK(r.out.find("precision=12\n") != std::string::npos);
  CHECK(r.out.find("p=7\n") != std::string::npos);
  r = run({"--config", path, "--prec", "15", "--dump-config", "characters"});
  CHECK(r.out.find("precision=15\n") != std::string::npos);
  CHECK(r.out.find("format=csv\n") != std::string::npos);
  unsetenv("QPADIC_PRECISION");

  // dumped config reproduces the run
  r = run({"--p", "7", "--dump-config", "lfunction", "--s", "0,-1", "--t", "1/2"});
  const auto dumped = write_temp("qpadic_dumped.cfg", r.out);
  CHECK(run({"--config", dumped, "lfunction"}).out == run({"--p", "7", "lfunction", "--s", "0,-1", "--t", "1/2"}).out);
}

TEST_CASE("verify output is deterministic under a fixed seed") {
  const std::vector<std::string> args = {"verify", "--suite", "lemma1,theorem6", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  auto serial = args;
  serial.push_back("--serial");
  const auto c = run(serial);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto j = json::parse(a.out);
  CHECK(j["suites"][0]["results"].size() == 243);
  CHECK(j["suites"][0].contains("seconds") == false);
}
