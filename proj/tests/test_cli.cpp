#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run sgw_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sgw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse_line(const std::string& s) { return nlohmann::json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST_CASE("point") {
  CHECK(sgw_run({"point", "--k", "4"}).out == "-1/2 * kappa^-3\n");
  const Run r = sgw_run({"point", "--k", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = parse_line(r.out);
  CHECK(j["result"] == nlohmann::json::parse(R"({"coefficient":"1","kappa_exponent":-1})"));
  CHECK(j["command"] == "point");
  CHECK(j["inputs"]["k"] == 3);

  const Run bad = sgw_run({"point", "--k", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("k must be >= 3") != std::string::npos);
}

TEST_CASE("invariant") {
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "3", "--classes", "1,1,1"}).out == "1 * kappa^-3\n");
  CHECK(sgw_run({"invariant", "--n", "2", "--k", "2", "--classes", "2,1"}).out == "3/2 * kappa^-4\n");
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "3", "--classes", "0,0,0"}).out == "0\n");
  CHECK(sgw_run({"invariant", "--n", "2", "--k", "3", "--classes", "2,1,0", "--strategy", "symbolic"}).out == "0\n");
  CHECK(sgw_run({"invariant", "--n", "2", "--k", "1", "--classes", "1", "--strategy", "symbolic"}).out ==
        "3/4 * kappa^-4\n");

  const Run zero = sgw_run({"invariant", "--n", "1", "--k", "2", "--classes", "0,0", "--format", "json"});
  CHECK(parse_line(zero.out)["result"] == nlohmann::json::parse(R"({"zero":true})"));
  const auto j = parse_line(sgw_run({"invariant", "--n", "1", "--k", "1", "--classes", "0", "--format", "json"}).out);
  CHECK(j["inputs"] == nlohmann::json::parse(R"({"n":1,"d":1,"k":1,"classes":[0]})"));
  CHECK(j["result"]["coefficient"] == "-1");
  CHECK(j["result"]["kappa_exponent"] == -2);
}

TEST_CASE("invariant domain errors") {
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "4", "--classes", "1,1,1,1"}).code == 2);
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "2", "--classes", "1"}).code == 2);
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "1", "--classes", "2"}).code == 2);
  CHECK(sgw_run({"invariant", "--n", "3", "--k", "1", "--classes", "1", "--strategy", "symbolic"}).code == 2);
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "1", "--classes", "1", "--strategy", "guess"}).code == 2);
  CHECK(sgw_run({"invariant", "--n", "1", "--k", "1"}).code == 2);
  CHECK(sgw_run({"frobnicate"}).code == 2);
  CHECK(sgw_run({}).code == 2);
  const Run help = sgw_run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("invariant") != std::string::npos);
}

TEST_CASE("same seed gives identical json") {
  const std::vector<std::string> args{"invariant", "--n", "3", "--k", "3", "--classes", "2,1,1",
                                      "--seed", "17", "--trace", "--format", "json"};
  const Run a = sgw_run(args);
  const Run b = sgw_run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = parse_line(a.out);
  CHECK(j["diagnostics"]["seed"] == 17);
  CHECK(j["diagnostics"]["tau_samples"].size() == 3);
  CHECK(j["diagnostics"]["tau_samples"][0]["contributions"].size() == 48);
  CHECK(j["result"]["coefficient"] == "5");

  auto other = args;
  other[8] = "18";
  const Run c = sgw_run(other);
  CHECK(parse_line(c.out)["result"] == j["result"]);
  CHECK(c.out != a.out);
}

TEST_CASE("SGW_SEED sets the default seed") {
  const std::vector<std::string> args{"invariant", "--n", "2", "--k", "1", "--classes", "1", "--format", "json"};
  ::setenv("SGW_SEED", "99", 1);
  const Run env = sgw_run(args);
  ::setenv("SGW_SEED", "junk", 1);
  const Run bad = sgw_run(args);
  ::unsetenv("SGW_SEED");
  auto explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "99"});
  CHECK(env.out == sgw_run(explicit_args).out);
  CHECK(parse_line(env.out)["diagnostics"]["seed"] == 99);
  CHECK(bad.code == 2);
}

TEST_CASE("taut") {
  CHECK(sgw_run({"taut", "--k", "6", "--exps", "1,1,1"}).out == "6\n");
  CHECK(sgw_run({"taut", "--k", "4", "--exps", "1"}).out == "1\n");
  CHECK(sgw_run({"taut", "--k", "5", "--exps", "1,1"}).out == "2\n");
  CHECK(sgw_run({"taut", "--k", "3"}).out == "1\n");
  CHECK(sgw_run({"taut", "--k", "5", "--exps", "1"}).code == 2);
  CHECK(sgw_run({"taut", "--k", "2"}).code == 2);
}

TEST_CASE("quantum") {
  const Run r = sgw_run({"quantum", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("L * L = q\n") != std::string::npos);
  const Run j = sgw_run({"quantum", "--n", "1", "--format", "json"});
  std::istringstream lines(j.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec["command"] == "quantum");
    ++count;
  }
  CHECK(count == 3);
  CHECK(sgw_run({"quantum", "--n", "6"}).code == 2);
}

TEST_CASE("reproduce-paper") {
  const Run r = sgw_run({"reproduce-paper"});
  const bool any_fail = r.out.find("\nFAIL ") != std::string::npos || r.out.rfind("FAIL ", 0) == 0;
  CHECK(r.code == (any_fail ? 1 : 0));
  CHECK(r.out.find("summary: ") != std::string::npos);
  CHECK(r.out.find("SKIP ") != std::string::npos);
  CHECK(r.out.find("PASS  point k=3") != std::string::npos);
}
