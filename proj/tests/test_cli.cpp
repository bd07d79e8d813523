#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxclass/cli.hpp"
#include "maxclass/enumeration.hpp"
#include "maxclass/zeta.hpp"

using maxclass::run_cli;

namespace {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tk evaluates exactly") {
  CHECK(cli({"tk", "--k", "2", "--j", "3"}).out == "6\n");
  CHECK(cli({"tk", "--k", "0", "--j", "7"}).out == "1\n");
  CHECK(cli({"tk", "--k", "4", "--j", "0"}).out == "0\n");
  // big arguments go through the arbitrary-precision path
  CHECK(cli({"tk", "--k", "3", "--j", "1000000000000"}).out ==
        "166666666667166666666667000000000000\n");
  CHECK(cli({"tk", "--k", "2", "--j", "2", "--p", "3", "--mod", "1"}).out ==
        "0\n");
}

TEST_CASE("tk usage errors") {
  CHECK(cli({"tk", "--k", "2", "--j", "3", "--p", "3"}).status == 2);
  CHECK(cli({"tk", "--j", "3"}).status == 2);
  CHECK(cli({"tk", "--k", "2", "--j", "x"}).status == 2);
}

TEST_CASE("enumerate emits csv of cases") {
  const auto result = cli({"enumerate", "--n", "4", "--p", "2", "--level", "2",
                           "--cases", "--emit", "csv"});
  CHECK(result.status == 0);
  CHECK(result.out ==
        "n,p,N,case,count\n"
        "4,2,2,C1,8\n"
        "4,2,2,C2,2\n"
        "4,2,2,C3,2\n"
        "4,2,2,C4,2\n"
        "4,2,2,C5,0\n"
        "4,2,2,C6,2\n"
        "4,2,2,C7,1\n"
        "4,2,2,C8,0\n");
}

TEST_CASE("identical invocations give byte-identical output") {
  const std::vector<std::string> args{"enumerate", "--n",    "4",
                                      "--p",       "2",      "--level",
                                      "1..3",      "--emit", "json"};
  const auto first = cli(args);
  const auto second = cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("enumerate json round-trips the report") {
  const auto result = cli({"enumerate", "--n", "4", "--p", "2", "--level", "2",
                           "--cases", "--emit", "json"});
  REQUIRE(result.status == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["n"] == 4);
  CHECK(j["p"] == 2);
  CHECK(j["N"] == 2);
  CHECK(j["r"] == 17);
  CHECK(j["tuples_total"] == 64);
  CHECK(j["irreducible_total"] == 56);
  CHECK(j["cases"]["C1"] == 8);
  CHECK(j["cases"]["C7"] == 1);
  CHECK(j["subcases"]["C6.4"] == 2);

  const auto report = maxclass::count_report(maxclass::GroupSpec(4, 2, 2));
  CHECK(j["r"] == report.isoclasses);
  CHECK(j["tuples_total"] == report.tuples_total);
}

TEST_CASE("empty level range emits a header only") {
  const auto result = cli({"enumerate", "--n", "4", "--p", "2", "--level",
                           "3..2", "--emit", "csv"});
  CHECK(result.status == 0);
  CHECK(result.out == "n,p,N,r,tuples_total,irreducible_total\n");
}

TEST_CASE("zeta local json matches the library") {
  const auto result = cli({"zeta", "local", "--n", "4", "--p", "2", "--terms",
                           "3", "--emit", "json"});
  REQUIRE(result.status == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["coeffs"] == nlohmann::json::parse("[1, 4, 17, 70]"));
  CHECK(j["provenance"] == "paper-proven");
  CHECK(j["denom"] == "1 - 6*t + 8*t^2");

  const auto uniform = cli({"zeta", "local", "--n", "5", "--p", "2", "--terms",
                            "2", "--emit", "json"});
  const auto ju = nlohmann::json::parse(uniform.out);
  CHECK(ju["provenance"] == "conjectural-uniform");
}

TEST_CASE("zeta local brute-force comparison") {
  const auto result = cli({"zeta", "local", "--n", "3", "--p", "2", "--terms",
                           "4", "--check-brute", "3", "--emit", "json"});
  REQUIRE(result.status == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["brute"] == nlohmann::json::parse("[2, 5, 12]"));
  CHECK(j["brute_match"] == true);
}

TEST_CASE("zeta global csv") {
  const auto result =
      cli({"zeta", "global", "--n", "4", "--max", "6", "--emit", "csv"});
  CHECK(result.status == 0);
  CHECK(result.out ==
        "n,m,r\n"
        "4,1,1\n"
        "4,2,4\n"
        "4,3,10\n"
        "4,4,17\n"
        "4,5,28\n"
        "4,6,40\n");
}

TEST_CASE("rep show prints the verdict") {
  const auto result = cli({"rep", "show", "--n", "4", "--p", "2", "--level",
                           "1", "--lambdas", "16,0,0"});
  CHECK(result.status == 0);
  CHECK(result.out.find("irreducible: yes") != std::string::npos);
  CHECK(result.out.find("e(1/2)") != std::string::npos);

  const auto bad = cli({"rep", "show", "--n", "3", "--p", "2", "--level", "1",
                        "--lambdas", "0,4"});
  CHECK(bad.status == 0);
  CHECK(bad.out.find("NOT well defined") != std::string::npos);
}

TEST_CASE("rep check reports oracle results") {
  const auto result = cli({"rep", "check", "--n", "4", "--p", "2", "--level",
                           "1", "--lambdas", "16,0,0"});
  CHECK(result.status == 0);
  CHECK(result.out.find("relations: ok") != std::string::npos);
  CHECK(result.out.find("commutant dimension: 1") != std::string::npos);
}

TEST_CASE("orbit command") {
  const auto result = cli({"orbit", "--n", "4", "--p", "2", "--level", "1",
                           "--lambdas", "8,16,0", "--emit", "json"});
  REQUIRE(result.status == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["size"] == 2);
  CHECK(j["members"].size() == 2);

  // not well defined: usage error
  const auto bad = cli({"orbit", "--n", "3", "--p", "2", "--level", "1",
                        "--lambdas", "0,4"});
  CHECK(bad.status == 2);
}

TEST_CASE("verify --only m4-small checks exactly the three counts") {
  const auto result = cli({"verify", "--only", "m4-small"});
  CHECK(result.status == 0);
  CHECK(result.out.find("4/4 claims pass") != std::string::npos);
  for (const char* needle : {"N=1) equals 4", "N=2) equals 17",
                             "N=3) equals 70", "runtime within budget"})
    CHECK(result.out.find(needle) != std::string::npos);
}

TEST_CASE("verify rejects unknown groups") {
  CHECK(cli({"verify", "--only", "nonsense"}).status == 2);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"enumerate", "--n", "4", "--p", "2"}).status == 2);
  CHECK(cli({"enumerate", "--n", "4", "--p", "2", "--level", "x"}).status ==
        2);
  CHECK(cli({"enumerate", "--n", "4", "--p", "2", "--level", "1", "--emit",
             "xml"}).status == 2);
  CHECK(cli({"rep", "show", "--n", "4", "--p", "2", "--level", "1",
             "--lambdas", "1,2"}).status == 2);
  CHECK(cli({"zeta", "global", "--n", "9", "--max", "10"}).status == 2);
}

TEST_CASE("help succeeds") {
  const auto result = cli({"--help"});
  CHECK(result.status == 0);
  CHECK(result.out.find("maxclass") != std::string::npos);
}

TEST_CASE("data stream can be redirected to a file") {
  const std::string path = "cli_out_test.csv";
  std::remove(path.c_str());
  const auto result = cli({"enumerate", "--n", "3", "--p", "2", "--level",
                           "1", "--emit", "csv", "--output", path});
  CHECK(result.status == 0);
  CHECK(result.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,p,N,r,tuples_total,irreducible_total");
  std::remove(path.c_str());

  CHECK(cli({"enumerate", "--n", "3", "--p", "2", "--level", "1", "--output",
             "no/such/dir/x.csv"}).status == 2);
}

TEST_CASE("config file supplies flag defaults") {
  const std::string path = "cli_config_test.ini";
  {
    std::ofstream config(path);
    config << "[enumerate]\nn=3\np=2\nlevel=1\nemit=csv\n";
  }
  const auto result = cli({"--config", path, "enumerate"});
  CHECK(result.status == 0);
  CHECK(result.out.find("3,2,1,2,4,3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("parallelism degree comes from the environment by default") {
  setenv("MAXCLASS_JOBS", "3", 1);
  const auto result = cli({"enumerate", "--n", "4", "--p", "2", "--level",
                           "2", "--emit", "csv"});
  unsetenv("MAXCLASS_JOBS");
  CHECK(result.status == 0);
  CHECK(result.out.find("4,2,2,17,64,56") != std::string::npos);

  setenv("MAXCLASS_JOBS", "zebra", 1);
  const auto bad = cli({"enumerate", "--n", "4", "--p", "2", "--level", "2"});
  unsetenv("MAXCLASS_JOBS");
  CHECK(bad.status == 2);
}

// The verification gate compares exact integers; a one-off perturbation in
// any ingredient flips it.  Emulates an injected T_k fault by perturbing
// the series denominator the table claims are checked against.
TEST_CASE("the gate is sensitive to off-by-one perturbations") {
  auto series = maxclass::local_closed_form(4, 2);
  series.denom[1] += 1;  // (1 - 5t + 8t^2) instead of (1 - 6t + 8t^2)
  const auto perturbed = maxclass::expand(series, 3);
  const auto truth = maxclass::expand(maxclass::local_closed_form(4, 2), 3);
  CHECK(perturbed != truth);
  CHECK(maxclass::BigInt(
            maxclass::count_twist_isoclasses(maxclass::GroupSpec(4, 2, 2))) !=
        perturbed[2]);
}
