#include <doctest.h>

#include <fstream>
#include <sstream>

#include "newtcut/cli.hpp"
#include "newtcut/json_io.hpp"
#include "test_util.hpp"

#include <random>

using namespace newtcut;

namespace {

struct CliRun {
  int exit;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze prints the facet table of example 1") {
  CliRun r = run({"analyze", "--poly", "x1^2+x1*x2^4+x2^3*x3+x3^3", "--n", "3"});
  CHECK(r.exit == 0);
  CHECK(r.out.find("(9,4,6)") != std::string::npos);
  CHECK(r.out.find("18") != std::string::npos);
  CHECK(r.out.find("-19/18") != std::string::npos);

  CliRun j = run({"analyze", "--poly", "x1^2+x1*x2^4+x2^3*x3+x3^3", "--n", "3", "--format",
                  "json"});
  CHECK(j.exit == 0);
  json report = json::parse(j.out);
  bool found = false;
  for (const auto& row : report["facetTable"])
    if (row["u"] == json::array({9, 4, 6}) && row["N"] == "18" && row.value("slope", "") == "-19/18")
      found = true;
  CHECK(found);
}

TEST_CASE("verify with auto drop reproduces example 3") {
  CliRun r = run({"verify", "--poly", "x2*x3+x1^2*x2^2+x1^2*x3^2", "--n", "3", "--drop", "auto",
                  "--format", "json"});
  CHECK(r.exit == 0);
  json report = json::parse(r.out);
  CHECK(report["ok"] == true);
  CHECK(report["certificate"]["pass"] == true);
  CHECK(report["reducedPoles"]["values"] == json::array({"-1"}));
}

TEST_CASE("ztop renders the example rational function") {
  std::string path = "/tmp/newtcut_strata_test.json";
  {
    std::ofstream f(path);
    f << R"([{"chi":1,"divisors":[[2,3]]},{"chi":2,"divisors":[[1,1],[2,3]]}])";
  }
  CliRun r = run({"ztop", "--strata", path});
  CHECK(r.exit == 0);
  CHECK(r.out.find("(s+3)/((s+1)(2s+3))") != std::string::npos);
  CliRun j = run({"ztop", "--strata", path, "--format", "json"});
  json report = json::parse(j.out);
  CHECK(report["zeta"]["num"] == json::array({"3", "1"}));
  CHECK(report["zeta"]["den"] == json::array({"3", "5", "2"}));
  CHECK(report["actualPoles"] == json::array({"-3/2", "-1"}));
}

TEST_CASE("refusals exit with code 1 and a machine-readable reason") {
  CliRun r = run({"bcut", "--poly", "x1^2+x2*x3", "--n", "3", "--drop", "(1,2,0),(1,0,2)",
                  "--format", "json"});
  CHECK(r.exit == 1);
  json report = json::parse(r.out);
  CHECK(report["ok"] == false);
  CHECK(report["refusal"]["blockingFacets"].size() == 2);
}

TEST_CASE("failed certificates exit with code 1") {
  CliRun r = run({"verify", "--poly", "x1^2+x2*x3", "--n", "3", "--drop", "(1,2,0),(1,0,2)",
                  "--mode", "general", "--format", "json"});
  CHECK(r.exit == 1);
  json report = json::parse(r.out);
  CHECK(report["certificate"]["pass"] == false);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"analyze", "--poly", "1 + x1", "--n", "1"}).exit == 2);
  CHECK(run({"analyze", "--poly", "x1", "--n", "1", "--format", "yaml"}).exit == 2);
  CHECK(run({"analyze", "--poly", "x1", "--badflag", "1"}).exit == 2);
  CHECK(run({"bcut", "--poly", "x1^2+x2*x3", "--n", "3", "--drop", "(7,7,7)"}).exit == 2);
  CHECK(run({"ztop", "--strata", "/nonexistent/strata.json"}).exit == 2);
}

TEST_CASE("identical invocations are byte-identical and respect the seed") {
  std::vector<std::string> args{"verify", "--poly",   "x1^2+x1*x2^4+x2^3*x3+x3^3",
                                "--n",    "3",        "--drop",
                                "auto",   "--format", "json",
                                "--seed", "7"};
  CliRun a = run(args);
  CliRun b = run(args);
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("subcommand JSON round-trips through the documented schemas") {
  CliRun r = run({"analyze", "--poly", "x1^2+x2*x3", "--n", "3", "--format", "json"});
  json report = json::parse(r.out);
  auto [hs, n] = polyhedron_halfspaces_from_json(report["polyhedron"]);
  NewtonPolyhedron P = polyhedron_from_halfspaces(hs, n);
  CHECK(to_json(P) == report["polyhedron"]);
  Fan fan = fan_from_json(report["fan"], n);
  CHECK(to_json(fan) == report["fan"]);

  // strata round-trip
  json strataJson = json::parse(R"([{"chi":1,"divisors":[[2,3]]}])");
  auto strata = strata_from_json(strataJson);
  CHECK(strata.size() == 1);
  CHECK(strata[0].chi == 1);
  CHECK(strata[0].divisors == std::vector<std::pair<long long, long long>>{{2, 3}});
}

TEST_CASE("compatible mode verifies through the n=3 equivalence") {
  CliRun r = run({"verify", "--poly", "x2*x3+x1^2*x2^2+x1^2*x3^2", "--n", "3", "--drop", "auto",
                  "--mode", "compatible", "--format", "json"});
  CHECK(r.exit == 0);
  json report = json::parse(r.out);
  CHECK(report["certificate"]["pass"] == true);
}

TEST_CASE("poles subcommand reports all three sets") {
  CliRun r = run({"poles", "--poly", "x1^2+x1*x2^4+x2^3*x3+x3^3", "--n", "3", "--drop", "auto",
                  "--format", "json"});
  CHECK(r.exit == 0);
  json report = json::parse(r.out);
  CHECK(report["theta"]["values"] == json::array({"-2", "-5/4", "-19/18", "-1"}));
  CHECK(report["thetaDagger"]["values"] == json::array({"-19/18", "-1"}));
  CHECK(report["removableSlopes"].size() == 2);
}

TEST_CASE("pipeline fuzzing never trips internal invariants") {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int inst = 0; inst < 40; ++inst) {
    int n = 2 + static_cast<int>(rng() % 2);
    auto sup = testutil::random_support(rng, n, 6, 5);
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    std::ostringstream poly;
    bool first = true;
    for (const auto& a : sup) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      if (!first) poly << (c > 0 ? "+" : "-");
      else if (c < 0) poly << "-";
      first = false;
      poly << std::abs(c);
      for (int i = 0; i < n; ++i)
        if (a[i] > 0) poly << "*x" << (i + 1) << "^" << a[i];
    }
    for (const std::string& sub : {"analyze", "b1", "poles", "bcut"}) {
      CliRun r = run({sub, "--poly", poly.str(), "--n", std::to_string(n), "--drop", "auto",
                      "--format", "json"});
      CHECK(r.exit != 2);  // syntactically valid input must not be an input error
      CHECK(r.err.find("internal") == std::string::npos);
    }
  }
}

TEST_CASE("blowup subcommand emits the Cox presentation") {
  CliRun r = run({"blowup", "--poly", "x2*x3+x1^2*x2^2+x1^2*x3^2", "--n", "3", "--drop", "auto",
                  "--format", "json"});
  CHECK(r.exit == 0);
  json report = json::parse(r.out);
  CHECK(report["presentation"]["variables"] ==
        json::array({"x1'", "x2'", "x3'", "u1"}));
  json gens = report["presentation"]["irrelevantGenerators"];
  CHECK(gens == json::array({json::array({"x2'"}), json::array({"x3'"})}));
  CHECK(report["properTransform"]["rendered"].get<std::string>() ==
        "x2'*x3' + x1'^2*x3'^2 + x1'^2*x2'^2");
}
