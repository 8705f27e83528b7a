#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gfc/cli.hpp"
#include "gfc/jsonio.hpp"

using namespace gfc;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/gfc_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

const char* kHidalgoJson =
    R"({"k":2,"lambdas":["-6","-2+1.4142135623730951i","2-1.4142135623730951i"]})";

}  // namespace

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(1 2)(3 4)(5 6)", 6) == std::vector<int>{1, 0, 3, 2, 5, 4});
  CHECK(parse_cycles("(3 4 5)", 5) == std::vector<int>{0, 1, 3, 4, 2});
  CHECK(parse_cycles("()", 3) == std::vector<int>{0, 1, 2});
  CHECK(cycles_to_string({1, 0, 3, 2, 5, 4}) == "(1 2)(3 4)(5 6)");
  CHECK(cycles_to_string({0, 1, 2}) == "()");
  CHECK_THROWS_AS(parse_cycles("(1 9)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 5), ParseError);
}

TEST_CASE("genus command") {
  const RunResult r = run({"genus", "--k", "2", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "17\n");
  const RunResult j = run({"genus", "--k", "2", "--n", "5", "--output", "json"});
  CHECK(parse_json_text(j.out)["genus"] == 17);
  CHECK(run({"genus", "--k", "1", "--n", "5"}).code == 2);
  CHECK(run({"genus", "--n", "5"}).code == 2);
  CHECK(run({"genus", "--k", "2", "--n", "400"}).code == 3);  // Overflow
}

TEST_CASE("orbit-types command matches the committed table") {
  const RunResult r = run({"orbit-types", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "N A B C\n1 0 5 0\n1 1 3 0\n1 2 1 0\n3 0 1 1\n5 0 1 0\n");
  const RunResult j = run({"orbit-types", "--n", "5", "--max-N", "20", "--output", "json"});
  CHECK(j.code == 0);
  const OrderedJson parsed = parse_json_text(j.out);
  CHECK(parsed["solutions"].size() >= 4);
}

TEST_CASE("symmetries command") {
  const RunResult r =
      run({"symmetries", "--points", "inf,0,1,-6,-2+1.4142135623730951i,2-1.4142135623730951i",
           "--output", "json"});
  CHECK(r.code == 0);
  const OrderedJson j = parse_json_text(r.out);
  REQUIRE(j["symmetries"].size() == 2);
  CHECK(j["symmetries"][0]["anticonformal"] == false);
  CHECK(j["symmetries"][1]["anticonformal"] == true);
  CHECK(j["symmetries"][1]["order"] == 2);
  CHECK(run({"symmetries", "--points", "inf,0"}).code == 2);
  CHECK(run({"symmetries", "--points", "inf,0,1", "--orientation", "sideways"}).code == 2);
}

TEST_CASE("lift command") {
  const std::string path = write_temp("hidalgo.json", kHidalgoJson);
  const RunResult r = run({"lift", "--curve", path, "--perm", "(1 2)(3 4)(5 6)",
                           "--anticonformal", "--output", "json"});
  CHECK(r.code == 0);
  const OrderedJson j = parse_json_text(r.out);
  CHECK(j["lift_count"] == 32);
  CHECK(j["tk"][1] == "-6");
  CHECK(j["tk"][2] == "1");
  // Not a symmetry: numerical failure exit.
  CHECK(run({"lift", "--curve", path, "--perm", "(1 2)", "--anticonformal"}).code == 3);
  CHECK(run({"lift", "--curve", "/nonexistent.json", "--perm", "()"}).code == 2);
}

TEST_CASE("classify command and JSON determinism") {
  const std::string path = write_temp("hidalgo2.json", kHidalgoJson);
  const RunResult a = run({"classify", "--curve", path, "--output", "json"});
  const RunResult b = run({"classify", "--curve", path, "--output", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical
  const OrderedJson j = parse_json_text(a.out);
  CHECK(j["verdict"] == "moduli_R_not_real");
  CHECK(j["assumption"] == "unconditional");
  CHECK(j["exhaustion"]["lifts_scanned"] == 32);
  CHECK(j["witness"]["order"] == 4);
  // Text mode agrees on the verdict.
  const RunResult t = run({"classify", "--curve", path});
  CHECK(t.out.find("moduli_R_not_real") != std::string::npos);

  // Round trip: the emitted witness re-parses under the automorphism schema.
  const CurveAutomorphism witness = automorphism_from_json(j["witness"]);
  CHECK(witness.anticonformal);
  CHECK(witness.perm == std::vector<int>{1, 0, 3, 2, 5, 4});
}

TEST_CASE("classify rejects non-hyperbolic input") {
  const std::string path = write_temp("nonhyp.json", R"({"k":2,"lambdas":["-6"]})");
  CHECK(run({"classify", "--curve", path}).code == 2);
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "--suite", "hidalgo"}).code == 0);
  const RunResult h = run({"verify", "--suite", "humbert", "--output", "json"});
  CHECK(h.code == 0);
  CHECK(parse_json_text(h.out)["all_conform"] == true);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify", "--suite", "p5", "--k", "4"}).code == 2);  // not an odd prime
}

TEST_CASE("epsilon validation") {
  CHECK(run({"genus", "--k", "2", "--n", "5", "--epsilon", "0.5"}).code == 2);
  CHECK(run({"genus", "--k", "2", "--n", "5", "--epsilon", "1e-9"}).code == 0);
}
