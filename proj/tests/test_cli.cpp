#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "newtloj/cli.hpp"

using namespace newtloj;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const char* const kSurface = "(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5";

}  // namespace

TEST_CASE("compute prints the report") {
  const Run r = run({"compute", "--dim", "3", "--poly", kSurface});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out.find("exponent: 13/3\n") != std::string::npos);
  CHECK(r.out.find("case: generic\n") != std::string::npos);
  CHECK(r.out.find("sufficiency_degree: 5\n") != std::string::npos);
  CHECK(r.out.find("assumption: ") != std::string::npos);

  const Run h = run({"compute", "--poly", "x*y + z^5"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("case: hyperbolic_edge (axis z, alpha 5)") != std::string::npos);

  const Run c = run({"compute", "--dim", "2", "--poly", "x*y"});
  CHECK(c.out.find("case: two_dim_default") != std::string::npos);
}

TEST_CASE("compute JSON output and oracle") {
  const Run r = run({"compute", "--poly", kSurface, "--json", "--oracle", "--seed", "9"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("exponent") == "13/3");
  CHECK(j.at("seed") == 9);
  CHECK(j.at("oracle").contains("bound"));
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"compute", "--poly", kSurface, "--oracle", "--seed", "4"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> rnd{"random", "--seed", "17", "--points", "7"};
  CHECK(run(rnd).out == run(rnd).out);
}

TEST_CASE("seed from the environment unless given on the command line") {
  ::setenv("NEWTLOJ_SEED", "21", 1);
  const Run env = run({"random", "--points", "6"});
  const Run flag = run({"random", "--points", "6", "--seed", "21"});
  const Run other = run({"random", "--points", "6", "--seed", "22"});
  CHECK(env.out == flag.out);
  CHECK(env.out != other.out);
  const Run override = run({"random", "--points", "6", "--seed", "22"});
  CHECK(override.out == other.out);
  ::setenv("NEWTLOJ_SEED", "not-a-number", 1);
  const Run bad = run({"random"});
  CHECK(bad.code == kExitParse);
  ::unsetenv("NEWTLOJ_SEED");
  const Run dflt = run({"random", "--points", "6"});
  CHECK(dflt.out == run({"random", "--points", "6", "--seed", "0"}).out);
}

TEST_CASE("errors: nothing on stdout, one line on stderr") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"compute", "--poly", "x - x"}, kExitParse},
      {{"compute", "--poly", "x + w"}, kExitParse},
      {{"compute"}, kExitParse},
      {{"compute", "--dim", "4", "--poly", "x"}, kExitParse},
      {{"frobnicate"}, kExitParse},
      {{"compute", "--input", "/nonexistent/file"}, kExitParse},
      {{"compute", "--poly", "x^2*y^2 + z^3"}, kExitPrecondition},
      {{"mv", "--poly", kSurface, "--face", "99", "--axis", "x"}, kExitPrecondition},
      {{"export", "--dim", "2", "--poly", "x^3 + y^2"}, kExitPrecondition},
      {{"selftest", "--quick", "--mutate"}, kExitCrossCheck},
  };
  for (const Case& c : cases) {
    const Run r = run(c.args);
    CHECK_MESSAGE(r.code == c.code, c.args.front() << " -> " << r.code << ": " << r.err);
    CHECK_MESSAGE(lines(r.err) == 1, r.err);
    if (c.code != kExitCrossCheck) CHECK(r.out.empty());
  }
  const Run iso = run({"compute", "--poly", "x^2*y^2 + z^3"});
  CHECK(iso.err.find("not_nearly_convenient(x)") != std::string::npos);
}

TEST_CASE("classify and mv") {
  const Run c = run({"classify", "--poly", kSurface});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.find("normal (3,4,4)  level 16  intercepts 16/3 4 4  m 16/3") != std::string::npos);
  CHECK(c.out.find("exceptional: x") != std::string::npos);
  CHECK(c.out.find("proximity x: non_convenient, edge (4,0,1)-(4,1,0)") != std::string::npos);

  const Run cj = run({"classify", "--poly", kSurface, "--json"});
  REQUIRE(cj.code == kExitOk);
  CHECK(nlohmann::json::parse(cj.out).at("faces").size() == 3);

  const Run m = run({"mv", "--poly", kSurface, "--face", "15", "--axis", "x"});
  REQUIRE(m.code == kExitOk);
  CHECK(m.out.find("MV(P,Q) = 3\n") != std::string::npos);
  CHECK(m.out.find("zero_reason: none\n") != std::string::npos);
  CHECK(m.out.find("generic_b_nondegenerate: true\n") != std::string::npos);
}

TEST_CASE("export to a file and JSON input") {
  const auto dir = std::filesystem::temp_directory_path() / "newtloj_cli_test";
  std::filesystem::create_directories(dir);
  const std::string off = (dir / "f.off").string();
  const Run e = run({"export", "--poly", kSurface, "--output", off});
  REQUIRE(e.code == kExitOk);
  std::ifstream in(off);
  std::string header;
  in >> header;
  CHECK(header == "OFF");
  CHECK(run({"export", "--poly", kSurface}).out.rfind("OFF\n6 3 ", 0) == 0);

  const std::string json_path = (dir / "s.json").string();
  std::ofstream(json_path) << run({"random", "--seed", "3"}).out;
  const Run fromfile = run({"compute", "--input", json_path});
  CHECK(fromfile.code == kExitOk);
  const std::string poly_path = (dir / "p.txt").string();
  std::ofstream(poly_path) << "x*y + z^5\n";
  CHECK(run({"compute", "--input", poly_path}).out.find("alpha 5") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("selftest quick passes") {
  const Run r = run({"selftest", "--quick"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 5);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("compute") != std::string::npos);
}
