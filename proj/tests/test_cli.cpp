#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "mulprob/channels.hpp"
#include "mulprob/ket.hpp"

using namespace mulprob;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pml golden output") {
  const auto r = run({"pml", "[2 <1/3 a, 2/3 b>, 1 <3/4 a, 1/4 b>]"});
  CHECK(r.code == 0);
  CHECK(r.out == "<1/12 [3 a], 13/36 [2 a, 1 b], 4/9 [1 a, 2 b], 1/9 [3 b]>\n");
  CHECK(r.err.empty());
}

TEST_CASE("mzip golden output") {
  const auto r = run({"mzip", "[1 a, 2 b]", "[2 z0, 1 z1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "<1/3 [1 (a,z1), 2 (b,z0)], 2/3 [1 (a,z0), 1 (b,z0), 1 (b,z1)]>\n");
}

TEST_CASE("draw commands") {
  CHECK(run({"mn", "--k", "3", "<1/3 a, 2/3 b>"}).out ==
        "<1/27 [3 a], 2/9 [2 a, 1 b], 4/9 [1 a, 2 b], 8/27 [3 b]>\n");
  CHECK(run({"hg", "--k", "2", "[3 a, 2 b]"}).out ==
        "<3/10 [2 a], 3/5 [1 a, 1 b], 1/10 [2 b]>\n");
  CHECK(run({"dd", "[3 a, 2 b]"}).out == "<2/5 [3 a, 1 b], 3/5 [2 a, 2 b]>\n");
  CHECK(run({"dd", "--n", "3", "[3 a, 2 b]"}).out == run({"hg", "--k", "2", "[3 a, 2 b]"}).out);
  CHECK(run({"arr", "[1 a, 1 b]"}).out == "<1/2 (a,b), 1/2 (b,a)>\n");
  CHECK(run({"acc", "(a,a,b,a)"}).out == "[3 a, 1 b]\n");
  CHECK(run({"flrn", "[3 a, 1 b]"}).out == "<3/4 a, 1/4 b>\n");
}

TEST_CASE("multinomial output learns back the state") {
  const auto r = run({"mn", "--k", "3", "<1/3 a, 2/3 b>"});
  REQUIRE(r.code == 0);
  const Dist draws = parse_dist(r.out.substr(0, r.out.size() - 1));
  const Dist learned =
      flatten(map_dist([](const Value& phi) { return Value(flrn(phi.multiset())); }, draws));
  CHECK(format(learned) == "<1/3 a, 2/3 b>");
}

TEST_CASE("validity and update") {
  CHECK(run({"validity", "--pred", "(a:1, b:1/2)", "<1/2 a, 1/2 b>"}).out == "3/4\n");
  CHECK(run({"update", "--pred", "(a:3/4, b:1/4)", "<1/3 a, 2/3 b>"}).out == "<3/5 a, 2/5 b>\n");
  CHECK(run({"validity", "--k", "2", "--pred", "(a:1, b:1/2)", "<1/2 a, 1/2 b>"}).out ==
        "9/16\n");
  const auto zero = run({"update", "--pred", "(a:0, b:0)", "<1/2 a, 1/2 b>"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("error") != std::string::npos);
}

TEST_CASE("parse errors exit with 2") {
  const auto r = run({"mn", "--k", "2", "<1/2 a, 1/3 b>"});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") == 0);
  CHECK(r.err.find("5/6") != std::string::npos);
  CHECK(r.err.find("position 0") != std::string::npos);
  CHECK(run({"acc", "[1 a]"}).code == 2);
  CHECK(run({"flrn", "[1 a"}).code == 2);
}

TEST_CASE("malformed command lines exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"mn", "<1 a>"}).code == 2);
  CHECK(run({"mn", "--k", "x", "<1 a>"}).code == 2);
  CHECK(run({"mzip", "[1 a]"}).code == 2);
  CHECK(run({"update", "<1 a>"}).code == 2);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"mzip", "[1 a]", "[2 b]"}).code == 1);
  CHECK(run({"hg", "--k", "3", "[1 a]"}).code == 1);
  CHECK(run({"flrn", "[]"}).code == 1);
  CHECK(run({"pml", "[2 a]"}).code == 1);
  CHECK(run({"dd", "[]"}).code == 1);
  CHECK(run({"laws", "--law", "no-such-law"}).code == 1);
}

TEST_CASE("resource budget") {
  setenv("MULPROB_MAX_CELLS", "10", 1);
  const auto r = run({"arr", "[3 a, 3 b]"});
  unsetenv("MULPROB_MAX_CELLS");
  CHECK(r.code == 1);
  CHECK(r.err.find("resource error") == 0);
  CHECK(r.err.find("MULPROB_MAX_CELLS=10") != std::string::npos);
  CHECK(run({"arr", "[3 a, 3 b]"}).code == 0);
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pml") != std::string::npos);
}

TEST_CASE("laws command") {
  const auto list = run({"laws", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("mzip-diagonal  (expected to fail)") != std::string::npos);

  const auto one = run({"laws", "--law", "hg-dd"});
  CHECK(one.code == 0);
  CHECK(one.out.find("PASS  hg-dd") == 0);
  CHECK(one.out.find("1 laws: 1 passed, 0 failed as expected, 0 unexpected") != std::string::npos);

  const auto neg = run({"laws", "--law", "mn-tensor"});
  CHECK(neg.code == 0);
  CHECK(neg.out.find("XFAIL  mn-tensor") == 0);
  CHECK(neg.out.find("lhs") != std::string::npos);

  const auto all = run({"laws", "--states", "4"});
  CHECK(all.code == 0);
  CHECK(all.out.find("failed as expected, 0 unexpected") != std::string::npos);
  CHECK(all.out.find("3 failed as expected") != std::string::npos);
}

TEST_CASE("sample-check") {
  const auto r = run({"sample-check", "--k", "3", "--channel", "{a: <1 z0>, b: <1/2 z0, 1/2 z1>}",
                      "--pred", "(a:1, b:1/3)", "<1/3 a, 2/3 b>"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sampling: equal") != std::string::npos);
  CHECK(r.out.find("mn update: equal") != std::string::npos);
  CHECK(r.out.find("pml update: equal") != std::string::npos);
  CHECK(r.out.find("DIFFERENT") == std::string::npos);

  const auto random = run({"sample-check", "--seed", "7", "<1/4 a, 1/4 b, 1/2 c>"});
  CHECK(random.code == 0);
  CHECK(random.out.find("sampling: equal") != std::string::npos);

  CHECK(run({"sample-check", "--k", "0", "<1 a>"}).code == 1);
  CHECK(run({"sample-check", "--channel", "{a: <1 z0>}", "<1/2 a, 1/2 b>"}).code == 1);
}
