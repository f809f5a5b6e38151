#include "bcwitt/cli.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using bcw::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  std::string text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return {code, text, err.str()};
}

std::string ok(std::vector<std::string> args) {
  const auto r = call(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == 0);
  return r.out;
}

}  // namespace

TEST_CASE("documented command examples", "[cli]") {
  CHECK(ok({"class", "points", "--class", R"({"T":[2,1]})", "--m", "5"}) == R"({"count":"7"})");
  CHECK(ok({"qz", "sigma", "--n", "2", "--elem", R"({"terms":[{"r":"1/3","c":1}]})"}) == R"({"terms":[{"r":"2/3","c":1}]})");
  CHECK(ok({"zeta", "lefschetz", "--matrix", R"({"rows":[[0,-1],[1,0]]})", "--closed"}) ==
        R"({"exponents":{"1":2,"2":1,"4":-1}})");
}

TEST_CASE("zeta commands", "[cli]") {
  CHECK(ok({"zeta", "f1", "--class", R"({"T":[0,1]})", "--trunc", "3"}) ==
        R"({"ghost":["1","2","3"],"series":["1","1","3/2","13/6"],"rational":{"log_derivative":{"num":[0,1],"den":[1,-2,1]}}})");
  CHECK(ok({"zeta", "hw", "--class", R"({"T":[0,1]})", "--q", "3", "--trunc", "2"}) ==
        R"({"ghost":["2","8"],"series":["1","2","6"],"rational":{"num":[1,-1],"den":[1,-3]}})");
  CHECK(ok({"zeta", "hw", "--class", R"({"T":[2,1]})", "--q", "sym", "--trunc", "2"}) ==
        R"({"q":"sym","ghost":[["1","1"],["1","0","1"]]})");
  CHECK(ok({"zeta", "quotient-check", "--k", "1", "--q", "3", "--trunc", "3"}) == R"({"ghost":["1","4","13"]})");
  CHECK(ok({"zeta", "q-limit", "--class", R"({"T":[2,1]})", "--trunc", "3"}) == R"({"ghost":["3","4","5"]})");
  CHECK(ok({"zeta", "lefschetz", "--matrix", R"({"rows":[[-1]]})", "--series", "--trunc", "2"}) ==
        R"({"ghost":["2","0"],"series":["1","2","2"]})");
  CHECK(ok({"zeta", "artin-mazur", "--matrix", R"({"rows":[[2]]})", "--trunc", "2"}) == R"({"ghost":["1","3"],"series":["1","1","2"]})");
  CHECK(ok({"zeta", "torified", "--matrices", R"([{"rows":[[-1]]},{"rows":[[-1]]}])", "--trunc", "2"}) ==
        R"({"ghost":["4","0"],"series":["1","4","8"]})");
  CHECK(ok({"zeta", "polylog", "--k", "3"}) == R"({"num":[0,1,1],"den":[1,-3,3,-1]})");
}

TEST_CASE("domain errors exit with 1 and a JSON body", "[cli]") {
  auto r = call({"zeta", "artin-mazur", "--matrix", R"({"rows":[[-1]]})", "--trunc", "4"});
  CHECK(r.code == 1);
  CHECK(r.out == R"({"error":{"kind":"DegenerateIterate","detail":"det(I - M^2) = 0"}})");
  r = call({"zeta", "lefschetz", "--matrix", R"({"rows":[[2,1],[1,1]]})", "--closed"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["kind"] == "NotQuasiUnipotent");
  r = call({"class", "convert", "--class", R"({"L":{"0":-2,"1":1}})"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["kind"] == "NotEffectivelyTorified");
  r = call({"class", "convert", "--class", R"({"L":{"1/2":1}})"});
  CHECK(Json::parse(r.out)["error"]["kind"] == "HalfTwistPresent");
  r = call({"endo", "phimu", "--rational", R"({"num":[1],"den":[1,1,1]})"});
  CHECK(Json::parse(r.out)["error"]["kind"] == "NotSplit");
  r = call({"witt", "frobenius", "--n", "5", "--w", R"({"trunc":2,"coeffs":["1","1","1"]})"});
  CHECK(Json::parse(r.out)["error"]["kind"] == "TruncationTooSmall");
  r = call({"witt", "quotient", "--a", R"({"num":[1],"den":[1,-3]})", "--b", R"({"num":[1],"den":[1,-2]})", "--trunc", "3"});
  CHECK(Json::parse(r.out)["error"]["kind"] == "NotDivisible");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(call({}).code == 2);
  CHECK(call({"qz"}).code == 2);
  CHECK(call({"qz", "sigma", "--n", "2", "--bogus", "1"}).code == 2);
  CHECK(call({"qz", "sigma", "--n", "2"}).code == 2);
  CHECK(call({"qz", "sigma", "--n", "x", "--elem", R"({"terms":[]})"}).code == 2);
  CHECK(call({"qz", "sigma", "--n", "2", "--elem", "{not json"}).code == 2);
  CHECK(call({"equivariant", "euler", "--action", R"({"level":2,"perm":[1,2,0]})"}).code == 2);
  CHECK(call({"class", "points", "--class", R"({"T":[-1]})", "--m", "1"}).code == 2);
  CHECK(call({"zeta", "lefschetz", "--matrix", R"({"rows":[[1]]})", "--closed", "--series"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("emitted values are accepted back", "[cli]") {
  const std::string elem = R"({"terms":[{"r":"1/3","c":2},{"r":"5/12","c":-1}]})";
  const std::string split = ok({"qz", "split", "--primes", "[2]", "--elem", elem});
  CHECK(split == R"({"primes":[2],"terms":[{"F":"0","coprime":"1/3","c":2},{"F":"3/4","coprime":"2/3","c":-1}]})");
  CHECK(ok({"qz", "unsplit", "--split", split}) == elem);

  const std::string rho = ok({"qz", "rho", "--n", "2", "--elem", elem});
  CHECK(ok({"qz", "sigma", "--n", "2", "--elem", rho}) == R"({"terms":[{"r":"1/3","c":4},{"r":"5/12","c":-2}]})");

  const std::string t = R"({"T":[192,1632,7468,23370,54320,97643,139008,159082,147653,111606,68678,34230,13665,4284,1020,174,19,1]})";
  const std::string l = ok({"class", "convert", "--class", t});
  CHECK(l == R"({"L":{"0":1,"1":2,"2":6,"3":10,"4":14,"5":15,"6":16,"7":16,"8":16,"9":16,"10":16,"11":16,"12":15,"13":14,"14":10,"15":6,"16":2,"17":1}})");
  CHECK(ok({"class", "convert", "--class", l}) == t);
  CHECK(ok({"class", "points", "--class", l, "--m", "3"}) == R"({"count":"36177267945"})");
  CHECK(ok({"class", "euler", "--class", t}) == R"({"euler":"192"})");

  const std::string v = ok({"class", "virtual", "--class", R"({"T":[2,1]})", "--dim", "1"});
  CHECK(v == R"({"L":{"-1/2":1,"1/2":1}})");
  CHECK(call({"class", "convert", "--class", v}).code == 1);

  const std::string w = ok({"witt", "teichmuller", "--a", "3", "--trunc", "4"});
  CHECK(w == R"({"trunc":4,"coeffs":["1","3","9","27","81"]})");
  const std::string g = ok({"witt", "ghost", "--w", w});
  CHECK(g == R"({"ghost":["3","9","27","81"]})");
  CHECK(ok({"witt", "unghost", "--ghost", Json::parse(g)["ghost"].dump()}) == w);
  CHECK(ok({"witt", "frobenius", "--n", "2", "--w", w}) == R"({"trunc":2,"coeffs":["1","9","81"]})");
  CHECK(ok({"witt", "verschiebung", "--n", "2", "--w", w}) == R"({"trunc":4,"coeffs":["1","0","3","0","9"]})");
  CHECK(ok({"witt", "mul", "--a", w, "--b", w}) == R"({"trunc":4,"coeffs":["1","9","81","729","6561"]})");
  CHECK(ok({"witt", "add", "--a", R"({"num":[1,-1],"den":[1,-3]})", "--b", R"({"num":[1],"den":[1,-2,1]})"}) ==
        R"({"num":[1],"den":[1,-4,3]})");
  CHECK(ok({"witt", "div", "--a", R"({"num":[1,-1],"den":[1,-3]})", "--b", R"({"num":[1,-2,1],"den":[1]})"}) ==
        R"({"num":[1],"den":[1,-4,3]})");

  const std::string lm = ok({"endo", "lmap", "--matrix", R"({"rows":[["1/2"]]})"});
  CHECK(lm == R"({"num":[1],"den":[1,"-1/2"]})");
  const std::string graded = ok({"endo", "phimu", "--rational", lm});
  CHECK(graded == R"({"plus":{"rows":[["1/2"]]},"minus":{"rows":[]}})");
  CHECK(ok({"endo", "delta", "--graded", graded}) == lm);
  const std::string ver = ok({"endo", "verschiebung", "--n", "2", "--matrix", R"({"rows":[[7]]})"});
  CHECK(ver == R"({"rows":[["0","7"],["1","0"]]})");
  CHECK(ok({"endo", "frobenius", "--n", "2", "--matrix", ver}) == R"({"rows":[["7","0"],["0","7"]]})");
  CHECK(ok({"endo", "sum", "--a", R"({"rows":[[2]]})", "--b", R"({"rows":[[3]]})"}) == R"({"rows":[["2","0"],["0","3"]]})");
  CHECK(ok({"endo", "tensor", "--a", R"({"rows":[[2]]})", "--b", R"({"rows":[[3]]})"}) == R"({"rows":[["6"]]})");
  CHECK(ok({"endo", "ghost", "--matrix", ver, "--trunc", "4"}) == R"({"ghost":["0","14","0","98"]})");

  const std::string act = R"({"level":2,"perm":[1,0]})";
  const std::string rhoed = ok({"equivariant", "rho", "--n", "2", "--action", act});
  CHECK(rhoed == R"({"level":4,"perm":[1,2,3,0]})");
  CHECK(ok({"equivariant", "sigma", "--n", "2", "--action", rhoed}) == R"({"level":4,"perm":[2,3,0,1]})");
  CHECK(ok({"equivariant", "periodic", "--action", rhoed, "--k", "4"}) == R"({"points":[0,1,2,3]})");
  CHECK(ok({"equivariant", "euler", "--action", act}) == R"({"terms":[{"r":"0","c":1},{"r":"1/2","c":1}]})");
  CHECK(ok({"equivariant", "orbits", "--action", rhoed}) == R"({"orbit_type":[4]})");
  const std::string rel = R"({"total":{"level":1,"perm":[0]},"base":{"level":1,"perm":[0]},"map":[0]})";
  const std::string rel2 = ok({"equivariant", "rho", "--n", "2", "--action", rel});
  CHECK(rel2 == R"({"total":{"level":2,"perm":[1,0]},"base":{"level":2,"perm":[1,0]},"map":[0,1]})");
  CHECK(ok({"equivariant", "orbits", "--action", rel2}) == R"({"orbit_type":[[2,2]]})");
  CHECK(ok({"equivariant", "check", "--action", R"({"level":6,"perm":[1,2,3,4,5,0,6]})"}) ==
        R"({"periodic":true,"euler":true,"cases":128})");

  CHECK(ok({"euler", "spectral", "--matrix", R"({"rows":[[0,-1],[1,0]]})"}) ==
        R"({"terms":[{"r":"1/4","c":1},{"r":"3/4","c":1}]})");
  const std::string leveled = ok({"class", "bc-rho", "--n", "3", "--leveled", R"({"class":{"T":[2,1]},"level":2})"});
  CHECK(leveled == R"({"class":{"T":[6,3]},"level":6})");
  CHECK(ok({"class", "bc-sigma", "--n", "3", "--leveled", leveled}) == leveled);
  CHECK(ok({"class", "bb", "--pieces", R"([{"class":{"T":[1]},"dim":0},{"class":{"T":[1]},"dim":1}])"}) == R"({"T":[2,1]})");
  CHECK(ok({"qz", "pi", "--n", "2"}) == R"({"terms":[{"r":"0","c":1},{"r":"1/2","c":1}]})");
  CHECK(ok({"qz", "mul", "--a", elem, "--b", elem}) ==
        R"({"terms":[{"r":"2/3","c":4},{"r":"3/4","c":-4},{"r":"5/6","c":1}]})");
}

TEST_CASE("output is byte-stable", "[cli]") {
  const std::vector<std::string> args{"zeta", "hw", "--class", R"({"T":[1,2,3]})", "--q", "5"};
  const auto first = ok(args);
  for (int i = 0; i < 5; ++i) CHECK(ok(args) == first);
}

TEST_CASE("input files and default truncation", "[cli]") {
  const std::string path = "bcwitt_cli_input.json";
  {
    std::ofstream f(path);
    f << R"({"class":{"T":[0,1]},"trunc":2})";
  }
  CHECK(ok({"zeta", "f1", "--input", path}) ==
        R"({"ghost":["1","2"],"series":["1","1","3/2"],"rational":{"log_derivative":{"num":[0,1],"den":[1,-2,1]}}})");
  // command-line values win over the file
  CHECK(Json::parse(ok({"zeta", "f1", "--input", path, "--trunc", "3"}))["ghost"].size() == 3);
  {
    std::ofstream f(path);
    f << R"({"class":{"T":[0,1]},"bogus":1})";
  }
  CHECK(call({"zeta", "f1", "--input", path}).code == 2);
  std::remove(path.c_str());
  CHECK(call({"zeta", "f1", "--input", "does-not-exist.json"}).code == 2);

  CHECK(Json::parse(ok({"zeta", "f1", "--class", R"({"T":[1]})"}))["ghost"].size() == 12);
  setenv("BCWITT_TRUNC", "5", 1);
  CHECK(Json::parse(ok({"zeta", "f1", "--class", R"({"T":[1]})"}))["ghost"].size() == 5);
  setenv("BCWITT_TRUNC", "zero", 1);
  CHECK(call({"zeta", "f1", "--class", R"({"T":[1]})"}).code == 2);
  unsetenv("BCWITT_TRUNC");
}
