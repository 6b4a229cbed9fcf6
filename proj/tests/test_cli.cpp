#include "kqm/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = kqm::run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("cli hn-types") {
  auto r = run({"hn-types", "--quiver", "kronecker:3", "--dim", "2,3", "--theta", "3,-2"});
  REQUIRE(r.code == 0);
  auto j = r.j();
  CHECK(j["count"] == 8);
  CHECK(j["hn_types"].size() == 8);
  CHECK(j["hn_types"][0]["parts"] == json::parse("[[1,0],[1,1],[0,2]]"));
  CHECK(j["hn_types"][0]["eta"] == 90);
}

TEST_CASE("cli chi, ch and chow-eval") {
  auto r = run({"chi", "--expr", "tensor(dual(U2),dual(U2))"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["chi"] == 39);

  r = run({"ch", "--expr", "U2"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["ch"]["c2c3"] == "-1/180");
  CHECK(r.j()["ch"]["[Y]"] == "3");

  r = run({"chow-eval", "--expr", "c1^6"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["integral"] == "57");
}

TEST_CASE("cli stability and syzygies") {
  auto r = run({"stability", "--matrix", "x,y,0;0,y,z"});
  REQUIRE(r.code == 0);
  auto j = r.j();
  CHECK(j["stable"] == true);
  CHECK(j["minors"] == json::parse(R"(["yz","xz","xy"])"));
  CHECK(j["abelian_plane"] == true);

  r = run({"stability", "--matrix", "x,0,0;0,y,0"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["stable"] == false);

  r = run({"syzygies", "--matrix", "x,y,z;y,z,x"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["commutes"] == true);
  r = run({"syzygies", "--matrix", "x,0,0;0,y,0"});
  REQUIRE(r.code == 0);
  CHECK(r.j().contains("warning"));
}

TEST_CASE("cli teleman exit codes") {
  auto r = run({"teleman", "--expr", "sl(U1)"});
  CHECK(r.code == 0);
  CHECK(r.j()["pass"] == true);
  r = run({"teleman", "--expr", "O(-3)"});
  CHECK(r.code == 1);
  CHECK(r.j()["strata"][0].contains("margin"));
  r = run({"teleman", "--expr", "U1", "--twist", "0,0"});
  CHECK(r.code == 2);
}

TEST_CASE("cli verification commands") {
  auto r = run({"verify-collection"});
  CHECK(r.code == 0);
  CHECK(r.j()["summary"]["consistent"] == true);
  r = run({"ledger-check"});
  CHECK(r.code == 0);
  CHECK(r.j()["pass"] == true);
}

TEST_CASE("cli input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"chi", "--expr", "dual(U3)"}).code == 2);
  CHECK(run({"stability", "--matrix", "x,y"}).code == 2);
  CHECK(run({"verify-collection", "--file", "/nonexistent.json"}).code == 2);
  CHECK(run({"hn-types", "--theta", "1,1"}).code == 2);
  CHECK(run({"chi", "--help"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
  auto a = run({"ledger-check"}), b = run({"ledger-check"});
  CHECK(a.out == b.out);
  auto p = run({"chi", "--expr", "U2", "--pretty"});
  CHECK(p.out.find('\n') < p.out.size() - 1);
}
