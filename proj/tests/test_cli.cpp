#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "virmod/av/a_module.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/cli/cli.hpp"
#include "virmod/cli/parse.hpp"
#include "virmod/f/f_module.hpp"

using namespace virmod;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

Vec random_vec(std::mt19937& rng, const AVModule& m, const Caps& caps) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  Vec v;
  for (const Key& k : m.basis(caps))
    if (rng() % 3 == 0) v.add(k, make_rational(num(rng), den(rng)));
  return v;
}

}  // namespace

TEST_CASE("act examples") {
  CHECK(cli({"act", "Omega(2,3)", "d:1", "1"}).out == "2t - 6\n");
  CHECK(cli({"act", "Omega(2,3)", "c", "t^3 + 1"}).out == "0\n");
  CHECK(cli({"act", "F(shift,Omega(1,1))", "c", "v[2] (x) (t)"}).out == "0\n");
  CHECK(cli({"act", "A(0,1)", "d:2", "x^0"}).out == "2 x^2\n");
  CHECK(cli({"act", "Omega(5,2)", "g:3", "1"}).out == "t - 3\n");
  CHECK(cli({"act", "Omega(1,0)", "x:-1", "t"}).out == "t + 1\n");
  CHECK(cli({"act", "F(shift,Omega(1,0))", "d:1", "v[0] (x) (1)"}).out == "v[0] (x) (t + 1/2) + v[1] (x) (-1)\n");
  CHECK(cli({"act", "F(Mgamma(2),Omega(1,0))", "d:1", "v (x) t"}).out == "v[0] (x) (t^2 + t - 2)\n");
  CHECK(cli({"act", "Omega(1,0)", "d:0", "--", "-t"}).out == "-t^2\n");
}

TEST_CASE("act with h-basis output") {
  const auto r = cli({"act", "Omega(1,1)", "x:0", "t", "--h-basis"});
  CHECK(r.out == "t\nh_0^1 + h_0^0\n");
  CHECK(cli({"act", "Omega(1,1)", "x:0", "t^2", "--h-basis", "--anchor", "-1"}).out == "t^2\nh_-1^2 + h_-1^1\n");
  CHECK(cli({"act", "A(0,0)", "x:0", "x", "--h-basis"}).code == kExitUsage);
}

TEST_CASE("element grammar") {
  CHECK(parse_poly("2t^2 - 1/2 t + 3") == Poly({3, make_rational(-1, 2), 2}));
  CHECK(parse_poly("(1/2)*t + h_0^2") == Poly({2, make_rational(-5, 2), 1}));
  CHECK(parse_poly("-t - -1") == Poly({1, -1}));
  CHECK(parse_poly("h_{-1}^1") == Poly::var());
  CHECK(parse_laurent("2 x^2 - 1/2 x^-1 + 3") == LaurentVec::monomial(2, 2) + LaurentVec::monomial(make_rational(-1, 2), -1) +
                                                 LaurentVec::monomial(3, 0));
  CHECK(parse_laurent("x") == LaurentVec::monomial(1, 1));
  CHECK_THROWS_AS(parse_poly("t^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("2 +"), std::invalid_argument);
  const FModule f(make_shift_module_B1(), std::make_shared<OmegaModule>(1, 1));
  CHECK(parse_element(f, "2 v[1] (x) (t - 1) - v (x) t") ==
        Vec::unit(Key{1, 1}, 2) - Vec::unit(Key{1, 0}, 2) - Vec::unit(Key{0, 1}));
  CHECK(parse_element(f, "0").is_zero());
  CHECK_THROWS_AS(parse_element(f, "v[1,2] (x) t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(f, "v[1] t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(f, "v[-1] (x) t"), std::invalid_argument);
}

TEST_CASE("printed elements re-parse to equal elements") {
  std::mt19937 rng(8);
  const auto s = make_shift_module_B1();
  const std::vector<AVModulePtr> modules = {
      std::make_shared<OmegaModule>(make_rational(2, 3), 1), std::make_shared<AModule>(make_rational(1, 2), -1),
      std::make_shared<FModule>(s, std::make_shared<OmegaModule>(1, 1)),
      std::make_shared<FModule>(s, std::make_shared<AModule>(0, 0)),
      std::make_shared<FModule>(s, std::make_shared<FModule>(s, std::make_shared<OmegaModule>(2, 0)))};
  for (const auto& m : modules)
    for (int i = 0; i < 20; ++i) {
      const Vec v = random_vec(rng, *m, Caps{3, 2});
      CHECK(parse_element(*m, m->format(v)) == v);
      const Vec dv = m->d(static_cast<int>(rng() % 5) - 2, v);
      CHECK(parse_element(*m, m->format(dv)) == dv);
    }
  // through the command line
  const auto r = cli({"act", "F(shift,Omega(1/2,3))", "d:-2", "v[1] (x) (t^2 - 1/3 t)"});
  REQUIRE(r.code == kExitOk);
  const auto again = cli({"act", "F(shift,Omega(1/2,3))", "x:0", first_line(r.out)});
  CHECK(again.out == r.out);
}

TEST_CASE("module expressions") {
  CHECK(parse_module_expr("F(tensor(shift,shift),A(1/2,0))")->describe() == "F(tensor(shift,shift),A(1/2,0))");
  CHECK(parse_module_expr("F(Mgamma(1,2),Omega(1,0))")->describe() == "F(Mgamma(1,2),Omega(1,0))");
  CHECK(parse_br_expr("density(2,1,1/2)").rank == 2);
  CHECK(parse_br_expr("random(3)").certificate.validated);
  CHECK_THROWS_AS(parse_module_expr("Omega(0,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_expr("F(broken_fixture,Omega(1,1))"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_expr("Omega(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_expr("Omega(1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_br_expr("nothing"), std::invalid_argument);
}

TEST_CASE("exit codes") {
  const auto broken = cli({"verify", "gm", "--module", "broken_fixture"});
  CHECK(broken.code == kExitFailure);
  CHECK(broken.out.find("[FAIL] gm broken_fixture") != std::string::npos);
  CHECK(broken.out.find("m=") != std::string::npos);
  CHECK(cli({"verify", "relations", "--module", "broken_fixture"}).code == kExitFailure);
  CHECK(cli({"verify", "h", "--lambda", "1/2", "--beta", "0"}).code == kExitOk);
  CHECK(cli({"verify", "all", "--window", "2", "--dt-cap", "2", "--dx-cap", "2"}).code == kExitOk);
  CHECK(cli({"verify", "nonsense"}).code == kExitUsage);
  CHECK(cli({"verify", "h", "--lambda", "0"}).code == kExitUsage);
  CHECK(cli({"verify", "h", "--lambda", "x"}).code == kExitUsage);
  CHECK(cli({"act", "Nope(1,1)", "d:1", "1"}).code == kExitUsage);
  CHECK(cli({"act", "Omega(1,1)", "q:1", "1"}).code == kExitUsage);
  CHECK(cli({"act", "Omega(1,1)", "d:z", "1"}).code == kExitUsage);
  CHECK(cli({"act", "Omega(1,1)", "d:1"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"closure", "Omega(1,0)", "--seed", "0"}).code == kExitUsage);
  CHECK(cli({"weight", "F(shift,Omega(1,1))", "--window", "-3"}).code == kExitUsage);
}

TEST_CASE("json report") {
  const auto r = cli({"verify", "gm", "--module", "broken_fixture", "--json"});
  CHECK(r.code == kExitFailure);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("results"));
  const auto& res = j["results"][0];
  CHECK(res["suite"] == "gm");
  CHECK(res["window"]["modes"] == 4);
  CHECK(res["params"]["rank"] == "1");
  REQUIRE(!res["failures"].empty());
  for (const char* key : {"op", "lhs", "rhs", "witness"}) CHECK(res["failures"][0].contains(key));

  const auto a = nlohmann::json::parse(cli({"act", "Omega(1,1)", "d:1", "1/2", "--json"}).out);
  CHECK(a["result"] == "1/2 t - 1/2");
  CHECK(a["terms"][0]["coeff"] == "-1/2");
}

TEST_CASE("closure command") {
  const auto p = cli({"closure", "Omega(1,0)", "--seed", "t"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("PROPER SUBSPACE (dim 6 of 7)") != std::string::npos);
  CHECK(cli({"closure", "Omega(1,1)", "--seed", "1"}).out.find("FULL WINDOW") != std::string::npos);
  const auto f = cli({"closure", "F(Mgamma(2),Omega(1,2))"});
  CHECK(f.out.find("PROPER SUBSPACE") != std::string::npos);
  CHECK(f.out.find("REDUCIBLE") != std::string::npos);
  const auto basis = cli({"closure", "Omega(1,0)", "--seed", "t", "--basis", "--dt-cap", "2"});
  CHECK(basis.out.find("\n  t\n") != std::string::npos);
  const auto j = nlohmann::json::parse(cli({"closure", "Omega(1,0)", "--seed", "t", "--json", "--basis"}).out);
  CHECK(j["runs"][0]["verdict"] == "ProperInvariantSubspaceFound");
  CHECK(j["runs"][0]["basis"].size() == 6);
}

TEST_CASE("weight command") {
  const auto omega = cli({"weight", "Omega(3,2)"});
  CHECK(omega.code == kExitOk);
  CHECK(omega.out == cli({"weight", "A(0,-1)"}).out);
  CHECK(cli({"weight", "Omega(1,1)", "--window", "1"}).out.find("d_1 w_-1 = -1 w_0\n") != std::string::npos);
  CHECK(cli({"weight", "F(shift,Omega(2,1/2))", "--window", "2", "--dx-cap", "1"}).out ==
        cli({"weight", "F(shift,Omega(5,1/2))", "--window", "2", "--dx-cap", "1"}).out);
  CHECK(cli({"weight", "F(shift,Omega(2,1/2))", "--window", "2", "--dx-cap", "1"}).out ==
        cli({"weight", "F(shift,A(0,1/2))", "--window", "2", "--dx-cap", "1"}).out);
}

TEST_CASE("module file") {
  const std::string path = "virmod_test_modules.json";
  {
    std::ofstream f(path);
    f << R"json({
      "br_modules": [
        {"name": "w2", "rank": 2, "carrier": "polynomial",
         "ops": [{"poly": ["0", "1"]},
                 {"compose": [{"scalar": "1/2"}, {"shift": -1}]},
                 {"compose": [{"scalar": 3}, {"shift": -2}]}]},
        {"name": "pair", "rank": 1, "carrier": 2,
         "ops": [{"matrix": [["1", "0"], ["0", "2"]]}, {"matrix": [["0", "0"], ["1", "0"]]}]}
      ],
      "modules": [{"name": "W", "expr": "F(w2,Omega(1,1))"}],
      "defaults": {"window": 3, "dt_cap": 3, "dx_cap": 3}
    })json";
  }
  CHECK(cli({"verify", "gm", "--module", "w2", "--module-file", path}).code == kExitOk);
  CHECK(cli({"verify", "relations", "--module", "pair", "--module-file", path}).code == kExitOk);
  CHECK(cli({"verify", "bracket", "--module", "W", "--module-file", path}).code == kExitOk);
  CHECK(cli({"act", "W", "d:1", "v[0] (x) (1)", "--module-file", path}).code == kExitOk);
  CHECK(cli({"act", "F(pair,A(0,0))", "d:1", "v[1] (x) (x^0)", "--module-file", path}).code == kExitOk);
  CHECK(cli({"closure", "W", "--module-file", path}).code == kExitOk);
  {
    std::ofstream f(path);
    f << R"json({"modules": [{"name": "X", "expr": "F(missing,Omega(1,1))"}]})json";
  }
  CHECK(cli({"act", "Omega(1,1)", "d:1", "1", "--module-file", path}).code == kExitUsage);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(cli({"act", "Omega(1,1)", "d:1", "1", "--module-file", path}).code == kExitUsage);
  std::remove(path.c_str());
  CHECK(cli({"act", "Omega(1,1)", "d:1", "1", "--module-file", path}).code == kExitUsage);
}
