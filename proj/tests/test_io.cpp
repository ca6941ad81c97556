#include "doctest.h"
#include "sigmakit/io.hpp"
#include "support.hpp"

using namespace sigmakit;
using sigmakit::io::Json;

TEST_CASE("tower element text round-trips") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(101);
    for (unsigned t : {1u, 2u, 3u}) {
        for (int i = 0; i < 10; ++i) {
            TowerElem x = testsupport::random_elem(rng, tower, t);
            CHECK(io::parse_tower_elem(x.to_string(), tower) == x);
        }
    }
    CHECK(io::parse_tower_elem("-1", tower) == tower.from_int(-1));
    CHECK(io::parse_tower_elem("7", tower) == tower.from_int(2));
    CHECK_THROWS_AS(io::parse_tower_elem("p=7,e=1,t=1:[2]", tower), ParseError);
    CHECK_THROWS_AS(io::parse_tower_elem("p=5,e=1,t=1:[9]", tower), ParseError);
    CHECK_THROWS_AS(io::parse_tower_elem("p=5,e=1,t=1:[1", tower), ParseError);
}

TEST_CASE("module JSON round-trips") {
    Json j = Json::parse(R"({"generators":2,"relations":[["s-1","2"],["0","s+1"]],
                             "shape":"general"})");
    ZSigmaModule m = io::module_from_json(j);
    CHECK(m.generators() == 2);
    CHECK(m.relations()[0][1] == SigmaPoly(2));
    ZSigmaModule again = io::module_from_json(io::module_to_json(m));
    CHECK(again.relations() == m.relations());

    Json cyc = Json::parse(R"({"generators":1,"relations":[["s^2-1"]],"shape":"cyclic"})");
    CHECK(io::module_from_json(cyc).shape() == ModuleShape::Cyclic);

    CHECK_THROWS_AS(io::module_from_json(Json::parse(R"({"generators":1})")), ParseError);
    CHECK_THROWS_AS(
        io::module_from_json(Json::parse(R"({"generators":2,"relations":[["s"]]})")),
        ParseError);
}

TEST_CASE("system JSON round-trips") {
    FieldTower tower(5, 1);
    Json lin = Json::parse(R"({"p":5,"e":1,"d":2,"A":[["2","0"],["1","p=5,e=1,t=2:[0,1]"]]})");
    LinDiffEq eq = io::linear_from_json(lin, tower);
    CHECK(eq.d == 2);
    CHECK(eq.A[1][1] == tower.gen(2));
    LinDiffEq again = io::linear_from_json(io::linear_to_json(eq, tower), tower);
    CHECK(kmat_equal(again.A, eq.A));

    Json mult = Json::parse(R"({"exponents":[["2"],["s-1"]],"constants":["1","-1"]})");
    MultTorsor t = io::mult_from_json(mult, tower);
    CHECK(t.exponents.size() == 2);
    CHECK(t.constants[1] == tower.from_int(-1));
    MultTorsor again2 = io::mult_from_json(io::mult_to_json(t), tower);
    CHECK(again2.exponents == t.exponents);

    CHECK_THROWS_AS(
        io::mult_from_json(Json::parse(R"({"exponents":[["1"]],"constants":["0"]})"), tower),
        ParseError);
}

TEST_CASE("outcome serialization is stable") {
    SolveOutcome o;
    o.status = SolveOutcome::Status::ExhaustedBounds;
    o.tried_n = 3;
    o.max_level = 8;
    o.report = "r";
    Json j = io::outcome_to_json(o);
    CHECK(j.dump() == R"({"status":"exhausted","tried_n":3,"max_level":8,"report":"r"})");
}
