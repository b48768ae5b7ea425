#include "thf/errors.hpp"
#include "thf/json_io.hpp"

#include <doctest.h>

using namespace thf;

TEST_SUITE("json_io") {

TEST_CASE("map serialization is frozen and reversible") {
    nlohmann::ordered_json j = plmap_to_json(generator(0));
    CHECK(j.dump() == R"({"breakpoints":[["0","0"],["1/2","1/4"],["3/4","1/2"],["1","1"]]})");
    CHECK(plmap_from_json(nlohmann::json::parse(j.dump())) == generator(0));
    CHECK(plmap_from_json(plmap_to_json(PLMap())) == PLMap());
    for (int n = 0; n <= 6; ++n)
        CHECK(plmap_from_json(plmap_to_json(generator(n))) == generator(n));
}

TEST_CASE("marking round trip") {
    Marking m = Marking::standard(3);
    nlohmann::ordered_json j = marking_to_json(m);
    Marking back = marking_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.rank() == 3);
    for (int g = 0; g < 3; ++g) CHECK(back.image(g) == m.image(g));
}

TEST_CASE("malformed documents are rejected as parse errors") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(plmap_from_json(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(plmap_from_json(nlohmann::json::parse(R"({"breakpoints": 3})")), ParseError);
    CHECK_THROWS_AS(plmap_from_json(nlohmann::json::parse(R"({"breakpoints": [["0","0"]]})")), ParseError);
    CHECK_THROWS_AS(plmap_from_json(nlohmann::json::parse(
                        R"({"breakpoints": [["0","0"],["1/2","x"],["1","1"]]})")),
                    ParseError);
    CHECK_THROWS_AS(plmap_from_json(nlohmann::json::parse(
                        R"({"breakpoints": [["0","0"],["1/2","3/4"],["1/4","7/8"],["1","1"]]})")),
                    ParseError);
    CHECK_THROWS_AS(marking_from_json(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(marking_from_json(nlohmann::json::parse("[]")), ParseError);
}

}
