#include "thf/dyadic.hpp"
#include "thf/errors.hpp"

#include <doctest.h>

using thf::BigInt;
using thf::Dyadic;

TEST_SUITE("dyadic") {

TEST_CASE("parse and print round trip") {
    CHECK(Dyadic::parse("0").str() == "0");
    CHECK(Dyadic::parse("1").str() == "1");
    CHECK(Dyadic::parse("-3").str() == "-3");
    CHECK(Dyadic::parse("3/8").str() == "3/8");
    CHECK(Dyadic::parse("-3/8").str() == "-3/8");
    CHECK(Dyadic::parse("17").str() == "17");
}

TEST_CASE("parse reduces to canonical form") {
    CHECK(Dyadic::parse("2/4") == Dyadic::parse("1/2"));
    CHECK(Dyadic::parse("2/4").str() == "1/2");
    CHECK(Dyadic::parse("6/8").str() == "3/4");
    CHECK(Dyadic::parse("8/4").str() == "2");
    CHECK(Dyadic::parse("0/16").str() == "0");
    CHECK(Dyadic::parse("4/1") == Dyadic(4));
}

TEST_CASE("parse rejects junk") {
    CHECK_THROWS_AS(Dyadic::parse(""), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/3"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/0"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("abc"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("--1"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/2/2"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/-2"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1.5"), thf::ParseError);
    CHECK_THROWS_AS(Dyadic::parse(" 1"), thf::ParseError);
}

TEST_CASE("canonical representation invariant") {
    // exponent zero or odd numerator, for results of every operation
    auto canonical = [](const Dyadic& d) {
        return d.exponent() == 0 || (d.numerator() % 2 != 0 && d.exponent() > 0);
    };
    Dyadic a = Dyadic::parse("3/8");
    Dyadic b = Dyadic::parse("5/8");
    CHECK(canonical(a + b));        // = 1
    CHECK((a + b) == Dyadic(1));
    CHECK((a + b).exponent() == 0);
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    CHECK(canonical(a.mul_pow2(3)));
    CHECK(canonical(Dyadic(BigInt(12), 4)));
    CHECK(Dyadic(BigInt(12), 4).str() == "3/4");
    CHECK(Dyadic(BigInt(3), -2) == Dyadic(12));
}

TEST_CASE("arithmetic") {
    CHECK(Dyadic::parse("1/2") + Dyadic::parse("1/4") == Dyadic::parse("3/4"));
    CHECK(Dyadic::parse("1/2") - Dyadic::parse("3/4") == Dyadic::parse("-1/4"));
    CHECK(Dyadic::parse("3/8") * Dyadic::parse("2") == Dyadic::parse("3/4"));
    CHECK(Dyadic::parse("3/8") * Dyadic::parse("5/8") == Dyadic::parse("15/64"));
    CHECK(-Dyadic::parse("3/8") == Dyadic::parse("-3/8"));
    CHECK(Dyadic::parse("3/8").mul_pow2(-1) == Dyadic::parse("3/16"));
    CHECK(Dyadic::parse("3/8").mul_pow2(4) == Dyadic(6));
    CHECK(midpoint(Dyadic::parse("1/4"), Dyadic::parse("1/2")) == Dyadic::parse("3/8"));
    CHECK(midpoint(Dyadic(0), Dyadic(1)) == Dyadic::parse("1/2"));
}

TEST_CASE("ordering") {
    CHECK(Dyadic::parse("3/8") < Dyadic::parse("1/2"));
    CHECK(Dyadic::parse("-1/2") < Dyadic::parse("-3/8"));
    CHECK(Dyadic::parse("1/2") < Dyadic(1));
    CHECK(Dyadic(0) < Dyadic::parse("1/1024"));
    CHECK(Dyadic::parse("5/8") == Dyadic::parse("10/16"));
    CHECK(Dyadic(2) > Dyadic::parse("15/8"));
}

TEST_CASE("pow2 and floor_log2") {
    CHECK(Dyadic::pow2(0) == Dyadic(1));
    CHECK(Dyadic::pow2(3) == Dyadic(8));
    CHECK(Dyadic::pow2(-3) == Dyadic::parse("1/8"));
    CHECK(Dyadic::pow2(-3).floor_log2() == -3);
    CHECK(Dyadic(1).floor_log2() == 0);
    CHECK(Dyadic(3).floor_log2() == 1);
    CHECK(Dyadic::parse("5/8").floor_log2() == -1);
    CHECK(Dyadic::parse("3/8").floor_log2() == -2);
    CHECK_THROWS_AS(Dyadic(0).floor_log2(), thf::InvariantError);
}

TEST_CASE("two_adic_split") {
    auto [o1, v1] = Dyadic::parse("3/8").two_adic_split();
    CHECK(o1 == 3);
    CHECK(v1 == -3);
    auto [o2, v2] = Dyadic(12).two_adic_split();
    CHECK(o2 == 3);
    CHECK(v2 == 2);
    auto [o3, v3] = Dyadic::parse("-3/8").two_adic_split();
    CHECK(o3 == -3);
    CHECK(v3 == -3);
    auto [o4, v4] = Dyadic::parse("1/2").two_adic_split();
    CHECK(o4 == 1);
    CHECK(v4 == -1);
    CHECK_THROWS_AS(Dyadic(0).two_adic_split(), thf::InvariantError);
}

TEST_CASE("deep exponents stay exact") {
    Dyadic tiny = Dyadic::pow2(-5000);
    CHECK(tiny.exponent() == 5000);
    CHECK(tiny * Dyadic::pow2(5000) == Dyadic(1));
    Dyadic s = Dyadic::pow2(-4000) + Dyadic::pow2(-4001);
    CHECK(s == Dyadic(BigInt(3), 4001));
    CHECK(s.mul_pow2(4001) == Dyadic(3));
    // sums of all powers down to 2^-k telescope to 1 - 2^-k
    Dyadic acc = Dyadic(0);
    for (int k = 1; k <= 300; ++k) acc += Dyadic::pow2(-k);
    CHECK(acc == Dyadic(1) - Dyadic::pow2(-300));
}

}  // TEST_SUITE
