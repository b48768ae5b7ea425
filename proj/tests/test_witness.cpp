#include "thf/errors.hpp"
#include "thf/witness.hpp"
#include "thf/word.hpp"

#include <doctest.h>

#include <set>

using namespace thf;

namespace {

// support of every constructed letter stays strictly below epsilon
void check_supports(const std::vector<PLMap>& maps, const Dyadic& epsilon) {
    for (std::size_t g = 1; g < maps.size(); ++g) {
        auto sup = maps[g].support();
        if (!sup.empty()) {
            CHECK(sup.front().first.sign() >= 0);
            CHECK(sup.back().second < epsilon);
        }
    }
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("single letter word gets an upward-moving witness") {
    WitnessSet ws = construct_witness(Word::parse("b"), Dyadic(1, 2));
    REQUIRE(ws.maps.size() == 2);
    CHECK(ws.maps[0] == generator(0));
    REQUIRE(ws.points.size() == 1);
    CHECK(ws.points[0].base < ws.points[0].moved);
    CHECK(ws.marking().apply(Word::parse("b"), ws.points[0].base) == ws.points[0].moved);
    check_supports(ws.maps, Dyadic(1, 2));
}

TEST_CASE("commutator with the first generator is witnessed") {
    Word w = commutator(Word::parse("a"), Word::parse("b"));
    WitnessSet ws = construct_witness(w, Dyadic(1, 4));
    CHECK_FALSE(ws.marking().evaluate(w).is_identity());
    CHECK(ws.points[0].base < ws.points[0].moved);  // zero a-exponent branch
}

TEST_CASE("zero a-exponent moves up, nonzero lands outside the base interval") {
    for (const char* s : {"b", "bab", "abAB", "BaB", "ab", "aab", "Ba", "aa", "AAb"}) {
        Word w = Word::parse(s);
        WitnessSet ws = construct_witness(w, Dyadic(1, 3));
        CAPTURE(s);
        Dyadic lo = ws.epsilon_hat.mul_pow2(-(ws.depth + 2));
        Dyadic hi = ws.epsilon_hat.mul_pow2(-(ws.depth + 1));
        const WitnessPoint& p = ws.points[0];
        CHECK(p.base != p.moved);
        if (w.exponent_sum(0) == 0) {
            CHECK(p.base < p.moved);
        } else {
            CHECK((p.moved < lo || hi < p.moved));
        }
    }
}

TEST_CASE("translate geometry: the first generator halves every translate") {
    WitnessSet ws = construct_witness(Word::parse("aabAAb"), Dyadic(1, 4));
    Dyadic lo = ws.epsilon_hat.mul_pow2(-(ws.depth + 2));
    Dyadic hi = ws.epsilon_hat.mul_pow2(-(ws.depth + 1));
    for (std::int64_t c = -ws.depth; c <= ws.depth; ++c) {
        CHECK(generator(0).evaluate(lo.mul_pow2(-c)) == lo.mul_pow2(-c - 1));
        CHECK(generator(0).evaluate(hi.mul_pow2(-c)) == hi.mul_pow2(-c - 1));
    }
}

TEST_CASE("one tuple witnesses every short rank-2 word at once") {
    std::vector<Word> words;
    for_each_reduced(2, 2, [&](const Word& w) { words.push_back(w); });
    CHECK(words.size() == 16);
    WitnessSet ws = construct_witnesses(words, Dyadic(1, 3), 2);
    check_supports(ws.maps, Dyadic(1, 3));
    REQUIRE(ws.points.size() == words.size());
    Marking mk = ws.marking();
    std::set<Dyadic> bases;
    for (std::size_t t = 0; t < words.size(); ++t) {
        CAPTURE(words[t].str());
        CHECK_FALSE(mk.evaluate(words[t]).is_identity());
        CHECK(mk.apply(words[t], ws.points[t].base) == ws.points[t].moved);
        CHECK(ws.points[t].base != ws.points[t].moved);
        bases.insert(ws.points[t].base);
    }
    CHECK(bases.size() == words.size());  // disjoint slices, distinct anchors
}

TEST_CASE("deeper rank witnesses") {
    std::vector<Word> words{Word::parse("bc"), Word::parse("cBa"), Word::parse("AcaB")};
    WitnessSet ws = construct_witnesses(words, Dyadic(1, 5), 3);
    REQUIRE(ws.maps.size() == 3);
    check_supports(ws.maps, Dyadic(1, 5));
    Marking mk = ws.marking();
    for (const WitnessPoint& p : ws.points) {
        CHECK(mk.apply(p.word, p.base) == p.moved);
        CHECK(p.base != p.moved);
    }
}

TEST_CASE("construction is deterministic") {
    std::vector<Word> words{Word::parse("ab"), Word::parse("bA")};
    WitnessSet a = construct_witnesses(words, Dyadic(1, 4), 2);
    WitnessSet b = construct_witnesses(words, Dyadic(1, 4), 2);
    CHECK(a.maps[1] == b.maps[1]);
    CHECK(a.points[0].base == b.points[0].base);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(construct_witnesses({}, Dyadic(1, 4), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word()}, Dyadic(1, 4), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word::parse("c")}, Dyadic(1, 4), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word::parse("b")}, Dyadic(0), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word::parse("b")}, Dyadic(1, 1), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word::parse("b")}, Dyadic(3, 2), 2), InvariantError);
    CHECK_THROWS_AS(construct_witnesses({Word::parse("abab")}, Dyadic(1, 4), 2, 2), InvariantError);
    WitnessCaps tight;
    tight.max_words = 1;
    CHECK_THROWS_AS(construct_witnesses({Word::parse("a"), Word::parse("b")}, Dyadic(1, 4), 2,
                                        std::nullopt, tight),
                    CapExceeded);
    tight.max_words = 100;
    tight.max_breakpoints = 3;
    CHECK_THROWS_AS(construct_witnesses({Word::parse("bab")}, Dyadic(1, 4), 2, std::nullopt, tight),
                    CapExceeded);
}

TEST_CASE("explicit depth widens the translate range") {
    WitnessSet ws = construct_witness(Word::parse("ab"), Dyadic(1, 4), 6);
    CHECK(ws.depth == 6);
    CHECK(ws.marking().apply(Word::parse("ab"), ws.points[0].base) == ws.points[0].moved);
}

TEST_CASE("substitution never kills a short word") {
    FactCheck f1 = verify_substitution_fact(1);
    CHECK(f1.holds);
    CHECK(f1.words_checked == 6);
    CHECK(!f1.counterexample.has_value());
    FactCheck f4 = verify_substitution_fact(4);
    CHECK(f4.holds);
    CHECK(f4.words_checked == 936);

    // Tightness: the bound m is sharp in spirit.  The length 2m+1 word
    // c (a^m b^m)^-1 does die under the substitution, but it is longer
    // than m so the exhaustive check never meets it.
    for (int m = 1; m <= 4; ++m) {
        std::vector<Word> images{Word::parse("a"), Word::parse("b"),
                                 generator_power(0, m) * generator_power(1, m)};
        Word killer =
            Word::parse("c") *
            (generator_power(0, m) * generator_power(1, m)).inverse();
        CHECK(static_cast<int>(killer.length()) == 2 * m + 1);
        CHECK(killer.substituted(images).empty());
    }
}

TEST_CASE("partition witnesses: single word hits the first pool element") {
    std::vector<Dyadic> part{Dyadic(0), Dyadic(1)};
    PartitionWitnessSet ps = partition_witnesses({Word::parse("b")}, 2, part);
    REQUIRE(ps.tuples.size() == 1);
    CHECK(ps.tuples[0] == std::vector<Word>{Word::parse("a"), Word::parse("a")});
    CHECK(ps.maps[0] == generator(0));
    CHECK(ps.maps[1] == generator(0));
    CHECK(ps.points[0].base != ps.points[0].moved);
}

TEST_CASE("partition witnesses: commutator forces a non-commuting pair") {
    std::vector<Dyadic> part{Dyadic(0), Dyadic(1)};
    Word w = commutator(Word::parse("a"), Word::parse("b"));
    PartitionWitnessSet ps = partition_witnesses({w}, 2, part);
    CHECK(ps.tuples[0] == std::vector<Word>{Word::parse("a"), Word::parse("b")});
    CHECK_FALSE(Marking(ps.maps).evaluate(w).is_identity());
}

TEST_CASE("partition witnesses: two words confined to their halves") {
    std::vector<Dyadic> part{Dyadic(0), Dyadic(1, 1), Dyadic(1)};
    std::vector<Word> words{Word::parse("b"), commutator(Word::parse("a"), Word::parse("b"))};
    PartitionWitnessSet ps = partition_witnesses(words, 2, part);
    REQUIRE(ps.points.size() == 2);
    CHECK(ps.points[0].base < Dyadic(1, 1));
    CHECK(ps.points[0].moved < Dyadic(1, 1));
    CHECK(Dyadic(1, 1) < ps.points[1].base);
    CHECK(Dyadic(1, 1) < ps.points[1].moved);
    Marking mk(ps.maps);
    for (const WitnessPoint& p : ps.points) CHECK(mk.apply(p.word, p.base) == p.moved);
}

TEST_CASE("partition witnesses: validation and exhaustion") {
    std::vector<Dyadic> part{Dyadic(0), Dyadic(1)};
    CHECK_THROWS_AS(partition_witnesses({}, 2, part), InvariantError);
    CHECK_THROWS_AS(partition_witnesses({Word::parse("b"), Word::parse("a")}, 2, part), InvariantError);
    std::vector<Dyadic> bad{Dyadic(0), Dyadic(3, 2)};
    CHECK_THROWS_AS(partition_witnesses({Word::parse("b")}, 2, bad), InvariantError);
    std::vector<Dyadic> rev{Dyadic(1, 1), Dyadic(0)};
    CHECK_THROWS_AS(partition_witnesses({Word::parse("b")}, 2, rev), InvariantError);
    CHECK_THROWS_AS(partition_witnesses({Word::parse("b")}, 2, part, 0), PoolExhausted);
}

TEST_CASE("girth marking at the smallest sizes") {
    GirthResult g1 = girth_marking(3, 1, GirthMode::Targeted);
    CHECK(g1.certified);
    CHECK_FALSE(g1.relator.has_value());
    CHECK(g1.marking.rank() == 3);
    CHECK(g1.marking.image(0) == generator(0));

    GirthResult g2 = girth_marking(3, 2, GirthMode::Targeted);
    CHECK_FALSE(g2.relator.has_value());
    // beta is assembled as x_0^m u_1^m x_1
    PLMap beta = g2.marking.image(1);
    CHECK(beta.slope_exponent_at(PLMap::Endpoint::Zero) == -2);
    CHECK(beta.slope_exponent_at(PLMap::Endpoint::One) == 3);

    CHECK_THROWS_AS(girth_marking(2, 2, GirthMode::Targeted), HypothesisError);
    CHECK_THROWS_AS(girth_marking(3, 0, GirthMode::Targeted), HypothesisError);
}

TEST_CASE("faithful mode at m=1 equals the full short-word sweep") {
    GirthResult g = girth_marking(3, 1, GirthMode::Faithful);
    CHECK(g.corpus.size() == 16);  // all reduced rank-2 words of length <= 2
    CHECK_FALSE(g.relator.has_value());
    WitnessCaps tiny;
    tiny.max_words = 5;
    CHECK_THROWS_AS(girth_marking(3, 1, GirthMode::Faithful, tiny), CapExceeded);
}

}
