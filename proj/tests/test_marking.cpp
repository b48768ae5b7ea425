#include "thf/errors.hpp"
#include "thf/marking.hpp"
#include "thf/normal_form.hpp"
#include "thf/word.hpp"

#include <doctest.h>

using namespace thf;

TEST_SUITE("marking") {

TEST_CASE("standard marking exposes the generators") {
    Marking m = Marking::standard(3);
    CHECK(m.rank() == 3);
    CHECK(m.image(0) == generator(0));
    CHECK(m.image(2) == generator(2));
    CHECK_THROWS_AS(m.image(3), InvariantError);
    CHECK_THROWS_AS(m.image(-1), InvariantError);
}

TEST_CASE("evaluate composes rightmost letter first") {
    Marking m = Marking::standard(2);
    // "ab" acts by x_1 first, then x_0
    CHECK(m.evaluate(Word::parse("ab")) == generator(0).compose(generator(1)));
    CHECK(m.evaluate(Word::parse("Aba")) == generator(2));
    CHECK(m.evaluate(Word()) == PLMap());
}

TEST_CASE("apply agrees with evaluate pointwise") {
    Marking m = Marking::standard(2);
    for (const char* s : {"a", "bA", "abAB", "BAba", "aabB"}) {
        Word w = Word::parse(s);
        PLMap f = m.evaluate(w);
        for (int i = 0; i <= 16; ++i) {
            Dyadic x(i, 4);
            CHECK(m.apply(w, x) == f.evaluate(x));
        }
    }
}

TEST_CASE("slope exponents at the endpoints sum over letters") {
    Marking m = Marking::standard(2);
    CHECK(m.slope_exponent_at(Word::parse("a"), PLMap::Endpoint::Zero) == -1);
    CHECK(m.slope_exponent_at(Word::parse("a"), PLMap::Endpoint::One) == 1);
    CHECK(m.slope_exponent_at(Word::parse("b"), PLMap::Endpoint::Zero) == 0);
    CHECK(m.slope_exponent_at(Word::parse("b"), PLMap::Endpoint::One) == 1);
    for (const char* s : {"abAB", "aaB", "bbbAA", "BaBa"}) {
        Word w = Word::parse(s);
        PLMap f = m.evaluate(w);
        CHECK(m.slope_exponent_at(w, PLMap::Endpoint::Zero) == f.slope_exponent_at(PLMap::Endpoint::Zero));
        CHECK(m.slope_exponent_at(w, PLMap::Endpoint::One) == f.slope_exponent_at(PLMap::Endpoint::One));
    }
}

TEST_CASE("relators of the finite presentation are trivial") {
    Marking m = Marking::standard(2);
    Word r1 = commutator(Word::parse("bA"), Word::parse("b").conjugated_by(Word::parse("a")));
    Word r2 = commutator(Word::parse("bA"), Word::parse("b").conjugated_by(Word::parse("aa")));
    CHECK(m.is_trivial(r1));
    CHECK(m.is_trivial(r2));
    CHECK(m.is_trivial(Word()));
    CHECK_FALSE(m.is_trivial(Word::parse("a")));
    CHECK_FALSE(m.is_trivial(Word::parse("abAB")));
}

TEST_CASE("is_trivial agrees with full evaluation over short words") {
    Marking m = Marking::standard(2);
    int trivial_count = 0;
    for_each_reduced(2, 5, [&](const Word& w) {
        bool by_eval = m.evaluate(w).is_identity();
        CHECK(m.is_trivial(w) == by_eval);
        if (by_eval) ++trivial_count;
    });
    // free through length 5: no nonempty relator that short (the least has
    // length 10, pinned elsewhere)
    CHECK(trivial_count == 0);
}

TEST_CASE("is_trivial agrees with evaluation on a shifted marking") {
    Marking m({generator(1), generator(2)});
    for_each_reduced(2, 4, [&](const Word& w) {
        CHECK(m.is_trivial(w) == m.evaluate(w).is_identity());
    });
}

TEST_CASE("infinite presentation relations hold under the standard marking") {
    // x_i^-1 x_j x_i = x_{j+1} for i < j, spelled over a, b
    Marking m = Marking::standard(2);
    for (int i = 0; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Word xi = normal_form_to_word(NormalForm{{{i, 1}}, {}});
            Word xj = normal_form_to_word(NormalForm{{{j, 1}}, {}});
            Word xj1 = normal_form_to_word(NormalForm{{{j + 1, 1}}, {}});
            Word rel = xi.inverse() * xj * xi * xj1.inverse();
            CHECK(m.is_trivial(rel));
        }
}

TEST_CASE("adding probes never changes answers") {
    Marking m = Marking::standard(2);
    std::vector<Word> words;
    for_each_reduced(2, 4, [&](const Word& w) { words.push_back(w); });
    std::vector<bool> before;
    for (const Word& w : words) before.push_back(m.is_trivial(w));
    m.add_probe(Dyadic(5, 7));
    m.add_probe(Dyadic(1, 20));
    for (std::size_t i = 0; i < words.size(); ++i) CHECK(m.is_trivial(words[i]) == before[i]);
}

TEST_CASE("marking rejects words beyond its rank") {
    Marking m = Marking::standard(2);
    CHECK_THROWS_AS(m.evaluate(Word::parse("c")), InvariantError);
    CHECK_THROWS_AS(m.is_trivial(Word::parse("ac")), InvariantError);
}

}
