#include "thf/girth.hpp"

#include "thf/errors.hpp"

#include <algorithm>

namespace thf {

std::vector<Word> relation_ball(const Marking& M, int R) {
    std::vector<Word> out;
    for_each_class_rep(M.rank(), R, [&](const Word& w) {
        if (M.is_trivial(w)) out.push_back(w);
    });
    // enumeration is already length-major lexicographic, but keep the
    // ordering contract independent of it
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Word> shortest_relator(const Marking& M, int maxlen) {
    // The (length, lex)-least relator is its own class representative:
    // representatives never exceed their class members, and the relator
    // set is closed under rotation and inversion.  So the first trivial
    // representative in enumeration order is the global least.
    std::optional<Word> found;
    for_each_class_rep(M.rank(), maxlen, [&](const Word& w) {
        if (!found && M.is_trivial(w)) found = w;
    });
    return found;
}

BallComparison marked_distance_bound(const Marking& A, const Marking& B, int R) {
    if (A.rank() != B.rank()) throw InvariantError("markings have different ranks");
    std::optional<Word> split;
    for_each_class_rep(A.rank(), R, [&](const Word& w) {
        if (!split && A.is_trivial(w) != B.is_trivial(w)) split = w;
    });
    if (split) return {static_cast<int>(split->length()) - 1, split};
    return {R, std::nullopt};
}

BallComparison distance_to_free(const Marking& A, int R) {
    std::optional<Word> rel;
    for_each_class_rep(A.rank(), R, [&](const Word& w) {
        if (!rel && A.is_trivial(w)) rel = w;
    });
    if (rel) return {static_cast<int>(rel->length()) - 1, rel};
    return {R, std::nullopt};
}

}  // namespace thf
