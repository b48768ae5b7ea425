#ifndef THF_GIRTH_HPP
#define THF_GIRTH_HPP

#include "thf/marking.hpp"
#include "thf/word.hpp"

#include <optional>
#include <vector>

namespace thf {

// Relators up to length R, one canonical class representative per
// rotation-and-inversion class, in (length, lex) order.  Rotating or
// inverting a relator gives a relator, so representatives carry the whole
// pattern.
std::vector<Word> relation_ball(const Marking& M, int R);

// The (length, lex)-least word of length <= maxlen acting trivially, if
// any.  The least relator is always its own class representative, so the
// scan runs over representatives only.
std::optional<Word> shortest_relator(const Marking& M, int maxlen);

// Largest R' <= R with identical relator patterns, plus the least word
// where the patterns split (nullopt when they agree through R).  The
// marked distance between the two copies is then at most / exactly
// e^-agree_radius.
struct BallComparison {
    int agree_radius;
    std::optional<Word> separating;
};

BallComparison marked_distance_bound(const Marking& A, const Marking& B, int R);

// Comparison against the free pattern (no relators at all).
BallComparison distance_to_free(const Marking& A, int R);

}  // namespace thf

#endif
