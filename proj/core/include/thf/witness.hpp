#ifndef THF_WITNESS_HPP
#define THF_WITNESS_HPP

#include "thf/dyadic.hpp"
#include "thf/marking.hpp"
#include "thf/plmap.hpp"
#include "thf/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace thf {

struct WitnessCaps {
    std::size_t max_words = 2000000;
    std::size_t max_breakpoints = 4000000;
};

// One verified certificate: the word, evaluated against the constructed
// marking, moves base to moved.
struct WitnessPoint {
    Word word;
    Dyadic base;
    Dyadic moved;
};

// Output of the squeeze construction.  maps[0] realizes letter 'a' (always
// the standard first generator), maps[i] for i >= 1 is the witness built
// for letter i; every maps[i] with i >= 1 is supported in [0, epsilon).
struct WitnessSet {
    std::vector<PLMap> maps;
    std::vector<WitnessPoint> points;
    Dyadic epsilon_hat;
    std::int64_t depth;
    Marking marking() const { return Marking(maps); }
};

// Build maps u_1..u_{rank-1} supported in [0, epsilon) such that every
// input word, read over (a -> x_0, letter i -> u_i), acts nontrivially.
// Words must be nonempty, freely reduced, over at most `rank` letters.
// depth bounds the net amount of 'a'-translation the construction must
// absorb; it defaults to the longest word and must cover every prefix sum
// of 'a'-exponents.  Each word gets its own slice of the anchor interval,
// so the certificates never interfere.
WitnessSet construct_witnesses(const std::vector<Word>& words, const Dyadic& epsilon, int rank,
                               std::optional<std::int64_t> depth = std::nullopt,
                               const WitnessCaps& caps = {});

// Single-word convenience: rank inferred from the word.
WitnessSet construct_witness(const Word& w, const Dyadic& epsilon,
                             std::optional<std::int64_t> depth = std::nullopt);

// Alternative construction: each word gets one interval of the given
// partition of [0,1]; for each word a tuple of standard-marking elements
// with nontrivial action is searched (pool = short words over x_0, x_1 in
// (length, lex) order; tuples ordered by largest pool index then
// lexicographically), then transplanted into the interval.  The per-word
// tuples land in `tuples` for reproducibility.  Throws PoolExhausted when
// a word runs past tuple_cap candidates.
struct PartitionWitnessSet {
    std::vector<PLMap> maps;
    std::vector<WitnessPoint> points;
    std::vector<std::vector<Word>> tuples;
};
PartitionWitnessSet partition_witnesses(const std::vector<Word>& words, int rank,
                                        const std::vector<Dyadic>& partition,
                                        std::size_t tuple_cap = 2000000);

// Marked generating tuples with certified girth.  The tuple is
// (alpha, beta, gamma_1 .. gamma_{l-2}) = (x_0, x_0^m u_1^m x_1, u_i)
// with the u_i from the squeeze construction at epsilon = 2^-(m^2+2),
// depth 2m^2.  Faithful mode feeds every reduced word of length <= 2m^2
// over the support alphabet through the construction; targeted mode feeds
// only the substituted images of the words of length <= m that the girth
// claim quantifies over.
enum class GirthMode { Faithful, Targeted };

struct GirthResult {
    Marking marking;
    std::vector<Word> corpus;       // words fed to the construction
    Dyadic epsilon;
    std::int64_t depth;
    // Set when certification ran: the least relator of length <= m, or
    // nullopt meaning none exists (girth exceeds m).
    bool certified = false;
    std::optional<Word> relator;
};

GirthResult girth_marking(int l, int m, GirthMode mode, const WitnessCaps& caps = {},
                          bool certify = true);

// The free-group fact behind targeted mode: no nonempty reduced word of
// length <= m over three letters dies under the substitution of the third
// letter by (first^m second^m).  Checked exhaustively.
struct FactCheck {
    bool holds = false;
    std::size_t words_checked = 0;
    std::optional<Word> counterexample;  // least word killed, when any
};
FactCheck verify_substitution_fact(int m);

}  // namespace thf

#endif
