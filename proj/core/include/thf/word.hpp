#ifndef THF_WORD_HPP
#define THF_WORD_HPP

#include "thf/dyadic.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace thf {

// One letter of a group word.  gen is a generator index (0 = 'a', 1 = 'b',
// ...), sign is +1 or -1.
struct Letter {
    int gen;
    int sign;
    bool operator==(const Letter&) const = default;
};

// rank orders letters a < A < b < B < c < ...; words compare by length
// first, then lexicographically in this order.
inline int letter_rank(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
inline Letter letter_from_rank(int r) { return {r / 2, r % 2 == 0 ? 1 : -1}; }

// Freely reduced word over a..z.  Every constructor reduces, so adjacent
// inverse pairs never survive.
class Word {
  public:
    Word() = default;
    static Word from_letters(std::vector<Letter> letters);

    // "aBa", "a^3B", "a^-2 b"; whitespace between tokens is fine.
    // Uppercase means inverse.  "1" or "" parses to the empty word.
    static Word parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    // Largest generator index used; -1 when empty.
    int max_generator() const;

    std::string str() const;

    Word inverse() const;
    Word operator*(const Word& o) const;
    Word pow(long long k) const;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& o) const;

    bool uses_generator(int g) const;
    long long exponent_sum(int g) const;

    // Conjugate g^-1 * w * g.
    Word conjugated_by(const Word& g) const;

    // Remove inverse first/last pairs until none remain.
    Word cyclically_reduced() const;

    // Least word, by (length, rank-lex), among all rotations of the cyclic
    // reduction and of its inverse.  Two words are cyclic-rotation or
    // inversion related iff their representatives coincide.
    Word canonical_class_rep() const;

    // Replace generator g by images[g] (inverted letters get the inverse
    // image) and reduce.  images must cover every generator used.
    Word substituted(std::span<const Word> images) const;

  private:
    std::vector<Letter> letters_;
};

inline Word commutator(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
}

Word generator_power(int gen, long long k);

// All nonempty freely reduced words over the first `rank` generators with
// length <= maxlen, in (length, rank-lex) order.
void for_each_reduced(int rank, int maxlen, const std::function<void(const Word&)>& cb);

// Words that are their own canonical_class_rep, same alphabet and order.
// These index the distinct candidate relators up to rotation and
// inversion.
void for_each_class_rep(int rank, int maxlen, const std::function<void(const Word&)>& cb);

// Number of nonempty freely reduced words with length <= maxlen, exact.
BigInt count_reduced(int rank, int maxlen);

}  // namespace thf

#endif
