#ifndef THF_NORMAL_FORM_HPP
#define THF_NORMAL_FORM_HPP

#include "thf/plmap.hpp"
#include "thf/word.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thf {

// Normal form x_{i_1}^{a_1} ... x_{i_r}^{a_r} x_{j_s}^{-b_s} ... x_{j_1}^{-b_1}
// over the infinite generating family x_0, x_1, x_2, ....  Both index lists
// are stored strictly increasing with positive exponents; the negative part
// is written out in decreasing index order.  The form is reduced: whenever
// x_i and x_i^{-1} both occur, some x_{i+1}^{+-1} occurs too, which makes
// it unique per group element.
struct NormalForm {
    std::vector<std::pair<long long, long long>> pos;
    std::vector<std::pair<long long, long long>> neg;

    bool operator==(const NormalForm&) const = default;

    bool is_identity() const { return pos.empty() && neg.empty(); }

    // "x0^2 x3 x5^-1 x1^-1"; the identity prints as "1".
    std::string str() const;
    static NormalForm parse(const std::string& text);

    // The uniqueness condition above, plus index and exponent sanity.
    bool reduced_condition_holds() const;

    // Total letter count.
    long long weight() const;
};

// Rewrite a word into normal form.  Letters map to the generator family by
// index: 'a' = x_0, 'b' = x_1, 'c' = x_2 and so on.
NormalForm word_to_normal_form(const Word& w);

// Normal form of a map, computed from a matched pair of standard dyadic
// partitions (no word rewriting involved; the two routes cross-check each
// other in the tests).
NormalForm normal_form_of(const PLMap& f);

// Spell the form over {a, b} using x_n = a^-(n-1) b a^(n-1) for n >= 1.
Word normal_form_to_word(const NormalForm& nf);

// Compose generator powers per the form.
PLMap evaluate_normal_form(const NormalForm& nf);

// Matched standard partitions (domain, range) with f affine on each piece,
// refined just enough that every image piece is standard.  Sizes match;
// domain[i] maps to range[i].
std::pair<std::vector<Dyadic>, std::vector<Dyadic>> standard_partition_pair(const PLMap& f);

}  // namespace thf

#endif
