#ifndef THF_FAMILIES_HPP
#define THF_FAMILIES_HPP

#include "thf/dyadic.hpp"
#include "thf/marking.hpp"
#include "thf/plmap.hpp"
#include "thf/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thf {

// A one-parameter sequence of rank-3 markings (a, b, c_n) with a = x_0,
// b = x_1.  Each family carries an exact hypothesis validator; at(n)
// validates before building, so a marking from a family always satisfies
// the family's support hypothesis.  Optional descriptors are null when a
// family has no such datum.
struct MarkingFamily {
    std::string name;
    std::function<PLMap(int)> third;
    std::function<void(int)> validate;                                // throws HypothesisError
    std::function<Dyadic(int)> support_floor;                         // t_n: support(c_n) within [t_n, 1]
    std::function<std::pair<Dyadic, Dyadic>(int)> support_box;        // (r_n, s_n): support within [r_n, s_n]
    std::function<Word(int)> word_at;                                 // c_n spelled over {a, b}

    Marking at(int n) const;
};

// c_n = x_n, t_n = 1 - 2^-n.  The validator checks support(c_n) within
// [t_n, 1] and that c_n maps [(3+t_n)/4, 1] linearly onto [(1+t_n)/2, 1]
// in a single affine piece.
MarkingFamily family_xn();
// Same hypotheses with caller-supplied c_n (a word over a, b) and t_n.
MarkingFamily family_xn_custom(std::function<Word(int)> word_rule, std::function<Dyadic(int)> t_rule);

// c_n = x_0 squeezed into [r_n, s_n] = [2^-(n+1), 3*2^-(n+2)], so
// s_n/r_n = 3/2.  The validator checks r_n < s_n < 2 r_n, support
// containment, and that the x_0-translate of [r_n, s_n] is disjoint from
// it once s_n < 1/2.
MarkingFamily family_small_support();
MarkingFamily family_small_support_custom(std::function<PLMap(int)> map_rule,
                                          std::function<std::pair<Dyadic, Dyadic>(int)> box_rule);

// c_n = x_0^n.  The validator checks c^-1 a^n evaluates to the identity.
MarkingFamily family_power();

// Lookup by the CLI names xn | small | power.  Throws InvariantError on
// anything else.
MarkingFamily family_by_name(const std::string& name);

struct LimitParams {
    int i_range = 3;              // |i| bound for the "for all i" schemas
    int j_max = 4;                // grid bounds for the power-family commutators
    int k_max = 4;
    int threshold_scan_max = 64;  // cutoff for computed thresholds
};

// One instantiated limit-group relator.  predicted_threshold is the least
// n from which the family's hypothesis forces triviality, when a support
// argument supplies one; rows tested only empirically carry nullopt.
struct RelatorInstance {
    std::string label;
    Word word;
    std::optional<int> predicted_threshold;
};

// The relator schemas of the family's limit presentation, instantiated
// over the parameter ranges.  xn: R3, R4 and [ba^-1, a^i c a^-i]
// (threshold for i >= 1 computed exactly from x_0^i(t_n) >= 3/4, i <= 0
// left empirical); small: [a^i c a^-i, c] for i != 0 and [a^i b a^-i, c]
// (thresholds by direct scan); power: [c, a] and the (i, j, k) commutator
// grid with threshold max(1, ceil((j+1-k)/i)).
std::vector<RelatorInstance> limit_relators(const MarkingFamily& family, const LimitParams& params = {});

enum class StabClass { AllTrivial, AllNontrivial, Mixed };

struct Stabilization {
    StabClass cls;
    std::vector<int> flips;     // n where triviality differs from n-1
    std::vector<bool> pattern;  // triviality at n_lo..n_hi
};

// Triviality pattern of one word along a family window.
Stabilization stabilization_check(const Word& w, const MarkingFamily& family, int n_lo, int n_hi);

struct RelatorRow {
    std::string label;
    Word word;
    std::optional<int> predicted_threshold;
    std::optional<int> observed_stable_from;  // least n with w trivial from n through the window end
    std::optional<bool> sharp;                // nontrivial at threshold - 1, when that n was tested
    bool pass = false;                        // trivial at every tested n >= predicted threshold
};

struct BallRow {
    int n;
    std::vector<Word> ball;
};

struct ClassRow {
    Word rep;
    Stabilization stab;
};

struct ConvergenceReport {
    std::string family;
    int R;
    int n_lo;
    int n_hi;
    std::vector<RelatorRow> relators;
    std::vector<BallRow> balls;
    int stable_tail_start;        // least n with ball(n') identical for all n' >= n
    std::vector<Word> unstable;   // ball members not present at every n
    std::vector<ClassRow> classes;
    int stabilized_radius;        // largest R' <= R with identical truncated balls across the window
    bool all_pass;
};

// The two directions of convergence on a finite window: every instantiated
// relator must hold from its threshold on, and the relation balls along
// the window are compared, truncated, and classified word by word.
// Relator rows are never filtered by R; the ball radius only limits parts
// (b) and (c).
ConvergenceReport verify_limit_convergence(const MarkingFamily& family, const LimitParams& params, int R,
                                           int n_lo, int n_hi, int jobs = 1);

}  // namespace thf

#endif
