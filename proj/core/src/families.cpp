#include "thf/families.hpp"

#include "thf/errors.hpp"
#include "thf/girth.hpp"
#include "thf/normal_form.hpp"
#include "thf/parallel.hpp"

#include <algorithm>
#include <set>

namespace thf {
namespace {

std::string at_n(const std::string& family, int n) {
    return family + " family at n=" + std::to_string(n);
}

void check_xn_hypothesis(const PLMap& c, const Dyadic& t, int n) {
    if (t.sign() < 0 || !(t < Dyadic(1)))
        throw HypothesisError(at_n("xn", n) + ": t_n must lie in [0, 1)");
    auto sup = c.support();
    if (!sup.empty() && sup.front().first < t)
        throw HypothesisError(at_n("xn", n) + ": support reaches below t_n = " + t.str());
    Dyadic lo = (Dyadic(3) + t).mul_pow2(-2);   // (3 + t)/4
    Dyadic mid = (Dyadic(1) + t).mul_pow2(-1);  // (1 + t)/2
    if (c.evaluate(lo) != mid)
        throw HypothesisError(at_n("xn", n) + ": image of (3+t_n)/4 is " + c.evaluate(lo).str() +
                              ", not (1+t_n)/2 = " + mid.str());
    for (const PLPoint& p : c.breakpoints())
        if (lo < p.x && p.x < Dyadic(1))
            throw HypothesisError(at_n("xn", n) + ": not linear on [(3+t_n)/4, 1], breakpoint at " + p.x.str());
}

void check_small_hypothesis(const PLMap& c, const Dyadic& r, const Dyadic& s, int n) {
    if (r.sign() <= 0 || !(r < s) || !(s <= Dyadic(1)))
        throw HypothesisError(at_n("small", n) + ": need 0 < r_n < s_n <= 1");
    if (!(s < r.mul_pow2(1)))
        throw HypothesisError(at_n("small", n) + ": s_n = " + s.str() + " is not below 2 r_n = " +
                              r.mul_pow2(1).str());
    auto sup = c.support();
    if (!sup.empty() && (sup.front().first < r || s < sup.back().second))
        throw HypothesisError(at_n("small", n) + ": support escapes [r_n, s_n]");
    if (s < Dyadic(1, 1) && !(generator(0).evaluate(s) < r))
        throw HypothesisError(at_n("small", n) + ": x_0 translate of [r_n, s_n] meets it");
}

Word conjugated_power(const Word& w, int i) {
    // a^i w a^-i as a literal word, freely reduced by construction
    return generator_power(0, i) * w * generator_power(0, -i);
}

std::optional<int> scan_first(int scan_max, const std::function<bool(int)>& pred) {
    for (int n = 1; n <= scan_max; ++n)
        if (pred(n)) return n;
    return std::nullopt;
}

}  // namespace

Marking MarkingFamily::at(int n) const {
    if (n < 1) throw HypothesisError(name + " family is indexed by n >= 1");
    validate(n);
    return Marking({generator(0), generator(1), third(n)});
}

MarkingFamily family_xn_custom(std::function<Word(int)> word_rule, std::function<Dyadic(int)> t_rule) {
    MarkingFamily f;
    f.name = "xn";
    f.word_at = word_rule;
    f.support_floor = t_rule;
    f.third = [word_rule](int n) { return Marking::standard(2).evaluate(word_rule(n)); };
    f.validate = [word_rule, t_rule](int n) {
        check_xn_hypothesis(Marking::standard(2).evaluate(word_rule(n)), t_rule(n), n);
    };
    return f;
}

MarkingFamily family_xn() {
    MarkingFamily f;
    f.name = "xn";
    f.third = [](int n) { return generator(n); };
    f.support_floor = [](int n) { return Dyadic(1) - Dyadic::pow2(-n); };
    f.word_at = [](int n) {
        return generator_power(0, -(n - 1)) * Word::parse("b") * generator_power(0, n - 1);
    };
    f.validate = [](int n) {
        check_xn_hypothesis(generator(n), Dyadic(1) - Dyadic::pow2(-n), n);
    };
    return f;
}

MarkingFamily family_small_support_custom(std::function<PLMap(int)> map_rule,
                                          std::function<std::pair<Dyadic, Dyadic>(int)> box_rule) {
    MarkingFamily f;
    f.name = "small";
    f.third = map_rule;
    f.support_box = box_rule;
    f.word_at = [map_rule](int n) { return normal_form_to_word(normal_form_of(map_rule(n))); };
    f.validate = [map_rule, box_rule](int n) {
        auto [r, s] = box_rule(n);
        check_small_hypothesis(map_rule(n), r, s, n);
    };
    return f;
}

MarkingFamily family_small_support() {
    return family_small_support_custom(
        [](int n) { return rescale_into(generator(0), Dyadic::pow2(-(n + 1)), Dyadic(3, n + 2)); },
        [](int n) { return std::pair<Dyadic, Dyadic>(Dyadic::pow2(-(n + 1)), Dyadic(3, n + 2)); });
}

MarkingFamily family_power() {
    MarkingFamily f;
    f.name = "power";
    f.third = [](int n) { return generator(0).pow(n); };
    f.word_at = [](int n) { return generator_power(0, n); };
    f.validate = [](int n) {
        if (!generator(0).pow(n).inverse().compose(generator(0).pow(n)).is_identity())
            throw HypothesisError(at_n("power", n) + ": c^-1 a^n is not the identity");
    };
    return f;
}

MarkingFamily family_by_name(const std::string& name) {
    if (name == "xn") return family_xn();
    if (name == "small") return family_small_support();
    if (name == "power") return family_power();
    throw InvariantError("unknown family '" + name + "' (expected xn | small | power)");
}

std::vector<RelatorInstance> limit_relators(const MarkingFamily& family, const LimitParams& params) {
    if (params.i_range < 0 || params.j_max < 0 || params.k_max < 0 || params.threshold_scan_max < 1)
        throw InvariantError("empty parameter range");
    std::vector<RelatorInstance> out;
    const Word a = Word::parse("a");
    const Word b = Word::parse("b");
    const Word c = Word::parse("c");

    if (family.name == "xn") {
        // R3, R4: the presentation relators of the (a, c) pair; forced
        // once the support floor clears 1/2
        std::optional<int> base;
        if (family.support_floor)
            base = scan_first(params.threshold_scan_max,
                              [&](int n) { return Dyadic(1, 1) <= family.support_floor(n); });
        out.push_back({"R3", commutator(Word::parse("cA"), Word::parse("Aca")), base});
        out.push_back({"R4", commutator(Word::parse("cA"), Word::parse("AAcaa")), base});
        // [b a^-1, a^i c a^-i]: for i >= 1 forced once x_0^i maps
        // [t_n, 1] into [3/4, 1]; i <= 0 observed only
        for (int i = -params.i_range; i <= params.i_range; ++i) {
            std::optional<int> thr;
            if (i >= 1 && family.support_floor) {
                PLMap ai = generator(0).pow(i);
                thr = scan_first(params.threshold_scan_max, [&](int n) {
                    return Dyadic(3, 2) <= ai.evaluate(family.support_floor(n));
                });
            }
            out.push_back({"xn-comm i=" + std::to_string(i),
                           commutator(Word::parse("bA"), conjugated_power(c, i)), thr});
        }
    } else if (family.name == "small") {
        // thresholds by direct scan; at(n) revalidates the hypothesis
        auto scanned = [&](const Word& w) {
            return scan_first(params.threshold_scan_max, [&](int n) { return family.at(n).is_trivial(w); });
        };
        for (int i = -params.i_range; i <= params.i_range; ++i) {
            if (i != 0) {
                Word w = commutator(conjugated_power(c, i), c);
                out.push_back({"small-cc i=" + std::to_string(i), w, scanned(w)});
            }
            Word w = commutator(conjugated_power(b, i), c);
            out.push_back({"small-bc i=" + std::to_string(i), w, scanned(w)});
        }
    } else if (family.name == "power") {
        out.push_back({"power [c,a]", commutator(c, a), 1});
        for (int i = 1; i <= params.i_range; ++i)
            for (int j = 0; j <= params.j_max; ++j)
                for (int k = 0; k <= params.k_max; ++k) {
                    Word first = conjugated_power(b, -j) * Word::parse("A");
                    Word second = generator_power(2, -i) * conjugated_power(b, -k) * generator_power(2, i);
                    int need = j + 1 - k;
                    int thr = need <= 1 ? 1 : (need + i - 1) / i;
                    out.push_back({"power-grid i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                       " k=" + std::to_string(k),
                                   commutator(first, second), thr});
                }
    } else {
        throw InvariantError("no relator schemas for family '" + family.name + "'");
    }
    return out;
}

Stabilization stabilization_check(const Word& w, const MarkingFamily& family, int n_lo, int n_hi) {
    if (n_lo > n_hi) throw InvariantError("empty n range");
    if (n_lo < 1) throw HypothesisError(family.name + " family is indexed by n >= 1");
    Stabilization st;
    for (int n = n_lo; n <= n_hi; ++n) {
        bool t = family.at(n).is_trivial(w);
        if (!st.pattern.empty() && st.pattern.back() != t) st.flips.push_back(n);
        st.pattern.push_back(t);
    }
    bool all_t = std::all_of(st.pattern.begin(), st.pattern.end(), [](bool v) { return v; });
    bool all_n = std::none_of(st.pattern.begin(), st.pattern.end(), [](bool v) { return v; });
    st.cls = all_t ? StabClass::AllTrivial : (all_n ? StabClass::AllNontrivial : StabClass::Mixed);
    return st;
}

ConvergenceReport verify_limit_convergence(const MarkingFamily& family, const LimitParams& params, int R,
                                           int n_lo, int n_hi, int jobs) {
    if (n_lo > n_hi) throw InvariantError("empty n range");
    if (n_lo < 1) throw HypothesisError(family.name + " family is indexed by n >= 1");
    if (R < 1) throw InvariantError("ball radius must be >= 1");

    ConvergenceReport rep;
    rep.family = family.name;
    rep.R = R;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;

    std::vector<Marking> markings;
    for (int n = n_lo; n <= n_hi; ++n) markings.push_back(family.at(n));
    std::size_t window = markings.size();

    rep.all_pass = true;
    for (const RelatorInstance& ri : limit_relators(family, params)) {
        RelatorRow row{ri.label, ri.word, ri.predicted_threshold, std::nullopt, std::nullopt, true};
        std::vector<bool> trivial;
        for (const Marking& m : markings) trivial.push_back(m.is_trivial(ri.word));
        for (std::size_t t = window; t-- > 0;) {
            if (!trivial[t]) break;
            row.observed_stable_from = n_lo + static_cast<int>(t);
        }
        if (row.predicted_threshold) {
            int thr = *row.predicted_threshold;
            for (std::size_t t = 0; t < window; ++t)
                if (n_lo + static_cast<int>(t) >= thr && !trivial[t]) row.pass = false;
            if (thr - 1 >= n_lo && thr - 1 <= n_hi)
                row.sharp = !trivial[static_cast<std::size_t>(thr - 1 - n_lo)];
        }
        rep.all_pass = rep.all_pass && row.pass;
        rep.relators.push_back(std::move(row));
    }

    rep.balls = parallel_map_index(
        window,
        [&](std::size_t t) {
            return BallRow{n_lo + static_cast<int>(t), relation_ball(markings[t], R)};
        },
        jobs);

    rep.stable_tail_start = n_hi;
    for (std::size_t t = window - 1; t-- > 0;) {
        if (rep.balls[t].ball != rep.balls.back().ball) break;
        rep.stable_tail_start = n_lo + static_cast<int>(t);
    }
    std::set<Word> everywhere(rep.balls[0].ball.begin(), rep.balls[0].ball.end());
    std::set<Word> somewhere;
    for (const BallRow& br : rep.balls) {
        std::set<Word> here(br.ball.begin(), br.ball.end());
        somewhere.insert(here.begin(), here.end());
        std::set<Word> kept;
        std::set_intersection(everywhere.begin(), everywhere.end(), here.begin(), here.end(),
                              std::inserter(kept, kept.begin()));
        everywhere = std::move(kept);
    }
    for (const Word& w : somewhere)
        if (!everywhere.count(w)) rep.unstable.push_back(w);
    std::sort(rep.unstable.begin(), rep.unstable.end());

    rep.stabilized_radius = R;
    for (const Word& w : rep.unstable)
        rep.stabilized_radius = std::min(rep.stabilized_radius, static_cast<int>(w.length()) - 1);

    std::vector<Word> reps;
    for_each_class_rep(3, R, [&](const Word& w) { reps.push_back(w); });
    rep.classes = parallel_map_index(
        reps.size(),
        [&](std::size_t t) {
            Stabilization st;
            for (const Marking& m : markings) {
                bool tv = m.is_trivial(reps[t]);
                if (!st.pattern.empty() && st.pattern.back() != tv)
                    st.flips.push_back(n_lo + static_cast<int>(st.pattern.size()));
                st.pattern.push_back(tv);
            }
            bool all_t = std::all_of(st.pattern.begin(), st.pattern.end(), [](bool v) { return v; });
            bool all_n = std::none_of(st.pattern.begin(), st.pattern.end(), [](bool v) { return v; });
            st.cls = all_t ? StabClass::AllTrivial : (all_n ? StabClass::AllNontrivial : StabClass::Mixed);
            return ClassRow{reps[t], std::move(st)};
        },
        jobs);

    return rep;
}

}  // namespace thf
