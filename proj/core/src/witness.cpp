#include "thf/witness.hpp"

#include "thf/errors.hpp"
#include "thf/girth.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace thf {
namespace {

// Everything one word contributes to the construction: constraint pairs
// per witness letter, identity pins at the endpoints of every translate
// the trajectory visited, and the certificate endpoints.
struct Placement {
    std::vector<std::vector<PLPoint>> pairs;  // indexed by letter, [0] unused
    std::vector<Dyadic> pins;
    Dyadic base;
    Dyadic final;
};

// Walk the word over its anchor slice [lo, hi].  The trajectory starts at
// the slice midpoint; each witness letter advances the point halfway
// toward the top of the current translate 2^-c [lo, hi], and each 'a' run
// moves it linearly between translates.  Every translate sits inside
// (0, 1/2), where x_0 is exactly x/2, so the 'a' moves are multiplications
// by powers of two.  The normalized position 2^c p strictly increases at
// every witness letter and survives translation unchanged, which is what
// keeps all recorded pairs consistent and the final point distinct from
// the base.
Placement place_word(const Word& w, int rank, const Dyadic& lo, const Dyadic& hi, std::int64_t depth) {
    Placement out;
    out.pairs.resize(static_cast<std::size_t>(rank));

    // split into blocks a^{e_s} B_s; interior runs are nonempty because w
    // is freely reduced
    struct Block {
        long long e;
        std::vector<Letter> bs;
    };
    std::vector<Block> blocks;
    const auto& ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size()) {
        Block blk{0, {}};
        while (i < ls.size() && ls[i].gen == 0) {
            blk.e += ls[i].sign;
            ++i;
        }
        while (i < ls.size() && ls[i].gen != 0) {
            blk.bs.push_back(ls[i]);
            ++i;
        }
        blocks.push_back(std::move(blk));
    }

    long long c = 0;
    std::set<long long> visited{0};
    Dyadic cur = midpoint(lo, hi);
    out.base = cur;
    Dyadic lam = cur;  // normalized position, grows strictly
    for (auto bit = blocks.rbegin(); bit != blocks.rend(); ++bit) {
        for (auto lit = bit->bs.rbegin(); lit != bit->bs.rend(); ++lit) {
            Dyadic top = hi.mul_pow2(-c);
            Dyadic next = midpoint(cur, top);
            Dyadic next_lam = next.mul_pow2(c);
            THF_CHECK(lam < next_lam && next_lam < hi);
            lam = next_lam;
            if (lit->sign > 0) out.pairs[static_cast<std::size_t>(lit->gen)].push_back({cur, next});
            else out.pairs[static_cast<std::size_t>(lit->gen)].push_back({next, cur});
            cur = next;
        }
        c += bit->e;
        if (c < -depth || c > depth)
            throw InvariantError("word '" + w.str() + "' needs translation depth " + std::to_string(c > 0 ? c : -c) +
                                 " but the construction allows " + std::to_string(depth));
        cur = cur.mul_pow2(-bit->e);
        visited.insert(c);
    }
    out.final = cur;
    for (long long v : visited) {
        out.pins.push_back(lo.mul_pow2(-v));
        out.pins.push_back(hi.mul_pow2(-v));
    }
    return out;
}

std::int64_t ceil_log2(std::size_t q) {
    std::int64_t k = 0;
    while ((std::size_t{1} << k) < q) ++k;
    return k;
}

}  // namespace

WitnessSet construct_witnesses(const std::vector<Word>& words, const Dyadic& epsilon, int rank,
                               std::optional<std::int64_t> depth, const WitnessCaps& caps) {
    if (words.empty()) throw InvariantError("no words to witness");
    if (rank < 1 || rank > 26) throw InvariantError("rank out of range");
    if (epsilon.sign() <= 0) throw InvariantError("epsilon must be positive");
    if (!(epsilon < Dyadic(1, 1))) throw InvariantError("epsilon must be below 1/2");
    if (words.size() > caps.max_words)
        throw CapExceeded("word cap: " + std::to_string(words.size()) + " words, cap " +
                          std::to_string(caps.max_words));
    std::int64_t L = 0;
    for (const Word& w : words) {
        if (w.empty()) throw InvariantError("cannot witness the empty word");
        if (w.max_generator() >= rank)
            throw InvariantError("word '" + w.str() + "' uses letters beyond rank " + std::to_string(rank));
        L = std::max(L, static_cast<std::int64_t>(w.length()));
    }
    if (depth) {
        if (*depth < L) throw InvariantError("depth smaller than the longest word");
        L = *depth;
    }

    // anchor interval: [2^-(L+2), 2^-(L+1)] scaled by the power-of-two
    // floor of epsilon (capped at 1/4); all 2^-c translates for |c| <= L
    // then live in (0, epsilon/2]
    Dyadic eps_hat = Dyadic::pow2(std::min<std::int64_t>(epsilon.floor_log2(), -2));
    Dyadic anchor_lo = eps_hat.mul_pow2(-(L + 2));
    Dyadic anchor_hi = eps_hat.mul_pow2(-(L + 1));

    std::int64_t slices = ceil_log2(words.size());
    Dyadic slice_len = (anchor_hi - anchor_lo).mul_pow2(-slices);

    std::vector<Placement> placements;
    placements.reserve(words.size());
    for (std::size_t t = 0; t < words.size(); ++t) {
        Dyadic lo = anchor_lo + slice_len * Dyadic(static_cast<long long>(t));
        Dyadic hi = lo + slice_len;
        placements.push_back(place_word(words[t], rank, lo, hi, L));
    }

    WitnessSet out;
    out.epsilon_hat = eps_hat;
    out.depth = L;
    out.maps.push_back(generator(0));
    for (int g = 1; g < rank; ++g) {
        // assemble this letter's map from every word's constraints plus
        // identity pins; sorting by domain keeps values sorted too, by
        // the normalized-position argument above
        std::vector<PLPoint> cons{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}};
        for (const Placement& p : placements) {
            for (const Dyadic& pin : p.pins) cons.push_back({pin, pin});
            for (const PLPoint& pr : p.pairs[static_cast<std::size_t>(g)]) cons.push_back(pr);
        }
        std::sort(cons.begin(), cons.end(), [](const PLPoint& a, const PLPoint& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
        if (cons.size() > caps.max_breakpoints)
            throw CapExceeded("breakpoint cap: " + std::to_string(cons.size()) + " constraints, cap " +
                              std::to_string(caps.max_breakpoints));
        std::vector<Dyadic> xs;
        std::vector<Dyadic> ys;
        xs.reserve(cons.size());
        ys.reserve(cons.size());
        for (std::size_t t = 0; t < cons.size(); ++t) {
            if (t > 0 && (!(cons[t - 1].x < cons[t].x) || !(cons[t - 1].y < cons[t].y)))
                throw Error("constraint collision while assembling witness " + std::to_string(g));
            xs.push_back(cons[t].x);
            ys.push_back(cons[t].y);
        }
        out.maps.push_back(PLMap::from_partitions(xs, ys));
    }

    // verification: supports stay inside [0, epsilon), and every word
    // moves its base point exactly as placed
    for (int g = 1; g < rank; ++g) {
        auto sup = out.maps[static_cast<std::size_t>(g)].support();
        if (!sup.empty() && !(sup.back().second < epsilon))
            throw Error("witness support leaked past epsilon");
        if (!sup.empty() && !(sup.back().second <= eps_hat.mul_pow2(-1)))
            throw Error("witness support leaked past the translate band");
    }
    Marking mk(out.maps);
    for (std::size_t t = 0; t < words.size(); ++t) {
        Dyadic got = mk.apply(words[t], placements[t].base);
        if (got != placements[t].final || got == placements[t].base)
            throw Error("witness verification failed for '" + words[t].str() + "'");
        out.points.push_back({words[t], placements[t].base, placements[t].final});
    }
    return out;
}

WitnessSet construct_witness(const Word& w, const Dyadic& epsilon, std::optional<std::int64_t> depth) {
    return construct_witnesses({w}, epsilon, w.max_generator() + 1, depth, WitnessCaps{});
}

PartitionWitnessSet partition_witnesses(const std::vector<Word>& words, int rank,
                                        const std::vector<Dyadic>& partition, std::size_t tuple_cap) {
    if (words.empty()) throw InvariantError("no words to witness");
    if (rank < 1 || rank > 26) throw InvariantError("rank out of range");
    if (partition.size() != words.size() + 1)
        throw InvariantError("partition must have one interval per word");
    if (!partition.front().is_zero() || partition.back() != Dyadic(1))
        throw InvariantError("partition must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        if (!(partition[i] < partition[i + 1])) throw InvariantError("partition points must strictly increase");
    for (const Word& w : words) {
        if (w.empty()) throw InvariantError("cannot witness the empty word");
        if (w.max_generator() >= rank)
            throw InvariantError("word '" + w.str() + "' uses letters beyond rank " + std::to_string(rank));
    }

    // pool of candidate images: short standard-marking elements
    std::vector<Word> pool_words;
    for_each_reduced(2, 6, [&](const Word& w) { pool_words.push_back(w); });
    Marking std2 = Marking::standard(2);
    std::vector<PLMap> pool;
    pool.reserve(pool_words.size());
    for (const Word& w : pool_words) pool.push_back(std2.evaluate(w));

    PartitionWitnessSet out;
    out.maps.assign(static_cast<std::size_t>(rank), PLMap());
    std::vector<std::vector<std::size_t>> chosen;

    for (const Word& w : words) {
        // smallest tuple by (max pool index, lex) whose marking does not
        // kill the word
        std::optional<std::vector<std::size_t>> found;
        std::size_t tried = 0;
        std::vector<std::size_t> idx(static_cast<std::size_t>(rank), 0);
        for (std::size_t m = 0; m < pool.size() && !found; ++m) {
            // tuples with max index exactly m, lexicographic
            std::function<void(std::size_t, bool)> rec = [&](std::size_t pos, bool used_m) {
                if (found || tried > tuple_cap) return;
                if (pos == idx.size()) {
                    if (!used_m) return;
                    if (++tried > tuple_cap) return;
                    std::vector<PLMap> tup;
                    for (std::size_t j : idx) tup.push_back(pool[j]);
                    if (!Marking(std::move(tup)).is_trivial(w)) found = idx;
                    return;
                }
                for (std::size_t j = 0; j <= m; ++j) {
                    idx[pos] = j;
                    rec(pos + 1, used_m || j == m);
                    if (found) return;
                }
            };
            rec(0, false);
            if (tried > tuple_cap) break;
        }
        if (!found)
            throw PoolExhausted("no pool tuple acts nontrivially for '" + w.str() + "' within cap");
        chosen.push_back(*found);
        std::vector<Word> tup_words;
        for (std::size_t j : *found) tup_words.push_back(pool_words[j]);
        out.tuples.push_back(std::move(tup_words));
    }

    // transplant each word's tuple into its own interval
    for (std::size_t t = 0; t < words.size(); ++t) {
        for (int g = 0; g < rank; ++g) {
            PLMap piece = rescale_into(pool[chosen[t][static_cast<std::size_t>(g)]], partition[t], partition[t + 1]);
            out.maps[static_cast<std::size_t>(g)] = out.maps[static_cast<std::size_t>(g)].compose(piece);
        }
    }

    Marking mk(out.maps);
    for (std::size_t t = 0; t < words.size(); ++t) {
        // witness point: a moved breakpoint of the tuple's transplanted
        // action; the composite marking must agree with the transplant on
        // this interval
        std::vector<PLMap> tup;
        for (std::size_t j : chosen[t]) tup.push_back(pool[j]);
        PLMap local = Marking(std::move(tup)).evaluate(words[t]);
        PLMap embedded = rescale_into(local, partition[t], partition[t + 1]);
        auto mb = embedded.moved_breakpoint();
        THF_CHECK(mb.has_value());
        Dyadic moved = mk.apply(words[t], mb->x);
        if (moved == mb->x || moved != mb->y)
            throw Error("transplanted witness failed for '" + words[t].str() + "'");
        out.points.push_back({words[t], mb->x, moved});
    }
    return out;
}

GirthResult girth_marking(int l, int m, GirthMode mode, const WitnessCaps& caps, bool certify) {
    if (l < 3) throw HypothesisError("need at least three marked generators");
    if (m < 1) throw HypothesisError("girth target must be positive");
    int k = l - 1;
    Dyadic eps = Dyadic::pow2(-(static_cast<std::int64_t>(m) * m + 2));
    std::int64_t L = 2LL * m * m;

    std::vector<Word> corpus;
    if (mode == GirthMode::Faithful) {
        if (count_reduced(k, static_cast<int>(L)) > BigInt(caps.max_words))
            throw CapExceeded("faithful corpus for m=" + std::to_string(m) + " has " +
                              count_reduced(k, static_cast<int>(L)).str() + " words, cap " +
                              std::to_string(caps.max_words));
        for_each_reduced(k, static_cast<int>(L), [&](const Word& w) { corpus.push_back(w); });
    } else {
        // substituted images of everything the girth claim quantifies over
        std::vector<Word> images;
        images.push_back(Word::parse("a"));
        images.push_back(generator_power(0, m) * generator_power(1, m));
        for (int i = 1; i <= l - 2; ++i) images.push_back(generator_power(i, 1));
        std::set<Word> dedup;
        for_each_reduced(l, m, [&](const Word& w) {
            Word w2 = w.substituted(images);
            if (w2.empty())
                throw InvariantError("substitution killed '" + w.str() + "', girth hypothesis fails");
            dedup.insert(w2);
        });
        corpus.assign(dedup.begin(), dedup.end());
        if (corpus.size() > caps.max_words)
            throw CapExceeded("targeted corpus has " + std::to_string(corpus.size()) + " words");
    }

    WitnessSet ws = construct_witnesses(corpus, eps, k, L, caps);
    PLMap beta = ws.maps[0].pow(m).compose(ws.maps[1].pow(m)).compose(generator(1));
    std::vector<PLMap> gens;
    gens.push_back(ws.maps[0]);
    gens.push_back(std::move(beta));
    for (int i = 1; i <= l - 2; ++i) gens.push_back(ws.maps[static_cast<std::size_t>(i)]);

    GirthResult res{Marking(std::move(gens)), std::move(corpus), eps, L, false, std::nullopt};
    if (certify) {
        res.relator = shortest_relator(res.marking, m);
        res.certified = true;
    }
    return res;
}

FactCheck verify_substitution_fact(int m) {
    std::vector<Word> images{Word::parse("a"), Word::parse("b"),
                             generator_power(0, m) * generator_power(1, m)};
    FactCheck out;
    out.holds = true;
    for_each_reduced(3, m, [&](const Word& w) {
        ++out.words_checked;
        if (out.holds && w.substituted(images).empty()) {
            out.holds = false;
            out.counterexample = w;
        }
    });
    return out;
}

}  // namespace thf
