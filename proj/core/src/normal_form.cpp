#include "thf/normal_form.hpp"

#include "thf/errors.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace thf {
namespace {

struct XLetter {
    long long idx;
    int sign;
};

// x_j x_i = x_i x_{j+1} for i < j drives all three rewriting passes.

// Move every inverse letter to the right of every positive letter.  Each
// rewrite pushes one inverse a step right, so the pass count is bounded by
// the number of crossing pairs.
void move_negatives_right(std::vector<XLetter>& v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < v.size(); ++t) {
            if (v[t].sign > 0 || v[t + 1].sign < 0) continue;
            long long i = v[t].idx;
            long long j = v[t + 1].idx;
            if (i == j) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(t), v.begin() + static_cast<std::ptrdiff_t>(t) + 2);
            } else if (i < j) {
                v[t] = {j + 1, 1};
                v[t + 1] = {i, -1};
            } else {
                v[t] = {j, 1};
                v[t + 1] = {i + 1, -1};
            }
            changed = true;
            break;
        }
    }
}

// Bubble the positive prefix into nondecreasing index order.
void sort_positives(std::vector<XLetter>& v, std::size_t lo, std::size_t hi) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = lo; t + 1 < hi; ++t) {
            long long p = v[t].idx;
            long long q = v[t + 1].idx;
            if (p <= q) continue;
            v[t] = {q, 1};
            v[t + 1] = {p + 1, 1};
            changed = true;
        }
    }
}

// Mirror image for the inverse suffix: indices nonincreasing left to
// right, using x_i^-1 x_j^-1 = x_{j+1}^-1 x_i^-1 for i < j.
void sort_negatives(std::vector<XLetter>& v, std::size_t lo, std::size_t hi) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = lo; t + 1 < hi; ++t) {
            long long i = v[t].idx;
            long long j = v[t + 1].idx;
            if (i >= j) continue;
            v[t] = {j + 1, -1};
            v[t + 1] = {i, -1};
            changed = true;
        }
    }
}

// Enforce the uniqueness condition: while some index i carries both a
// positive and a negative letter with no x_{i+1} anywhere, strip one pair
// and pull every larger index down by one (the stripped pair conjugates
// the letters between them, which all have index >= i+2).
void reduce_runs(std::map<long long, long long>& apos, std::map<long long, long long>& aneg) {
    auto shift_down = [](std::map<long long, long long>& m, long long i) {
        std::map<long long, long long> out;
        for (auto& [k, e] : m) out[k > i ? k - 1 : k] = e;
        m = std::move(out);
    };
    while (true) {
        long long found = -1;
        for (const auto& [i, a] : apos) {
            if (aneg.count(i) && !apos.count(i + 1) && !aneg.count(i + 1)) {
                found = i;
                break;
            }
        }
        if (found < 0) break;
        if (--apos[found] == 0) apos.erase(found);
        if (--aneg[found] == 0) aneg.erase(found);
        shift_down(apos, found);
        shift_down(aneg, found);
    }
}

NormalForm from_runs(std::map<long long, long long> apos, std::map<long long, long long> aneg) {
    reduce_runs(apos, aneg);
    NormalForm nf;
    for (auto& [i, a] : apos) nf.pos.emplace_back(i, a);
    for (auto& [i, b] : aneg) nf.neg.emplace_back(i, b);
    return nf;
}

long long leaf_exponent(const Dyadic& lo, std::int64_t q) {
    long long e = 0;
    while (q > 0 && lo.exponent() <= q - 1) {
        // parent interval is [lo, lo + 2^(1-q)]; stop on the right spine
        if (lo + Dyadic::pow2(-(q - 1)) == Dyadic::one()) break;
        ++e;
        --q;
    }
    return e;
}

std::int64_t length_exponent(const Dyadic& len) {
    auto [odd, v] = len.two_adic_split();
    THF_CHECK(odd == 1 && v <= 0);
    return -v;
}

}  // namespace

std::string NormalForm::str() const {
    if (is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](long long i, long long e) {
        if (!first) os << ' ';
        first = false;
        os << 'x' << i;
        if (e != 1) os << '^' << e;
    };
    for (const auto& [i, a] : pos) emit(i, a);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) emit(it->first, -it->second);
    return os.str();
}

NormalForm NormalForm::parse(const std::string& text) {
    auto bad = [&]() -> ParseError { return ParseError("bad normal form: '" + text + "'"); };
    std::istringstream is(text);
    std::vector<std::pair<long long, long long>> entries;
    std::string tok;
    bool saw_one = false;
    while (is >> tok) {
        if (tok == "1") {
            saw_one = true;
            continue;
        }
        if (tok.size() < 2 || tok[0] != 'x') throw bad();
        std::size_t p = 1;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p == 1) throw bad();
        long long idx = std::stoll(tok.substr(1, p - 1));
        long long e = 1;
        if (p < tok.size()) {
            if (tok[p] != '^') throw bad();
            try {
                std::size_t used = 0;
                e = std::stoll(tok.substr(p + 1), &used);
                if (used != tok.size() - p - 1) throw bad();
            } catch (const std::logic_error&) {
                throw bad();
            }
            if (e == 0) throw bad();
        }
        entries.emplace_back(idx, e);
    }
    if (saw_one && !entries.empty()) throw bad();
    NormalForm nf;
    std::size_t t = 0;
    while (t < entries.size() && entries[t].second > 0) {
        if (!nf.pos.empty() && nf.pos.back().first >= entries[t].first)
            throw ParseError("positive indices must strictly increase: '" + text + "'");
        nf.pos.push_back(entries[t]);
        ++t;
    }
    for (; t < entries.size(); ++t) {
        if (entries[t].second > 0) throw ParseError("positive letter after negative part: '" + text + "'");
        if (!nf.neg.empty() && nf.neg.front().first <= entries[t].first)
            throw ParseError("negative indices must strictly decrease: '" + text + "'");
        nf.neg.insert(nf.neg.begin(), {entries[t].first, -entries[t].second});
    }
    return nf;
}

bool NormalForm::reduced_condition_holds() const {
    auto runs_ok = [](const std::vector<std::pair<long long, long long>>& runs) {
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (runs[i].first < 0 || runs[i].second <= 0) return false;
            if (i > 0 && runs[i - 1].first >= runs[i].first) return false;
        }
        return true;
    };
    if (!runs_ok(pos) || !runs_ok(neg)) return false;
    auto has = [](const std::vector<std::pair<long long, long long>>& runs, long long i) {
        for (const auto& [k, e] : runs)
            if (k == i) return true;
        return false;
    };
    for (const auto& [i, a] : pos) {
        if (has(neg, i) && !has(pos, i + 1) && !has(neg, i + 1)) return false;
    }
    return true;
}

long long NormalForm::weight() const {
    long long w = 0;
    for (const auto& [i, a] : pos) w += a;
    for (const auto& [i, b] : neg) w += b;
    return w;
}

NormalForm word_to_normal_form(const Word& w) {
    std::vector<XLetter> v;
    v.reserve(w.length());
    for (const Letter& l : w.letters()) v.push_back({l.gen, l.sign});
    move_negatives_right(v);
    std::size_t split = 0;
    while (split < v.size() && v[split].sign > 0) ++split;
    sort_positives(v, 0, split);
    sort_negatives(v, split, v.size());
    std::map<long long, long long> apos;
    std::map<long long, long long> aneg;
    for (std::size_t t = 0; t < split; ++t) apos[v[t].idx] += 1;
    for (std::size_t t = split; t < v.size(); ++t) aneg[v[t].idx] += 1;
    return from_runs(std::move(apos), std::move(aneg));
}

std::pair<std::vector<Dyadic>, std::vector<Dyadic>> standard_partition_pair(const PLMap& f) {
    std::vector<Dyadic> dom{Dyadic::zero()};
    std::vector<Dyadic> rng{Dyadic::zero()};
    const auto& pts = f.breakpoints();
    for (std::size_t seg = 0; seg + 1 < pts.size(); ++seg) {
        std::int64_t s = f.segment_slope_exponent(seg);
        std::function<void(const Dyadic&, std::int64_t)> emit = [&](const Dyadic& c, std::int64_t q) {
            if (f.evaluate(c).exponent() <= q - s) {
                Dyadic hi = c + Dyadic::pow2(-q);
                dom.push_back(hi);
                rng.push_back(f.evaluate(hi));
                return;
            }
            emit(c, q + 1);
            emit(c + Dyadic::pow2(-q - 1), q + 1);
        };
        auto pieces = standard_decomposition(pts[seg].x, pts[seg + 1].x);
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
            emit(pieces[i], length_exponent(pieces[i + 1] - pieces[i]));
    }
    return {std::move(dom), std::move(rng)};
}

NormalForm normal_form_of(const PLMap& f) {
    auto [dom, rng] = standard_partition_pair(f);
    THF_CHECK(dom.size() == rng.size());
    std::map<long long, long long> apos;
    std::map<long long, long long> aneg;
    for (std::size_t i = 0; i + 1 < dom.size(); ++i) {
        long long leaf = static_cast<long long>(i);
        long long b = leaf_exponent(dom[i], length_exponent(dom[i + 1] - dom[i]));
        long long a = leaf_exponent(rng[i], length_exponent(rng[i + 1] - rng[i]));
        if (a > 0) apos[leaf] = a;
        if (b > 0) aneg[leaf] = b;
    }
    return from_runs(std::move(apos), std::move(aneg));
}

Word normal_form_to_word(const NormalForm& nf) {
    auto gen_word = [](long long i) {
        if (i == 0) return Word::parse("a");
        return Word::parse("b").conjugated_by(generator_power(0, i - 1));
    };
    Word w;
    for (const auto& [i, a] : nf.pos) w = w * gen_word(i).pow(a);
    for (auto it = nf.neg.rbegin(); it != nf.neg.rend(); ++it)
        w = w * gen_word(it->first).pow(-it->second);
    return w;
}

PLMap evaluate_normal_form(const NormalForm& nf) {
    PLMap acc;
    for (const auto& [i, a] : nf.pos) {
        if (i > 1000000) throw InvariantError("normal form index too large to realize");
        acc = acc.compose(generator(static_cast<int>(i)).pow(a));
    }
    for (auto it = nf.neg.rbegin(); it != nf.neg.rend(); ++it) {
        if (it->first > 1000000) throw InvariantError("normal form index too large to realize");
        acc = acc.compose(generator(static_cast<int>(it->first)).pow(-it->second));
    }
    return acc;
}

}  // namespace thf
