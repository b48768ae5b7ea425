#include "thf/word.hpp"

#include "thf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace thf {
namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) out.pop_back();
    else out.push_back(l);
}

std::strong_ordering compare_letters(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = letter_rank(a[i]);
        int rb = letter_rank(b[i]);
        if (ra != rb) return ra <=> rb;
    }
    return std::strong_ordering::equal;
}

}  // namespace

Word Word::from_letters(std::vector<Letter> letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.gen < 0 || l.gen >= 26 || (l.sign != 1 && l.sign != -1))
            throw InvariantError("bad letter");
        push_reduced(w.letters_, l);
    }
    return w;
}

Word Word::parse(const std::string& text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("bad word: '" + text + "'");
        return Word();
    }
    while (i < text.size()) {
        char c = text[i];
        if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("bad word character '" + std::string(1, c) + "'");
        Letter l{std::tolower(static_cast<unsigned char>(c)) - 'a', std::islower(static_cast<unsigned char>(c)) ? 1 : -1};
        ++i;
        long long count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("bad exponent in '" + text + "'");
            count = std::stoll(text.substr(start, i - start));
            if (count == 0) throw ParseError("zero exponent in '" + text + "'");
            if (neg) l.sign = -l.sign;
        }
        for (long long k = 0; k < count; ++k) push_reduced(letters, l);
        skip_ws();
    }
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_)
        s.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.gen));
    return s;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->sign});
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w;
    w.letters_ = letters_;
    for (const Letter& l : o.letters_) push_reduced(w.letters_, l);
    return w;
}

Word Word::pow(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Word r;
    for (long long i = 0; i < k; ++i) r = r * base;
    return r;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    return compare_letters(letters_, o.letters_);
}

bool Word::uses_generator(int g) const {
    return std::any_of(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.gen == g; });
}

long long Word::exponent_sum(int g) const {
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == g) s += l.sign;
    return s;
}

Word Word::conjugated_by(const Word& g) const {
    return g.inverse() * *this * g;
}

Word Word::cyclically_reduced() const {
    std::vector<Letter> ls = letters_;
    std::size_t lo = 0;
    std::size_t hi = ls.size();
    while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    Word w;
    w.letters_.assign(ls.begin() + static_cast<std::ptrdiff_t>(lo), ls.begin() + static_cast<std::ptrdiff_t>(hi));
    return w;
}

Word Word::canonical_class_rep() const {
    Word cyc = cyclically_reduced();
    if (cyc.empty()) return cyc;
    Word best = cyc;
    for (const Word& base : {cyc, cyc.inverse()}) {
        std::vector<Letter> ls = base.letters_;
        for (std::size_t r = 0; r < ls.size(); ++r) {
            std::rotate(ls.begin(), ls.begin() + 1, ls.end());
            Word cand;
            cand.letters_ = ls;
            if (cand < best) best = cand;
        }
    }
    return best;
}

Word Word::substituted(std::span<const Word> images) const {
    Word out;
    for (const Letter& l : letters_) {
        if (l.gen >= static_cast<int>(images.size()))
            throw InvariantError("no image for generator " + std::string(1, static_cast<char>('a' + l.gen)));
        out = out * (l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
    }
    return out;
}

Word generator_power(int gen, long long k) {
    Word w;
    if (k == 0) return w;
    std::vector<Letter> ls(static_cast<std::size_t>(k < 0 ? -k : k), Letter{gen, k < 0 ? -1 : 1});
    return Word::from_letters(std::move(ls));
}

void for_each_reduced(int rank, int maxlen, const std::function<void(const Word&)>& cb) {
    if (rank <= 0 || rank > 26) throw InvariantError("rank out of range");
    std::vector<int> ranks;
    std::vector<Letter> letters;
    // depth-first over letter ranks, one pass per length keeps the order
    // length-major
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            Word w;
            w = Word::from_letters(letters);
            cb(w);
            return;
        }
        for (int r = 0; r < 2 * rank; ++r) {
            if (!ranks.empty() && (ranks.back() ^ 1) == r) continue;
            ranks.push_back(r);
            letters.push_back(letter_from_rank(r));
            rec(remaining - 1);
            ranks.pop_back();
            letters.pop_back();
        }
    };
    for (int len = 1; len <= maxlen; ++len) rec(len);
}

void for_each_class_rep(int rank, int maxlen, const std::function<void(const Word&)>& cb) {
    for_each_reduced(rank, maxlen, [&](const Word& w) {
        if (w.canonical_class_rep() == w) cb(w);
    });
}

BigInt count_reduced(int rank, int maxlen) {
    BigInt total = 0;
    BigInt level = 2 * rank;
    for (int len = 1; len <= maxlen; ++len) {
        total += level;
        level *= 2 * rank - 1;
    }
    return total;
}

}  // namespace thf
