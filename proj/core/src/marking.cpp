#include "thf/marking.hpp"

#include "thf/errors.hpp"

#include <algorithm>

namespace thf {

Marking::Marking(std::vector<PLMap> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvariantError("a marking needs at least one generator");
    inverses_.reserve(images_.size());
    s0_.reserve(images_.size());
    s1_.reserve(images_.size());
    for (const PLMap& f : images_) {
        inverses_.push_back(f.inverse());
        s0_.push_back(f.slope_exponent_at(PLMap::Endpoint::Zero));
        s1_.push_back(f.slope_exponent_at(PLMap::Endpoint::One));
    }
    // Default probes: a coarse grid plus one moved point per generator, so
    // a word acting like any single letter near its support gets caught
    // without composing.
    for (int j = 1; j < 16; ++j) probes_.push_back(Dyadic(j, 4));
    for (const PLMap& f : images_) {
        if (auto p = f.moved_breakpoint()) probes_.push_back(p->x);
    }
    std::sort(probes_.begin(), probes_.end());
    probes_.erase(std::unique(probes_.begin(), probes_.end()), probes_.end());
}

Marking Marking::standard(int rank) {
    std::vector<PLMap> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int g = 0; g < rank; ++g) images.push_back(generator(g));
    return Marking(std::move(images));
}

const PLMap& Marking::image(int g) const {
    if (g < 0 || static_cast<std::size_t>(g) >= images_.size())
        throw InvariantError("marking has no generator " + std::string(1, static_cast<char>('a' + g)));
    return images_[static_cast<std::size_t>(g)];
}

const PLMap& Marking::letter_map(const Letter& l) const {
    image(l.gen);  // bounds check
    return l.sign > 0 ? images_[static_cast<std::size_t>(l.gen)] : inverses_[static_cast<std::size_t>(l.gen)];
}

PLMap Marking::evaluate(const Word& w) const {
    PLMap acc;
    for (const Letter& l : w.letters()) acc = acc.compose(letter_map(l));
    return acc;
}

Dyadic Marking::apply(const Word& w, Dyadic x) const {
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) x = letter_map(*it).evaluate(x);
    return x;
}

std::int64_t Marking::slope_exponent_at(const Word& w, PLMap::Endpoint e) const {
    const auto& s = e == PLMap::Endpoint::Zero ? s0_ : s1_;
    std::int64_t sum = 0;
    for (const Letter& l : w.letters()) {
        image(l.gen);
        sum += l.sign * s[static_cast<std::size_t>(l.gen)];
    }
    return sum;
}

bool Marking::is_trivial(const Word& w) const {
    if (w.empty()) return true;
    if (slope_exponent_at(w, PLMap::Endpoint::Zero) != 0) return false;
    if (slope_exponent_at(w, PLMap::Endpoint::One) != 0) return false;
    for (const Dyadic& p : probes_)
        if (apply(w, p) != p) return false;
    return evaluate(w).is_identity();
}

void Marking::add_probe(Dyadic x) {
    auto it = std::lower_bound(probes_.begin(), probes_.end(), x);
    if (it != probes_.end() && *it == x) return;
    probes_.insert(it, std::move(x));
}

}  // namespace thf
