#include "thf/plmap.hpp"

#include "thf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace thf {
namespace {

// Slope of the segment from p to q as an exponent; throws unless the
// segment strictly increases in both coordinates and the slope is a power
// of two.
std::int64_t slope_exponent(const PLPoint& p, const PLPoint& q) {
    Dyadic dx = q.x - p.x;
    Dyadic dy = q.y - p.y;
    if (dx.sign() <= 0 || dy.sign() <= 0)
        throw InvariantError("breakpoints must strictly increase in both coordinates (at x=" + p.x.str() + ")");
    auto [ox, vx] = dx.two_adic_split();
    auto [oy, vy] = dy.two_adic_split();
    if (ox != oy)
        throw InvariantError("slope on [" + p.x.str() + ", " + q.x.str() + "] is not a power of two");
    return vy - vx;
}

void halve_largest_piece(std::vector<Dyadic>& ts) {
    std::size_t best = 0;
    Dyadic best_len = ts[1] - ts[0];
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
        Dyadic len = ts[i + 1] - ts[i];
        if (len > best_len) {
            best = i;
            best_len = len;
        }
    }
    ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(best) + 1, midpoint(ts[best], ts[best + 1]));
}

}  // namespace

namespace pl_detail {

std::vector<PLPoint> compose_points(const std::vector<PLPoint>& a, const std::vector<PLPoint>& b) {
    THF_CHECK(a.size() >= 2 && b.size() >= 2);
    THF_CHECK(b.front().y == a.front().x && b.back().y == a.back().x);
    std::vector<std::int64_t> sa(a.size() - 1);
    std::vector<std::int64_t> sb(b.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) sa[i] = slope_exponent(a[i], a[i + 1]);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) sb[i] = slope_exponent(b[i], b[i + 1]);

    // Candidate breakpoints are b's breakpoints plus the preimages of a's.
    // Both families are sorted by their key in the shared middle space
    // (b's output = a's input), so one merge pass suffices and every
    // coordinate is computed on the segment that contains it.
    std::vector<PLPoint> out;
    out.reserve(a.size() + b.size());
    out.push_back({b.front().x, a.front().y});
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < b.size() || j < a.size()) {
        THF_CHECK(i < b.size() && j < a.size());
        const Dyadic& kb = b[i].y;
        const Dyadic& ka = a[j].x;
        if (kb == ka) {
            out.push_back({b[i].x, a[j].y});
            ++i;
            ++j;
        } else if (kb < ka) {
            out.push_back({b[i].x, a[j - 1].y + (kb - a[j - 1].x).mul_pow2(sa[j - 1])});
            ++i;
        } else {
            out.push_back({b[i - 1].x + (ka - b[i - 1].y).mul_pow2(-sb[i - 1]), a[j].y});
            ++j;
        }
    }
    return out;
}

std::vector<PLPoint> invert_points(std::vector<PLPoint> pts) {
    for (auto& p : pts) std::swap(p.x, p.y);
    return pts;
}

std::vector<PLPoint> map_interval_points(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d) {
    if (a == c && b == d) return {{a, c}, {b, d}};
    auto xs = standard_decomposition(a, b);
    auto ys = standard_decomposition(c, d);
    while (xs.size() < ys.size()) halve_largest_piece(xs);
    while (ys.size() < xs.size()) halve_largest_piece(ys);
    std::vector<PLPoint> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = {xs[i], ys[i]};
    return out;
}

}  // namespace pl_detail

PLMap::PLMap() : pts_{{Dyadic::zero(), Dyadic::zero()}, {Dyadic::one(), Dyadic::one()}}, seg_{0} {}

PLMap PLMap::from_points(std::vector<PLPoint> pts) {
    if (pts.size() < 2) throw InvariantError("a map needs at least two breakpoints");
    if (!(pts.front().x.is_zero() && pts.front().y.is_zero()))
        throw InvariantError("first breakpoint must be (0,0), got (" + pts.front().x.str() + "," + pts.front().y.str() + ")");
    if (!(pts.back().x == Dyadic::one() && pts.back().y == Dyadic::one()))
        throw InvariantError("last breakpoint must be (1,1), got (" + pts.back().x.str() + "," + pts.back().y.str() + ")");
    std::vector<PLPoint> out;
    std::vector<std::int64_t> seg;
    out.reserve(pts.size());
    out.push_back(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::int64_t s = slope_exponent(out.back(), pts[i]);
        if (!seg.empty() && seg.back() == s) {
            // collinear with the previous segment, extend it
            out.back() = pts[i];
        } else {
            out.push_back(pts[i]);
            seg.push_back(s);
        }
    }
    return PLMap(std::move(out), std::move(seg));
}

PLMap PLMap::from_partitions(const std::vector<Dyadic>& xs, const std::vector<Dyadic>& ys) {
    if (xs.size() != ys.size()) throw InvariantError("partition sizes differ");
    if (xs.size() < 2) throw InvariantError("a partition needs at least two points");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] < xs[i + 1]) || !(ys[i] < ys[i + 1]))
            throw InvariantError("partition points must strictly increase");
    }
    if (!xs.front().is_zero() || !ys.front().is_zero() || xs.back() != Dyadic::one() || ys.back() != Dyadic::one())
        throw InvariantError("partitions must run from 0 to 1");
    std::vector<PLPoint> pts;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        auto piece = pl_detail::map_interval_points(xs[i], xs[i + 1], ys[i], ys[i + 1]);
        for (std::size_t k = pts.empty() ? 0 : 1; k < piece.size(); ++k) pts.push_back(piece[k]);
    }
    return from_points(std::move(pts));
}

Dyadic PLMap::evaluate(const Dyadic& x) const {
    if (x.sign() < 0 || x > Dyadic::one()) throw InvariantError("evaluate outside [0,1]: " + x.str());
    std::size_t lo = 0;
    std::size_t hi = pts_.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts_[mid].x <= x) lo = mid;
        else hi = mid;
    }
    if (x == pts_[hi].x) return pts_[hi].y;
    return pts_[lo].y + (x - pts_[lo].x).mul_pow2(seg_[lo]);
}

Dyadic PLMap::inverse_at(const Dyadic& y) const {
    if (y.sign() < 0 || y > Dyadic::one()) throw InvariantError("inverse_at outside [0,1]: " + y.str());
    std::size_t lo = 0;
    std::size_t hi = pts_.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (pts_[mid].y <= y) lo = mid;
        else hi = mid;
    }
    if (y == pts_[hi].y) return pts_[hi].x;
    return pts_[lo].x + (y - pts_[lo].y).mul_pow2(-seg_[lo]);
}

PLMap PLMap::inverse() const {
    // Swapping coordinates negates every slope exponent, so the canonical
    // form is preserved as is.
    std::vector<PLPoint> pts = pl_detail::invert_points(pts_);
    std::vector<std::int64_t> seg(seg_.size());
    for (std::size_t i = 0; i < seg_.size(); ++i) seg[i] = -seg_[i];
    return PLMap(std::move(pts), std::move(seg));
}

PLMap PLMap::compose(const PLMap& g) const {
    return from_points(pl_detail::compose_points(pts_, g.pts_));
}

PLMap PLMap::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    PLMap r;
    for (long long i = 0; i < k; ++i) r = r.compose(*this);
    return r;
}

std::vector<std::pair<Dyadic, Dyadic>> PLMap::support() const {
    auto fixed = [&](std::size_t p) { return pts_[p].x == pts_[p].y; };
    std::vector<std::pair<Dyadic, Dyadic>> out;
    std::size_t nseg = pts_.size() - 1;
    std::size_t i = 0;
    while (i < nseg) {
        if (fixed(i) && fixed(i + 1)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < nseg && !(fixed(j) && fixed(j + 1))) ++j;
        out.emplace_back(pts_[i].x, pts_[j].x);
        i = j;
    }
    return out;
}

std::int64_t PLMap::slope_exponent_at(Endpoint e) const {
    return e == Endpoint::Zero ? seg_.front() : seg_.back();
}

std::optional<PLPoint> PLMap::moved_breakpoint() const {
    for (const auto& p : pts_)
        if (p.x != p.y) return p;
    return std::nullopt;
}

std::string PLMap::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) os << ", ";
        os << "(" << pts_[i].x << "," << pts_[i].y << ")";
    }
    os << "]";
    return os.str();
}

std::vector<Dyadic> standard_decomposition(const Dyadic& a, const Dyadic& b) {
    if (a.sign() < 0 || !(a < b) || b > Dyadic::one())
        throw InvariantError("standard_decomposition needs 0 <= a < b <= 1");
    std::vector<Dyadic> out{a};
    Dyadic cur = a;
    while (cur < b) {
        Dyadic rem = b - cur;
        std::int64_t q = -rem.floor_log2();
        if (cur.exponent() > q) q = cur.exponent();
        cur += Dyadic::pow2(-q);
        out.push_back(cur);
    }
    THF_CHECK(out.back() == b);
    return out;
}

PLMap rescale_into(const PLMap& f, const Dyadic& a, const Dyadic& b) {
    if (a.sign() < 0 || !(a < b) || b > Dyadic::one())
        throw InvariantError("rescale_into needs 0 <= a < b <= 1");
    auto psi = pl_detail::map_interval_points(Dyadic::zero(), Dyadic::one(), a, b);
    auto conj = pl_detail::compose_points(psi, pl_detail::compose_points(f.breakpoints(), pl_detail::invert_points(psi)));
    std::vector<PLPoint> pts;
    pts.reserve(conj.size() + 2);
    if (a.sign() > 0) pts.push_back({Dyadic::zero(), Dyadic::zero()});
    for (auto& p : conj) pts.push_back(std::move(p));
    if (b < Dyadic::one()) pts.push_back({Dyadic::one(), Dyadic::one()});
    return PLMap::from_points(std::move(pts));
}

PLMap generator(int n) {
    if (n < 0) throw InvariantError("generator index must be nonnegative");
    if (n == 0)
        return PLMap::from_points({{Dyadic::zero(), Dyadic::zero()},
                                   {Dyadic::pow2(-1), Dyadic::pow2(-2)},
                                   {Dyadic(3, 2), Dyadic::pow2(-1)},
                                   {Dyadic::one(), Dyadic::one()}});
    Dyadic one = Dyadic::one();
    return PLMap::from_points({{Dyadic::zero(), Dyadic::zero()},
                               {one - Dyadic::pow2(-n), one - Dyadic::pow2(-n)},
                               {one - Dyadic::pow2(-n - 1), one - Dyadic(3, n + 2)},
                               {one - Dyadic::pow2(-n - 2), one - Dyadic::pow2(-n - 1)},
                               {one, one}});
}

}  // namespace thf
