#ifndef THF_PLMAP_HPP
#define THF_PLMAP_HPP

#include "thf/dyadic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thf {

struct PLPoint {
    Dyadic x;
    Dyadic y;
    bool operator==(const PLPoint&) const = default;
};

// Piecewise linear homeomorphism of [0,1] with dyadic breakpoints and
// power-of-two slopes, i.e. an element of Thompson's group F.
//
// Invariant: pts_ runs from (0,0) to (1,1), strictly increasing in both
// coordinates, with no collinear interior point (adjacent segments always
// differ in slope).  seg_[i] is the slope exponent on segment i, so the map
// between pts_[i] and pts_[i+1] has slope 2^seg_[i].  Canonical form makes
// equality a plain breakpoint comparison.
class PLMap {
  public:
    PLMap();  // identity

    // Validates and canonicalizes.  Throws InvariantError unless the points
    // run from (0,0) to (1,1) strictly increasing with power-of-two slopes.
    static PLMap from_points(std::vector<PLPoint> pts);

    // The map sending xs[i] to ys[i], linear with power-of-two slopes in
    // between.  Both vectors must be strictly increasing partitions of
    // [0,1] of equal length.  Pieces are realized by matching standard
    // dyadic subdivisions of each interval pair, refined deterministically
    // (the larger count wins, the shorter side halves its largest piece,
    // leftmost on ties), so equal inputs give identical maps everywhere.
    static PLMap from_partitions(const std::vector<Dyadic>& xs, const std::vector<Dyadic>& ys);

    const std::vector<PLPoint>& breakpoints() const { return pts_; }
    std::size_t segment_count() const { return pts_.size() - 1; }
    std::int64_t segment_slope_exponent(std::size_t i) const { return seg_[i]; }

    bool is_identity() const { return pts_.size() == 2; }
    bool operator==(const PLMap& o) const { return pts_ == o.pts_; }

    Dyadic evaluate(const Dyadic& x) const;
    Dyadic inverse_at(const Dyadic& y) const;

    PLMap inverse() const;
    // (this->compose(g))(x) == (*this)(g(x)): g acts first.
    PLMap compose(const PLMap& g) const;
    PLMap pow(long long k) const;

    // Closure of {x : f(x) != x}, as disjoint closed intervals in
    // increasing order.  Empty for the identity.
    std::vector<std::pair<Dyadic, Dyadic>> support() const;

    enum class Endpoint { Zero, One };
    std::int64_t slope_exponent_at(Endpoint e) const;

    // Some breakpoint (x, f(x)) with f(x) != x, if the map is not the
    // identity.  A non-identity map always has one.
    std::optional<PLPoint> moved_breakpoint() const;

    std::string str() const;

  private:
    PLMap(std::vector<PLPoint> pts, std::vector<std::int64_t> seg)
        : pts_(std::move(pts)), seg_(std::move(seg)) {}

    std::vector<PLPoint> pts_;
    std::vector<std::int64_t> seg_;
};

inline PLMap compose(const PLMap& f, const PLMap& g) { return f.compose(g); }

// Partition a = t_0 < t_1 < ... < t_k = b of a dyadic interval into
// standard dyadic intervals [m/2^q, (m+1)/2^q], greedy largest-first from
// the left.  Requires 0 <= a < b <= 1.
std::vector<Dyadic> standard_decomposition(const Dyadic& a, const Dyadic& b);

// Conjugate f into [a, b]: the result agrees with a rescaled copy of f on
// [a, b] and is the identity outside.  Requires 0 <= a < b <= 1.
PLMap rescale_into(const PLMap& f, const Dyadic& a, const Dyadic& b);

// The standard generator x_n.  x_0 has breakpoints (1/2,1/4) and (3/4,1/2);
// x_n for n >= 1 is x_0 squeezed into [1 - 2^-n, 1].
PLMap generator(int n);

namespace pl_detail {

// Raw point-list machinery shared by compose, rescale and the partition
// builders.  Lists are strictly increasing in both coordinates but need not
// start at (0,0) or end at (1,1).

// A∘B, candidate breakpoints merged exactly in the shared middle space.
// Requires B's last y == A's last x and B's first y == A's first x.
std::vector<PLPoint> compose_points(const std::vector<PLPoint>& a, const std::vector<PLPoint>& b);

std::vector<PLPoint> invert_points(std::vector<PLPoint> pts);

// PL bijection [a,b] -> [c,d] built from matched standard decompositions.
std::vector<PLPoint> map_interval_points(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d);

}  // namespace pl_detail

}  // namespace thf

#endif
