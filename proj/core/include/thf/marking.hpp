#ifndef THF_MARKING_HPP
#define THF_MARKING_HPP

#include "thf/plmap.hpp"
#include "thf/word.hpp"

#include <vector>

namespace thf {

// A marked copy of F: an ordered tuple of maps, one per generator letter.
// Words over the first rank() letters evaluate against it.
class Marking {
  public:
    explicit Marking(std::vector<PLMap> images);

    // Generators x_0 .. x_{rank-1}.
    static Marking standard(int rank);

    std::size_t rank() const { return images_.size(); }
    const PLMap& image(int g) const;
    const std::vector<PLMap>& images() const { return images_; }

    // Full composition; the rightmost letter acts first, so
    // evaluate(parse("ab")) is image(a) after image(b) ... i.e. the map
    // x -> image_a(image_b(x)).
    PLMap evaluate(const Word& w) const;

    // The same action on a single point, without building the composite.
    Dyadic apply(const Word& w, Dyadic x) const;

    // Exact identity test.  Endpoint slopes and stored probe points give
    // fast sound rejections; only words that survive both get the full
    // composition.
    bool is_trivial(const Word& w) const;

    // Slope exponent of the composite at an endpoint, from the letter
    // slopes alone (the germ at a common fixed point multiplies).
    std::int64_t slope_exponent_at(const Word& w, PLMap::Endpoint e) const;

    void add_probe(Dyadic x);
    const std::vector<Dyadic>& probes() const { return probes_; }

  private:
    const PLMap& letter_map(const Letter& l) const;

    std::vector<PLMap> images_;
    std::vector<PLMap> inverses_;
    std::vector<std::int64_t> s0_;
    std::vector<std::int64_t> s1_;
    std::vector<Dyadic> probes_;
};

}  // namespace thf

#endif
