#ifndef THF_PARALLEL_HPP
#define THF_PARALLEL_HPP

#include <cstddef>
#include <future>
#include <utility>
#include <vector>

namespace thf {

// fn(i) for i in 0..count-1, chunked over at most `jobs` async workers,
// results concatenated in index order.  The output is identical for every
// jobs value; fn must be safe to call concurrently on distinct i.
template <typename F>
auto parallel_map_index(std::size_t count, F fn, int jobs)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out;
    out.reserve(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }
    std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::future<std::vector<R>>> futs;
    futs.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = c * count / chunks;
        std::size_t hi = (c + 1) * count / chunks;
        futs.push_back(std::async(std::launch::async, [&fn, lo, hi] {
            std::vector<R> part;
            part.reserve(hi - lo);
            for (std::size_t i = lo; i < hi; ++i) part.push_back(fn(i));
            return part;
        }));
    }
    for (auto& f : futs) {
        auto part = f.get();
        for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace thf

#endif
