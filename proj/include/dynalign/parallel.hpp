#ifndef DYNALIGN_PARALLEL_HPP
#define DYNALIGN_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace dynalign {

// Runs fn(i) for i in [begin, end) over the given number of workers. Each index
// is processed exactly once and results must be written to disjoint slots, so
// the outcome is identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn fn) {
    const std::size_t count = end > begin ? end - begin : 0;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([=] {
            for (std::size_t i = begin + w; i < end; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dynalign

#endif  // DYNALIGN_PARALLEL_HPP
