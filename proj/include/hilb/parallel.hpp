#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace hilb {

/// Resolve a thread-count request: values < 1 mean "use all cores".
inline int effective_threads(int requested) {
    unsigned hw = std::thread::hardware_concurrency();
    int cores = hw == 0 ? 1 : static_cast<int>(hw);
    return requested < 1 ? cores : std::min(requested, cores);
}

/// Sum term(i) for i in [0, count) into an accumulator of type T (T needs a
/// default constructor and operator+=). Work is split into contiguous chunks
/// and partial sums are merged in chunk order, so with exact arithmetic the
/// result is identical to a sequential sum.
template <typename T, typename Fn>
T parallel_sum(std::size_t count, Fn&& term, int threads = 0) {
    int workers = effective_threads(threads);
    if (workers <= 1 || count < 2) {
        T total{};
        for (std::size_t i = 0; i < count; ++i) total += term(i);
        return total;
    }
    workers = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<T> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t begin = count * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
            std::size_t end = count * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
            T local{};
            for (std::size_t i = begin; i < end; ++i) local += term(i);
            partial[static_cast<std::size_t>(w)] = std::move(local);
        });
    }
    for (auto& t : pool) t.join();
    T total{};
    for (auto& part : partial) total += part;
    return total;
}

}  // namespace hilb
