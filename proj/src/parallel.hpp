#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zeck::detail {

inline unsigned effective_jobs(unsigned jobs)
{
    if (jobs != 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [begin, end) into contiguous chunks, runs fn(lo, hi) on each with
/// up to `jobs` threads and returns the chunk results in range order.
template <typename Fn>
auto run_chunks(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn fn)
    -> std::vector<decltype(fn(begin, end))>
{
    using Result = decltype(fn(begin, end));
    jobs = effective_jobs(jobs);
    const std::uint64_t total = end > begin ? end - begin : 0;
    const std::uint64_t chunks = jobs == 1 ? 1 : std::min<std::uint64_t>(std::max<std::uint64_t>(total, 1), jobs * 4ULL);
    std::vector<Result> results(chunks);
    auto bounds = [&](std::uint64_t c) { return begin + total * c / chunks; };

    if (jobs == 1) {
        results[0] = fn(begin, end);
        return results;
    }

    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::uint64_t c = w; c < chunks; c += jobs) {
                try {
                    results[c] = fn(bounds(c), bounds(c + 1));
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    return results;
}

} // namespace zeck::detail
