#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace opn {

/// Splits [begin, end) into `jobs` contiguous chunks and runs fn(lo, hi, partial)
/// on each, one thread per chunk. Partials come back in chunk order; the first
/// exception thrown by any worker is rethrown after all threads join.
template <class Partial, class Fn>
std::vector<Partial> run_chunks(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    const std::uint64_t span = end > begin ? end - begin : 0;
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, span));
    std::vector<Partial> partials(chunks);
    if (chunks == 1) {
        fn(begin, end, partials[0]);
        return partials;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i) {
        const std::uint64_t lo = begin + span * i / chunks;
        const std::uint64_t hi = begin + span * (i + 1) / chunks;
        workers.emplace_back([&, i, lo, hi] {
            try {
                fn(lo, hi, partials[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return partials;
}

} // namespace opn
