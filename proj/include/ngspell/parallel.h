#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ngspell {

struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const noexcept { return end - begin; }
    bool operator==(const Range&) const = default;
};

/// Worker k owns parts[k]. Ranges are contiguous, ascending and cover [0, n).
using Partition = std::vector<Range>;

/// Block distribution of n items over p workers: the first n mod p workers get
/// ceil(n/p) items, the rest floor(n/p). Throws std::invalid_argument for p == 0.
Partition partition(std::size_t n, std::size_t p);

/// Runs fn(worker, range) for every part, worker 0 on the calling thread. The
/// first exception in worker order is rethrown after all workers finish.
template <class Fn>
void run_partitioned(const Partition& parts, Fn&& fn)
{
    if (parts.empty())
        return;
    std::vector<std::exception_ptr> errors(parts.size());
    {
        std::vector<std::jthread> threads;
        threads.reserve(parts.size() - 1);
        for (std::size_t w = 1; w < parts.size(); ++w) {
            if (parts[w].size() == 0)
                continue;
            threads.emplace_back([&, w] {
                try {
                    fn(w, parts[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        try {
            fn(std::size_t{0}, parts[0]);
        } catch (...) {
            errors[0] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

/// Applies fn(i) for i in [0, n) with a block partition over p workers.
template <class Fn>
void parallel_for(std::size_t n, std::size_t p, Fn&& fn)
{
    run_partitioned(partition(n, p), [&](std::size_t, Range r) {
        for (std::size_t i = r.begin; i < r.end; ++i)
            fn(i);
    });
}

/// Hardware concurrency, at least 1.
std::size_t default_workers();

} // namespace ngspell
