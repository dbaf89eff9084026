#include "ngspell/parallel.h"

namespace ngspell {

Partition partition(std::size_t n, std::size_t p)
{
    if (p == 0)
        throw std::invalid_argument("worker count must be at least 1");
    Partition parts(p);
    const std::size_t base = n / p, extra = n % p;
    std::size_t at = 0;
    for (std::size_t k = 0; k < p; ++k) {
        const std::size_t len = base + (k < extra ? 1 : 0);
        parts[k] = {at, at + len};
        at += len;
    }
    return parts;
}

std::size_t default_workers()
{
    auto n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

} // namespace ngspell
