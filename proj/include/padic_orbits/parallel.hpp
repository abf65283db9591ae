#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace padic_orbits {

/// Worker count: hardware concurrency, capped by PADIC_ORBITS_THREADS when set.
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PADIC_ORBITS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

/// Splits [0, n) into contiguous chunks and runs body(begin, end, chunk_index)
/// on each; chunk boundaries depend only on n and the chunk count.
template <class Body>
void parallel_chunks(std::uint64_t n, unsigned chunks, Body&& body)
{
    chunks = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(chunks, n)));
    if (chunks == 1) {
        body(std::uint64_t{0}, n, 0u);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        const std::uint64_t begin = n * c / chunks;
        const std::uint64_t end = n * (c + 1) / chunks;
        workers.emplace_back([&body, begin, end, c] { body(begin, end, c); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace padic_orbits
