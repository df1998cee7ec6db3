#pragma once

// Small fork-join helpers. Work items are claimed through an atomic
// counter but results land in a slot per index, so the merged output is
// identical for any worker count.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclo {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

template <class R, class Fn>
std::vector<R> parallel_index_map(std::size_t count, unsigned threads, Fn fn) {
    std::vector<R> out(count);
    if (count == 0) return out;
    unsigned workers = resolve_threads(threads);
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

// Contiguous chunks of [lo, hi), one per worker, merged in chunk order.
// Each worker gets its own accumulator so per-worker state (memo tables)
// never needs locking.
template <class Acc, class Fn>
std::vector<Acc> parallel_chunks(std::size_t lo, std::size_t hi, unsigned threads, Fn fn) {
    unsigned workers = resolve_threads(threads);
    std::size_t count = hi > lo ? hi - lo : 0;
    if (count == 0) return {};
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<Acc> accs(workers);
    if (workers == 1) {
        fn(lo, hi, accs[0]);
        return accs;
    }
    std::size_t chunk = (count + workers - 1) / workers;
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t a = lo + w * chunk;
        std::size_t b = a + chunk < hi ? a + chunk : hi;
        pool.emplace_back([&, w, a, b]() {
            try {
                fn(a, b, accs[w]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return accs;
}

}  // namespace cyclo
