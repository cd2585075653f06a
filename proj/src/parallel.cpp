#include "residua/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace residua {

namespace {
thread_local bool in_parallel_region = false;
}

unsigned worker_count() {
    if (const char* env = std::getenv("RESIDUA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_chunks(u64 begin, u64 end, const std::function<void(u64, u64)>& fn) {
    if (begin >= end) return;
    const u64 total = end - begin;
    const unsigned workers = in_parallel_region ? 1 : worker_count();
    if (workers <= 1 || total < 2) {
        fn(begin, end);
        return;
    }

    // interleave by splitting into more chunks than workers so uneven
    // work per index balances out
    const u64 chunks = std::min<u64>(total, static_cast<u64>(workers) * 8);
    std::atomic<u64> next_chunk{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto body = [&]() {
        in_parallel_region = true;
        try {
            while (true) {
                const u64 c = next_chunk.fetch_add(1);
                if (c >= chunks) break;
                const u64 lo = begin + total * c / chunks;
                const u64 hi = begin + total * (c + 1) / chunks;
                if (lo < hi) fn(lo, hi);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
        in_parallel_region = false;
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned i = 0; i + 1 < workers; ++i) threads.emplace_back(body);
    body();
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace residua
