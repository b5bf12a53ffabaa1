#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace sqdist {

/// Worker count for sweeps: SQDIST_THREADS when set and positive, otherwise
/// the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SQDIST_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(in[i]), spread over worker threads; output order matches
/// input order. The first exception thrown by any task is rethrown.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& in, Fn fn, unsigned workers = worker_count())
    -> std::vector<decltype(fn(in.front()))> {
    using Out = decltype(fn(in.front()));
    std::vector<Out> out;
    out.reserve(in.size());
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(in.size())));
    if (workers <= 1) {
        for (const auto& item : in) out.push_back(fn(item));
        return out;
    }
    std::vector<std::optional<Out>> slots(in.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < in.size(); i = next++) {
                try {
                    slots[i].emplace(fn(in[i]));
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace sqdist
