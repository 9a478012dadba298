#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace rootix {

/// Worker count from ROOTIX_WORKERS, or 1 when unset or invalid.
inline unsigned default_workers()
{
    if (const char* env = std::getenv("ROOTIX_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    return 1;
}

/// out[i] = fn(items[i]). Items are split into contiguous blocks, one per
/// worker, so results never depend on the worker count. The first exception
/// thrown by any worker is rethrown.
template <class T, class Fn>
auto parallel_map(std::span<const T> items, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const T&>>
{
    using R = std::invoke_result_t<Fn&, const T&>;
    std::vector<R> out(items.size());
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            out[i] = fn(items[i]);
        return out;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t block = (items.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = w * block, hi = std::min(items.size(), lo + block);
                for (std::size_t i = lo; i < hi; ++i)
                    out[i] = fn(items[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned workers, Fn&& fn)
{
    return parallel_map(std::span<const T>(items), workers, std::forward<Fn>(fn));
}

} // namespace rootix
