#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace parking {

// 0 means "all hardware threads".
inline unsigned effective_jobs(unsigned requested)
{
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs task(i) for i in [0, n) on up to `jobs` threads and returns the
// results in task order, so any reduction over them is deterministic.
template <class T, class Task>
std::vector<T> map_tasks(std::size_t n, unsigned jobs, Task task)
{
    std::vector<T> results(n);
    unsigned workers = std::min<std::size_t>(effective_jobs(jobs), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = task(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace parking
