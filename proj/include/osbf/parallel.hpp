#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace osbf {

namespace detail {
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{0};  // 0 = auto (hardware concurrency)
    return cap;
}
}  // namespace detail

/// Cap the number of worker threads used by the filters. 0 restores the
/// hardware default. Outputs are bit-identical for every cap value: each
/// worker writes a disjoint block of rows computed from the same input.
inline void set_max_threads(int n) {
    detail::thread_cap().store(n < 0 ? 0 : n);
}

inline int max_threads() {
    int cap = detail::thread_cap().load();
    if (cap > 0)
        return cap;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(begin, end) over contiguous row blocks covering [0, count).
template <typename Fn>
void parallel_for_rows(int count, Fn&& fn) {
    const int workers = std::min(max_threads(), count);
    if (workers <= 1 || count <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const int chunk = (count + workers - 1) / workers;
    int begin = 0;
    for (int w = 0; w < workers - 1 && begin < count; ++w) {
        const int end = std::min(begin + chunk, count);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
        begin = end;
    }
    if (begin < count)
        fn(begin, count);
    for (auto& t : pool)
        t.join();
}

}  // namespace osbf
