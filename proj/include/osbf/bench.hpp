#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#if defined(__GLIBC__) || defined(__linux__)
#include <malloc.h>
#endif

#include "osbf/core.hpp"

namespace osbf {

/// Keep large allocations on the heap instead of per-call mmap/munmap, so
/// repeated timed runs do not pay page-fault costs that distort scaling
/// measurements. No-op on non-glibc platforms.
inline void pin_allocator_for_timing() {
#if defined(__GLIBC__)
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

/// One timing measurement: median wall-clock seconds of repeated runs.
struct BenchRecord {
    std::string filter;
    int width = 0;
    int height = 0;
    int radius = 0;
    int iterations = 0;
    double seconds = 0.0;
};

/// Median wall-clock seconds over `repeats` runs, after `warmup` discarded
/// runs. Requires repeats >= 3 and warmup >= 1.
template <typename Fn>
double time_median_seconds(int repeats, int warmup, Fn&& fn) {
    if (repeats < 3)
        throw std::invalid_argument("time_median_seconds: repeats must be >= 3");
    if (warmup < 1)
        throw std::invalid_argument("time_median_seconds: warmup must be >= 1");
    using clock = std::chrono::steady_clock;
    for (int i = 0; i < warmup; ++i)
        fn();
    std::vector<double> times(repeats);
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        times[i] = std::chrono::duration<double>(t1 - t0).count();
    }
    std::sort(times.begin(), times.end());
    const int mid = repeats / 2;
    return repeats % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

/// Deterministic benchmark input: uniform samples on [0, 255] from a seeded
/// generator, so timings are reproducible run to run.
inline ImagePlane bench_input(int width, int height, std::uint64_t seed) {
    ImagePlane plane(width, height);
    std::mt19937_64 rng(seed);
    for (double& v : plane.samples())
        v = 255.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return plane;
}

inline double max_min_ratio(const std::vector<double>& times) {
    if (times.empty())
        throw std::invalid_argument("max_min_ratio: empty sample");
    const auto [mn, mx] = std::minmax_element(times.begin(), times.end());
    if (*mn <= 0.0)
        throw std::invalid_argument("max_min_ratio: non-positive timing");
    return *mx / *mn;
}

}  // namespace osbf
