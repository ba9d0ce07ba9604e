#pragma once

// Deterministic fixtures for tests: seeded random data and the
// smooth-plus-edges phantom used as the stand-in natural test image.

#include <cmath>
#include <cstdint>
#include <random>

#include "osbf/core.hpp"
#include "osbf/synth.hpp"

namespace fixtures {

inline osbf::ImagePlane random_plane(int width, int height, std::uint64_t seed, double lo = 0.0,
                                     double hi = 255.0) {
    osbf::ImagePlane plane(width, height);
    std::mt19937_64 rng(seed);
    for (double& v : plane.samples())
        v = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return plane;
}

inline osbf::Volume random_volume(int width, int height, int depth, std::uint64_t seed,
                                  double lo = 0.0, double hi = 255.0) {
    osbf::Volume vol(width, height, depth);
    std::mt19937_64 rng(seed);
    for (double& v : vol.samples())
        v = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return vol;
}

/// 8-bit style test image with natural statistics: mid-frequency texture,
/// a bright disk, axis-aligned blocks and mild sensor-like noise, quantized
/// to integers in [0, 255].
inline osbf::ImagePlane phantom(int width = 256, int height = 256,
                                std::uint64_t noise_seed = 424242) {
    osbf::ImagePlane plane(width, height);
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double cx = 0.30 * width, cy = 0.35 * height;
    const double disk_r = 0.22 * width;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double v = 122.0 + 20.0 * std::sin(two_pi * x / 21.0) *
                                   std::cos(two_pi * y / 24.78);
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy < disk_r * disk_r)
                v += 55.0;
            if (x >= 0.62 * width && x < 0.97 * width && y >= 0.08 * height &&
                y < 0.46 * height)
                v -= 50.0;
            if (x >= 0.58 * width && x < 0.92 * width && y >= 0.58 * height &&
                y < 0.93 * height)
                v += 42.0;
            if (x >= 0.06 * width && x < 0.30 * width && y >= 0.72 * height &&
                y < 0.95 * height)
                v -= 45.0;
            plane(x, y) = v;
        }
    }
    plane = osbf::add_gaussian_noise(plane, {5.0, noise_seed});
    for (double& v : plane.samples()) {
        double q = std::floor(v + 0.5);
        if (q < 0.0)
            q = 0.0;
        if (q > 255.0)
            q = 255.0;
        v = q;
    }
    return plane;
}

}  // namespace fixtures
