#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "osbf/core.hpp"

namespace osbf {

/// Additive Gaussian noise parameters. The same seed, sigma and dimensions
/// always produce a bit-identical noise field.
struct NoiseSpec {
    double sigma = 20.0;
    std::uint64_t seed = 1;
};

namespace detail {

// Deterministic standard-normal stream: mt19937_64 driving Box-Muller.
// Distribution objects from <random> are not portable across standard
// libraries, so the uniforms and the transform are spelled out.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        spare_ = radius * std::sin(two_pi * u2);
        has_spare_ = true;
        return radius * std::cos(two_pi * u2);
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace detail

/// sample(x,y) = lo when floor(x/cell) + floor(y/cell) is even, else hi.
inline ImagePlane checkerboard(int width, int height, int cell, double lo, double hi) {
    if (cell < 1)
        throw std::invalid_argument("checkerboard: cell must be >= 1");
    ImagePlane plane(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            plane(x, y) = ((x / cell + y / cell) % 2 == 0) ? lo : hi;
    return plane;
}

/// Vertical step: columns < edge_col get lo, the rest hi.
inline ImagePlane step(int width, int height, int edge_col, double lo, double hi) {
    if (edge_col <= 0 || edge_col >= width)
        throw std::invalid_argument("step: edge column must satisfy 0 < edge < width");
    ImagePlane plane(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            plane(x, y) = x < edge_col ? lo : hi;
    return plane;
}

/// Zero field with a single sample set to amplitude.
inline ImagePlane impulse(int width, int height, int x, int y, double amplitude) {
    ImagePlane plane(width, height, 0.0);
    plane.set(x, y, amplitude);
    return plane;
}

/// Axis-aligned step volume: voxels with x < edge get lo, the rest hi.
inline Volume step_volume(int width, int height, int depth, int edge, double lo, double hi) {
    if (edge <= 0 || edge >= width)
        throw std::invalid_argument("step_volume: edge must satisfy 0 < edge < width");
    Volume vol(width, height, depth);
    for (int z = 0; z < depth; ++z)
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                vol(x, y, z) = x < edge ? lo : hi;
    return vol;
}

/// Adds i.i.d. zero-mean Gaussian deviates of standard deviation spec.sigma.
/// Output is not clamped; quantization is the caller's concern at save time.
inline ImagePlane add_gaussian_noise(const ImagePlane& plane, const NoiseSpec& spec) {
    if (spec.sigma < 0.0)
        throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
    if (spec.sigma == 0.0)
        return plane;
    ImagePlane out = plane;
    detail::GaussianStream stream(spec.seed);
    for (double& v : out.samples())
        v += spec.sigma * stream.next();
    return out;
}

inline Volume add_gaussian_noise(const Volume& vol, const NoiseSpec& spec) {
    if (spec.sigma < 0.0)
        throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
    if (spec.sigma == 0.0)
        return vol;
    Volume out = vol;
    detail::GaussianStream stream(spec.seed);
    for (double& v : out.samples())
        v += spec.sigma * stream.next();
    return out;
}

}  // namespace osbf
