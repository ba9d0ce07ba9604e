#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "osbf/core.hpp"

namespace osbf {

struct MetricReport {
    double rmse = 0.0;
    double psnr = std::numeric_limits<double>::infinity();
    double ssim = 1.0;
};

namespace detail {
inline void require_same_size(const ImagePlane& a, const ImagePlane& b, const char* who) {
    if (!a.same_size(b))
        throw std::invalid_argument(std::string(who) + ": image dimensions differ");
}
}  // namespace detail

inline double mse(const ImagePlane& a, const ImagePlane& b) {
    detail::require_same_size(a, b, "mse");
    double acc = 0.0;
    const auto& sa = a.samples();
    const auto& sb = b.samples();
    for (size_t i = 0; i < sa.size(); ++i) {
        const double d = sa[i] - sb[i];
        acc += d * d;
    }
    return acc / static_cast<double>(sa.size());
}

inline double rmse(const ImagePlane& a, const ImagePlane& b) {
    return std::sqrt(mse(a, b));
}

/// PSNR in decibels; identical images yield +infinity.
inline double psnr(const ImagePlane& a, const ImagePlane& b, double peak = 255.0) {
    detail::require_same_size(a, b, "psnr");
    if (!(peak > 0.0))
        throw std::invalid_argument("psnr: peak must be > 0");
    const double m = mse(a, b);
    if (m == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / m);
}

/// Mean local SSIM with the reference parameters: 11x11 Gaussian window
/// sigma = 1.5, C1 = (0.01 peak)^2, C2 = (0.03 peak)^2. The local map is
/// evaluated where the full window fits, so both extents must be >= 11.
inline double ssim(const ImagePlane& a, const ImagePlane& b, double peak = 255.0) {
    detail::require_same_size(a, b, "ssim");
    if (!(peak > 0.0))
        throw std::invalid_argument("ssim: peak must be > 0");
    constexpr int win = 11;
    constexpr int half = win / 2;
    const int w = a.width(), h = a.height();
    if (w < win || h < win)
        throw std::invalid_argument("ssim: both extents must be >= 11");

    double weights[win][win];
    double wsum = 0.0;
    constexpr double sigma = 1.5;
    for (int v = -half; v <= half; ++v)
        for (int u = -half; u <= half; ++u) {
            const double g = std::exp(-0.5 * (u * u + v * v) / (sigma * sigma));
            weights[v + half][u + half] = g;
            wsum += g;
        }
    for (auto& row : weights)
        for (double& g : row)
            g /= wsum;

    const double c1 = (0.01 * peak) * (0.01 * peak);
    const double c2 = (0.03 * peak) * (0.03 * peak);

    double total = 0.0;
    long long count = 0;
    for (int y = half; y < h - half; ++y) {
        for (int x = half; x < w - half; ++x) {
            double mu_a = 0.0, mu_b = 0.0, aa = 0.0, bb = 0.0, ab = 0.0;
            for (int v = -half; v <= half; ++v)
                for (int u = -half; u <= half; ++u) {
                    const double g = weights[v + half][u + half];
                    const double pa = a(x + u, y + v);
                    const double pb = b(x + u, y + v);
                    mu_a += g * pa;
                    mu_b += g * pb;
                    aa += g * pa * pa;
                    bb += g * pb * pb;
                    ab += g * pa * pb;
                }
            const double var_a = aa - mu_a * mu_a;
            const double var_b = bb - mu_b * mu_b;
            const double cov = ab - mu_a * mu_b;
            const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
            const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
            total += num / den;
            ++count;
        }
    }
    return total / static_cast<double>(count);
}

inline MetricReport compute_metrics(const ImagePlane& a, const ImagePlane& b,
                                    double peak = 255.0) {
    return MetricReport{rmse(a, b), psnr(a, b, peak), ssim(a, b, peak)};
}

}  // namespace osbf
