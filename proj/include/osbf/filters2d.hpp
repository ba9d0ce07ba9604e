#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "osbf/core.hpp"
#include "osbf/integral.hpp"
#include "osbf/parallel.hpp"

namespace osbf {

/// The eight one-sided window means a1..a8 at one pixel.
struct SubWindowMeans {
    std::array<double, 8> a;
};

/// Valid-count means over the eight one-sided sub-windows centered at (x,y),
/// each clipped to the image domain. Every window contains (x,y), so none is
/// empty after clipping.
inline SubWindowMeans subwindow_means(const SummedAreaTable& sat, int x, int y, int r) {
    const auto wins = sub_windows(r);
    SubWindowMeans m{};
    for (int i = 0; i < 8; ++i) {
        const auto& w = wins[i];
        m.a[i] = sat.rect_mean(x + w.u0, y + w.v0, x + w.u1, y + w.v1);
    }
    return m;
}

/// Classical box filter: valid-count mean over the full (2r+1)^2 window,
/// iterated. O(1) per pixel with respect to r via the summed-area table.
inline ImagePlane box_filter(const ImagePlane& plane, int r, int iterations) {
    if (r < 1)
        throw std::invalid_argument("box_filter: radius must be >= 1");
    if (iterations < 0)
        throw std::invalid_argument("box_filter: iterations must be >= 0");
    ImagePlane cur = plane;
    const int w = plane.width(), h = plane.height();
    for (int it = 0; it < iterations; ++it) {
        SummedAreaTable sat(cur);
        ImagePlane next(w, h);
        parallel_for_rows(h, [&](int y0, int y1) {
            for (int y = y0; y < y1; ++y)
                for (int x = 0; x < w; ++x)
                    next(x, y) = sat.rect_mean(x - r, y - r, x + r, y + r);
        });
        cur = std::move(next);
    }
    return cur;
}

/// One iteration of the exact one-sided box filter: per pixel, the eight
/// one-sided means are candidates; the one closest to the current value
/// replaces it (ties go to the smallest window index).
inline ImagePlane osbf_step(const ImagePlane& plane, int r) {
    if (r < 1)
        throw std::invalid_argument("osbf_step: radius must be >= 1");
    SummedAreaTable sat(plane);
    const int w = plane.width(), h = plane.height();
    const auto wins = sub_windows(r);
    ImagePlane out(w, h);
    parallel_for_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < w; ++x) {
                const double u = plane(x, y);
                double best = 0.0;
                double best_abs = std::numeric_limits<double>::infinity();
                for (const auto& win : wins) {
                    const double a =
                        sat.rect_mean(x + win.u0, y + win.v0, x + win.u1, y + win.v1);
                    const double d = std::abs(a - u);
                    if (d < best_abs) {
                        best_abs = d;
                        best = a;
                    }
                }
                out(x, y) = best;
            }
        }
    });
    return out;
}

/// Exact one-sided box filter (Jacobi iterations of osbf_step).
inline ImagePlane osbf(const ImagePlane& plane, int r, int iterations) {
    if (iterations < 0)
        throw std::invalid_argument("osbf: iterations must be >= 0");
    ImagePlane cur = plane;
    for (int it = 0; it < iterations; ++it)
        cur = osbf_step(cur, r);
    return cur;
}

/// Fast approximation to the one-sided box filter. Only the one quarter-mean
/// field Q(x,y) = mean over [x-r,x] x [y-r,y] is computed per iteration; the
/// other three quarter candidates are shifted lookups into Q (shifts clamped
/// to the domain) and the four half-window candidates are pairwise averages
/// of adjacent quarters.
inline ImagePlane fast_osbf(const ImagePlane& plane, int r, int iterations) {
    if (r < 1)
        throw std::invalid_argument("fast_osbf: radius must be >= 1");
    if (iterations < 0)
        throw std::invalid_argument("fast_osbf: iterations must be >= 0");
    const int w = plane.width(), h = plane.height();
    ImagePlane cur = plane;
    ImagePlane quarter(w, h);
    for (int it = 0; it < iterations; ++it) {
        SummedAreaTable sat(cur);
        parallel_for_rows(h, [&](int y0, int y1) {
            for (int y = y0; y < y1; ++y)
                for (int x = 0; x < w; ++x)
                    quarter(x, y) = sat.rect_mean(x - r, y - r, x, y);
        });
        ImagePlane next(w, h);
        parallel_for_rows(h, [&](int y0, int y1) {
            for (int y = y0; y < y1; ++y) {
                const int yr = std::min(y + r, h - 1);
                for (int x = 0; x < w; ++x) {
                    const int xr = std::min(x + r, w - 1);
                    const double q00 = quarter(x, y);
                    const double q10 = quarter(xr, y);
                    const double q01 = quarter(x, yr);
                    const double q11 = quarter(xr, yr);
                    const double cand[8] = {
                        q00, q10, q01, q11,
                        0.5 * (q00 + q01),  // left half
                        0.5 * (q10 + q11),  // right half
                        0.5 * (q00 + q10),  // upper half
                        0.5 * (q01 + q11),  // lower half
                    };
                    const double u = cur(x, y);
                    double best = cand[0];
                    double best_abs = std::abs(cand[0] - u);
                    for (int i = 1; i < 8; ++i) {
                        const double d = std::abs(cand[i] - u);
                        if (d < best_abs) {
                            best_abs = d;
                            best = cand[i];
                        }
                    }
                    next(x, y) = best;
                }
            }
        });
        cur = std::move(next);
    }
    return cur;
}

/// Centered Gaussian taps exp(-u^2 / (2 sigma^2)) for u in [-r, r],
/// normalized to sum 1.
inline SeparableKernel gaussian_kernel(int r, double sigma) {
    if (r < 1)
        throw std::invalid_argument("gaussian_kernel: radius must be >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    std::vector<double> taps(2 * r + 1);
    for (int u = -r; u <= r; ++u)
        taps[u + r] = std::exp(-0.5 * (static_cast<double>(u) * u) / (sigma * sigma));
    return SeparableKernel(-r, std::move(taps));
}

/// Eight separable 2D kernels spanned from the one-sided halves and the full
/// kernel of a centered base. The center tap u = 0 belongs to both halves,
/// matching the sub-window geometry where every window contains the center.
/// Kernel i weights exactly the sub-window sub_windows(r)[i-1].
struct OneSidedKernelSet {
    struct Pair {
        SeparableKernel x;
        SeparableKernel y;
    };
    std::array<Pair, 8> kernels;
    int radius;
};

inline OneSidedKernelSet make_one_sided_kernels(const SeparableKernel& base) {
    const int r = base.u_max();
    if (r < 1 || base.u_min() != -r)
        throw std::invalid_argument("make_one_sided_kernels: base must be centered on [-r, r]");
    std::vector<double> minus_taps(base.taps().begin(), base.taps().begin() + r + 1);
    std::vector<double> plus_taps(base.taps().begin() + r, base.taps().end());
    // SeparableKernel rejects an all-zero half (non-normalizable).
    SeparableKernel minus(-r, std::move(minus_taps));
    SeparableKernel plus(0, std::move(plus_taps));
    const SeparableKernel& full = base;
    return OneSidedKernelSet{
        {{
            {minus, plus},  // 1: left/up quarter
            {plus, plus},   // 2: right/up quarter
            {plus, minus},  // 3: right/down quarter
            {minus, minus}, // 4: left/down quarter
            {minus, full},  // 5: left half
            {plus, full},   // 6: right half
            {full, plus},   // 7: up half
            {full, minus},  // 8: down half
        }},
        r};
}

/// Separable weighted mean: out(x,y) = sum_{u,v} kx(u) ky(v) in(x+u, y+v)
/// over in-domain taps, renormalized by the in-domain weight sum. The window
/// support is a rectangle, so renormalization factorizes per axis.
inline ImagePlane convolve_separable(const ImagePlane& plane, const SeparableKernel& kx,
                                     const SeparableKernel& ky) {
    const int w = plane.width(), h = plane.height();
    ImagePlane tmp(w, h);
    parallel_for_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < w; ++x) {
                const int u0 = std::max(kx.u_min(), -x);
                const int u1 = std::min(kx.u_max(), w - 1 - x);
                double sum = 0.0, wsum = 0.0;
                for (int u = u0; u <= u1; ++u) {
                    const double t = kx.tap(u);
                    sum += t * plane(x + u, y);
                    wsum += t;
                }
                tmp(x, y) = wsum > 0.0 ? sum / wsum : plane(x, y);
            }
        }
    });
    ImagePlane out(w, h);
    parallel_for_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            const int v0 = std::max(ky.u_min(), -y);
            const int v1 = std::min(ky.u_max(), h - 1 - y);
            for (int x = 0; x < w; ++x) {
                double sum = 0.0, wsum = 0.0;
                for (int v = v0; v <= v1; ++v) {
                    const double t = ky.tap(v);
                    sum += t * tmp(x, y + v);
                    wsum += t;
                }
                out(x, y) = wsum > 0.0 ? sum / wsum : tmp(x, y);
            }
        }
    });
    return out;
}

/// Generic one-sided filter: per iteration, all eight kernel responses are
/// computed and each pixel takes the one closest to its current value (ties
/// go to the smallest kernel index). With the box kernel set this matches
/// osbf up to floating-point summation order.
inline ImagePlane one_sided_filter(const ImagePlane& plane, const OneSidedKernelSet& kernels,
                                   int iterations) {
    if (iterations < 0)
        throw std::invalid_argument("one_sided_filter: iterations must be >= 0");
    const int w = plane.width(), h = plane.height();
    ImagePlane cur = plane;
    for (int it = 0; it < iterations; ++it) {
        std::array<ImagePlane, 8> responses;
        for (int i = 0; i < 8; ++i)
            responses[i] = convolve_separable(cur, kernels.kernels[i].x, kernels.kernels[i].y);
        ImagePlane next(w, h);
        parallel_for_rows(h, [&](int y0, int y1) {
            for (int y = y0; y < y1; ++y) {
                for (int x = 0; x < w; ++x) {
                    const double u = cur(x, y);
                    double best = responses[0](x, y);
                    double best_abs = std::abs(best - u);
                    for (int i = 1; i < 8; ++i) {
                        const double a = responses[i](x, y);
                        const double d = std::abs(a - u);
                        if (d < best_abs) {
                            best_abs = d;
                            best = a;
                        }
                    }
                    next(x, y) = best;
                }
            }
        });
        cur = std::move(next);
    }
    return cur;
}

/// Plain full-window separable smoothing with the given centered kernel
/// (the isotropic baseline), iterated.
inline ImagePlane separable_filter(const ImagePlane& plane, const SeparableKernel& kernel,
                                   int iterations) {
    if (iterations < 0)
        throw std::invalid_argument("separable_filter: iterations must be >= 0");
    ImagePlane cur = plane;
    for (int it = 0; it < iterations; ++it)
        cur = convolve_separable(cur, kernel, kernel);
    return cur;
}

namespace detail {

// 1D DFT along each row, then each column (row-column decomposition).
// The phase factor only depends on the product index mod n, so the n
// distinct twiddles are tabulated once.
inline std::vector<std::complex<double>> dft2d(const std::vector<double>& field, int n) {
    using cplx = std::complex<double>;
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<cplx> twiddle(n);
    for (int k = 0; k < n; ++k)
        twiddle[k] = std::polar(1.0, -two_pi * k / n);
    auto tw = [&](long long k, long long j) { return twiddle[(k * j) % n]; };
    std::vector<cplx> rows(static_cast<size_t>(n) * n);
    for (int y = 0; y < n; ++y)
        for (int wx = 0; wx < n; ++wx) {
            cplx acc{0.0, 0.0};
            for (int x = 0; x < n; ++x)
                acc += field[static_cast<size_t>(y) * n + x] * tw(wx, x);
            rows[static_cast<size_t>(y) * n + wx] = acc;
        }
    std::vector<cplx> out(static_cast<size_t>(n) * n);
    for (int wx = 0; wx < n; ++wx)
        for (int wy = 0; wy < n; ++wy) {
            cplx acc{0.0, 0.0};
            for (int y = 0; y < n; ++y)
                acc += rows[static_cast<size_t>(y) * n + wx] * tw(wy, y);
            out[static_cast<size_t>(wy) * n + wx] = acc;
        }
    return out;
}

}  // namespace detail

/// Fourier magnitude of k_i - delta for the one-sided box kernel i, embedded
/// centered in a grid x grid field. DC is shifted to the center and the
/// magnitudes are rescaled linearly to [0, 1]. The DC value is zero because
/// every kernel sums to 1.
inline ImagePlane kernel_spectrum(int kernel_index, int r, int grid) {
    if (kernel_index < 1 || kernel_index > 8)
        throw std::invalid_argument("kernel_spectrum: kernel index must be in 1..8");
    if (r < 1)
        throw std::invalid_argument("kernel_spectrum: radius must be >= 1");
    if (grid < 2 * (2 * r + 1))
        throw std::invalid_argument("kernel_spectrum: grid must be >= 2*(2r+1)");
    const SeparableKernel base(-r, std::vector<double>(2 * r + 1, 1.0));
    const auto set = make_one_sided_kernels(base);
    const auto& pair = set.kernels[kernel_index - 1];

    std::vector<double> field(static_cast<size_t>(grid) * grid, 0.0);
    const int c = grid / 2;
    for (int v = pair.y.u_min(); v <= pair.y.u_max(); ++v)
        for (int u = pair.x.u_min(); u <= pair.x.u_max(); ++u)
            field[static_cast<size_t>(c + v) * grid + (c + u)] += pair.x.tap(u) * pair.y.tap(v);
    field[static_cast<size_t>(c) * grid + c] -= 1.0;

    const auto freq = detail::dft2d(field, grid);
    ImagePlane spectrum(grid, grid);
    double mn = std::numeric_limits<double>::infinity(), mx = -mn;
    for (int sy = 0; sy < grid; ++sy)
        for (int sx = 0; sx < grid; ++sx) {
            const int wx = (sx - c + grid) % grid;
            const int wy = (sy - c + grid) % grid;
            const double mag = std::abs(freq[static_cast<size_t>(wy) * grid + wx]);
            spectrum(sx, sy) = mag;
            mn = std::min(mn, mag);
            mx = std::max(mx, mag);
        }
    const double range = mx - mn;
    for (double& v : spectrum.samples())
        v = range > 0.0 ? (v - mn) / range : 0.0;
    return spectrum;
}

/// Apply the configured filter independently to each channel.
inline MultiChannelImage filter_multichannel(const MultiChannelImage& img,
                                             const FilterConfig& config) {
    config.validate();
    std::vector<ImagePlane> out;
    out.reserve(img.channel_count());
    for (int c = 0; c < img.channel_count(); ++c) {
        const ImagePlane& in = img.channel(c);
        switch (config.variant) {
            case FilterVariant::Box:
                out.push_back(box_filter(in, config.radius, config.iterations));
                break;
            case FilterVariant::OsbfExact:
                out.push_back(osbf(in, config.radius, config.iterations));
                break;
            case FilterVariant::OsbfFast:
                out.push_back(fast_osbf(in, config.radius, config.iterations));
                break;
            case FilterVariant::OneSidedGeneric:
                out.push_back(one_sided_filter(
                    in, make_one_sided_kernels(gaussian_kernel(config.radius, config.sigma)),
                    config.iterations));
                break;
            case FilterVariant::Gaussian:
                out.push_back(separable_filter(
                    in, gaussian_kernel(config.radius, config.sigma), config.iterations));
                break;
        }
    }
    return MultiChannelImage(std::move(out));
}

}  // namespace osbf
