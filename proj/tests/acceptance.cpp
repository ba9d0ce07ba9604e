// Acceptance suite: one check per shipped guarantee, each printing a single
// PASS/FAIL line. Run with no arguments for all checks, or --criterion N for
// one. Exit code is nonzero when any executed check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "osbf/osbf.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using osbf::ImagePlane;
using osbf::Volume;

double max_abs_diff(const ImagePlane& a, const ImagePlane& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
    return m;
}

double max_abs_diff(const Volume& a, const Volume& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
    return m;
}

double volume_rmse(const Volume& a, const Volume& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a.samples()[i] - b.samples()[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

struct Result {
    bool pass = true;
    std::string detail;
};

// 1. Ideal steps are exact fixed points of the iterated filter.
Result edge_fixed_point() {
    Result res;
    double worst = 0.0;
    for (int r : {1, 2, 5, 10}) {
        const auto plane = osbf::step(256, 256, 128, 100.0, 200.0);
        worst = std::max(worst, max_abs_diff(osbf::osbf(plane, r, 30), plane));
    }
    res.pass = worst <= 1e-6;
    std::ostringstream os;
    os << "max |delta| = " << worst << " (tolerance 1e-6, r in {1,2,5,10}, 30 iterations)";
    res.detail = os.str();
    return res;
}

// 2. Checkerboard corners survive one iteration untouched.
Result corner_fixed_point() {
    Result res;
    double worst = 0.0;
    const auto board = osbf::checkerboard(256, 256, 32, 0.0, 255.0);
    for (int r = 1; r <= 10; ++r)
        worst = std::max(worst, max_abs_diff(osbf::osbf(board, r, 1), board));
    res.pass = worst <= 1e-6;
    std::ostringstream os;
    os << "max |delta| = " << worst << " (tolerance 1e-6, cell 32, r in 1..10)";
    res.detail = os.str();
    return res;
}

// 3. On a noisy checkerboard the one-sided filter beats the box filter by
//    at least 3 dB PSNR at every radius.
Result denoising_superiority() {
    Result res;
    const auto clean = osbf::checkerboard(256, 256, 32, 0.0, 255.0);
    const auto noisy = osbf::add_gaussian_noise(clean, {20.0, 12345});
    double min_gap = 1e300;
    int min_r = 0;
    for (int r = 3; r <= 10; ++r) {
        const double gap =
            osbf::psnr(osbf::osbf(noisy, r, 10), clean) - osbf::psnr(osbf::box_filter(noisy, r, 10), clean);
        if (gap < min_gap) {
            min_gap = gap;
            min_r = r;
        }
    }
    res.pass = min_gap >= 3.0;
    std::ostringstream os;
    os << "min PSNR gap = " << min_gap << " dB at r=" << min_r
       << " (required >= 3 dB, r in 3..10, sigma 20, 10 iterations)";
    res.detail = os.str();
    return res;
}

// 4. The fast approximation tracks the exact filter within RMSE 5 on the
//    0..255 scale over the full parameter grid.
Result exact_vs_fast() {
    Result res;
    const auto phantom = fixtures::phantom();
    double worst = 0.0;
    int worst_r = 0, worst_it = 0;
    for (int r = 2; r <= 10; ++r) {
        ImagePlane exact = phantom;
        ImagePlane fast = phantom;
        int done = 0;
        for (int checkpoint : {1, 10, 50, 100}) {
            for (; done < checkpoint; ++done) {
                exact = osbf::osbf_step(exact, r);
                fast = osbf::fast_osbf(fast, r, 1);
            }
            const double err = osbf::rmse(exact, fast);
            if (err > worst) {
                worst = err;
                worst_r = r;
                worst_it = checkpoint;
            }
        }
    }
    res.pass = worst <= 5.0;
    std::ostringstream os;
    os << "max RMSE(exact, fast) = " << worst << " at r=" << worst_r << " iters=" << worst_it
       << " (tolerance 5, r in 2..10, iters in {1,10,50,100})";
    res.detail = os.str();
    return res;
}

// 5. The SAT-backed filter agrees with a brute-force reimplementation.
Result oracle_equivalence() {
    Result res;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto plane = fixtures::random_plane(64, 64, 1000 + k);
        for (int r : {1, 2, 3, 5})
            worst = std::max(
                worst, max_abs_diff(osbf::osbf(plane, r, 3), oracle::osbf_iterate(plane, r, 3)));
    }
    res.pass = worst <= 1e-9;
    std::ostringstream os;
    os << "max |SAT - brute force| = " << worst
       << " (tolerance 1e-9, 50 planes, r in {1,2,3,5}, 3 iterations)";
    res.detail = os.str();
    return res;
}

// 6. Per-iteration cost does not depend on the window radius.
Result radius_independence() {
    Result res;
    osbf::set_max_threads(1);
    const auto input = osbf::bench_input(1024, 1024, 77);
    double worst = 0.0;
    std::string details;
    for (const char* filter : {"box", "osbf"}) {
        std::vector<double> times;
        for (int r : {2, 8, 32}) {
            times.push_back(osbf::time_median_seconds(5, 1, [&] {
                volatile double sink = std::strcmp(filter, "box") == 0
                                           ? osbf::box_filter(input, r, 1)(0, 0)
                                           : osbf::osbf(input, r, 1)(0, 0);
                (void)sink;
            }));
        }
        const double ratio = osbf::max_min_ratio(times);
        worst = std::max(worst, ratio);
        details += std::string(filter) + "=" + std::to_string(ratio) + " ";
    }
    osbf::set_max_threads(0);
    res.pass = worst <= 1.5;
    res.detail = "max/min time over r in {2,8,32} at 1024^2: " + details + "(bound 1.5)";
    return res;
}

// 7. Cost grows linearly with the pixel count: each 4x pixel step costs
//    between 2x and 8x.
Result pixel_scaling() {
    Result res;
    osbf::set_max_threads(1);
    std::string details;
    bool ok = true;
    for (const char* filter : {"box", "osbf"}) {
        double prev = 0.0;
        details += filter;
        details += ":";
        for (int size : {256, 512, 1024, 2048}) {
            const auto input = osbf::bench_input(size, size, 78);
            const double t = osbf::time_median_seconds(5, 1, [&] {
                volatile double sink = std::strcmp(filter, "box") == 0
                                           ? osbf::box_filter(input, 2, 1)(0, 0)
                                           : osbf::osbf(input, 2, 1)(0, 0);
                (void)sink;
            });
            if (prev > 0.0) {
                const double ratio = t / prev;
                char buf[32];
                std::snprintf(buf, sizeof(buf), " %.2f", ratio);
                details += buf;
                if (ratio < 2.0 || ratio > 8.0)
                    ok = false;
            }
            prev = t;
        }
        details += "  ";
    }
    osbf::set_max_threads(0);
    res.pass = ok;
    res.detail = "per-quadrupling time ratios (bounds [2, 8]): " + details;
    return res;
}

// 8. The 3D filter keeps an axis step fixed and out-denoises the 3D box
//    filter on the noisy version.
Result volume_checks() {
    Result res;
    const auto clean = osbf::step_volume(64, 64, 64, 32, 0.0, 100.0);
    const double delta = max_abs_diff(osbf::osbf_3d(clean, 2, 1), clean);

    const auto noisy = osbf::add_gaussian_noise(clean, {20.0, 999});
    const double rmse_osbf = volume_rmse(osbf::osbf_3d(noisy, 2, 1), clean);
    const double rmse_box = volume_rmse(osbf::box_filter_3d(noisy, 2, 1), clean);

    res.pass = delta <= 1e-6 && rmse_osbf < rmse_box;
    std::ostringstream os;
    os << "step max |delta| = " << delta << " (tolerance 1e-6); noisy RMSE osbf=" << rmse_osbf
       << " vs box=" << rmse_box << " (osbf must win)";
    res.detail = os.str();
    return res;
}

// 9. Box one-sided kernels carry the closed-form weights; Gaussian one-sided
//    kernels are normalized.
Result kernel_algebra() {
    Result res;
    const int r = 2;
    const osbf::SeparableKernel base(-r, std::vector<double>(2 * r + 1, 1.0));
    const auto box_set = osbf::make_one_sided_kernels(base);
    bool weights_ok = true;
    for (int i = 0; i < 8; ++i) {
        const auto& k = box_set.kernels[i];
        const double expected = i < 4 ? 1.0 / 9.0 : 1.0 / 15.0;
        for (int u = k.x.u_min(); u <= k.x.u_max(); ++u)
            for (int v = k.y.u_min(); v <= k.y.u_max(); ++v)
                weights_ok = weights_ok && k.x.tap(u) * k.y.tap(v) == expected;
    }

    const auto gauss_set = osbf::make_one_sided_kernels(osbf::gaussian_kernel(5, 3.0));
    double worst_sum_err = 0.0;
    for (const auto& k : gauss_set.kernels) {
        double sum = 0.0;
        for (int u = k.x.u_min(); u <= k.x.u_max(); ++u)
            for (int v = k.y.u_min(); v <= k.y.u_max(); ++v)
                sum += k.x.tap(u) * k.y.tap(v);
        worst_sum_err = std::max(worst_sum_err, std::abs(sum - 1.0));
    }

    res.pass = weights_ok && worst_sum_err <= 1e-12;
    std::ostringstream os;
    os << "box weights " << (weights_ok ? "exact 1/9 and 1/15" : "WRONG")
       << "; gaussian kernel sum error = " << worst_sum_err << " (tolerance 1e-12)";
    res.detail = os.str();
    return res;
}

// 10. All eight spectra have a DC null and match the quadruple-loop DFT.
Result spectrum_sanity() {
    Result res;
    const int grid = 64;
    double worst_dc = 0.0, worst_err = 0.0;
    for (int i = 1; i <= 8; ++i) {
        const auto spec = osbf::kernel_spectrum(i, 1, grid);
        worst_dc = std::max(worst_dc, std::abs(spec.get(grid / 2, grid / 2)));
        const auto want =
            oracle::dft_magnitude_naive(oracle::embed_box_kernel_minus_delta(i, 1, grid), grid);
        worst_err = std::max(worst_err, max_abs_diff(spec, want));
    }
    res.pass = worst_dc <= 1e-9 && worst_err <= 1e-9;
    std::ostringstream os;
    os << "max DC magnitude = " << worst_dc << ", max oracle deviation = " << worst_err
       << " (tolerances 1e-9)";
    res.detail = os.str();
    return res;
}

// 11. Larger windows converge in fewer iterations: the 95%-of-final-RMSE
//     iteration count is strictly smaller at r=10 than at r=2.
Result convergence_ordering() {
    Result res;
    const auto phantom = fixtures::phantom();
    int t95[2] = {0, 0};
    int idx = 0;
    for (int r : {2, 10}) {
        ImagePlane cur = phantom;
        std::vector<double> rm(101, 0.0);
        for (int t = 1; t <= 100; ++t) {
            cur = osbf::osbf_step(cur, r);
            rm[t] = osbf::rmse(phantom, cur);
        }
        const double target = 0.95 * rm[100];
        for (int t = 1; t <= 100; ++t)
            if (rm[t] >= target) {
                t95[idx] = t;
                break;
            }
        ++idx;
    }
    res.pass = t95[1] < t95[0];
    std::ostringstream os;
    os << "iterations to 95% of final RMSE: r=2 -> " << t95[0] << ", r=10 -> " << t95[1]
       << " (r=10 must be strictly smaller)";
    res.detail = os.str();
    return res;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "edge fixed point", 5.0, edge_fixed_point},
        {2, "corner fixed point", 5.0, corner_fixed_point},
        {3, "denoising superiority", 30.0, denoising_superiority},
        {4, "exact vs fast agreement", 120.0, exact_vs_fast},
        {5, "oracle equivalence", 60.0, oracle_equivalence},
        {6, "O(1) in radius", 120.0, radius_independence},
        {7, "O(N) in pixels", 300.0, pixel_scaling},
        {8, "3D step and denoising", 60.0, volume_checks},
        {9, "kernel algebra", 1.0, kernel_algebra},
        {10, "spectrum sanity", 10.0, spectrum_sanity},
        {11, "convergence ordering", 120.0, convergence_ordering},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--list") {
            for (const auto& c : criteria())
                std::printf("%2d  %s\n", c.id, c.name);
            return 0;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N | --list]\n");
            return 1;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria().size())) {
        std::fprintf(stderr, "no such criterion: %d\n", only);
        return 1;
    }

    osbf::pin_allocator_for_timing();
    int failures = 0;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only)
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        const Result result = c.run();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = elapsed < c.budget_seconds;
        const bool pass = result.pass && in_budget;
        if (!pass)
            ++failures;
        std::printf("criterion %2d [%-24s] %s  %s  (%.2f s / budget %.0f s)\n", c.id, c.name,
                    pass ? "PASS" : "FAIL", result.detail.c_str(), elapsed, c.budget_seconds);
        if (!in_budget)
            std::printf("              runtime budget exceeded\n");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
