// Command-line front end: smoothing, metric comparison, synthetic data
// generation, kernel spectrum emission and the timing harness.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osbf/osbf.hpp"

namespace {

// Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
// 3 bench validation failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitBenchCheck = 3;

osbf::ImagePlane run_named_filter(const std::string& name, const osbf::ImagePlane& in, int radius,
                                  int iters, double sigma) {
    if (name == "box")
        return osbf::box_filter(in, radius, iters);
    if (name == "osbf")
        return osbf::osbf(in, radius, iters);
    if (name == "fast-osbf")
        return osbf::fast_osbf(in, radius, iters);
    if (name == "os-gauss")
        return osbf::one_sided_filter(
            in, osbf::make_one_sided_kernels(osbf::gaussian_kernel(radius, sigma)), iters);
    if (name == "gauss")
        return osbf::separable_filter(in, osbf::gaussian_kernel(radius, sigma), iters);
    throw std::invalid_argument("unknown filter: " + name);
}

osbf::FilterVariant variant_from_name(const std::string& name) {
    static const std::map<std::string, osbf::FilterVariant> table = {
        {"box", osbf::FilterVariant::Box},
        {"osbf", osbf::FilterVariant::OsbfExact},
        {"fast-osbf", osbf::FilterVariant::OsbfFast},
        {"os-gauss", osbf::FilterVariant::OneSidedGeneric},
        {"gauss", osbf::FilterVariant::Gaussian},
    };
    return table.at(name);
}

struct SmoothOpts {
    std::string in, out;
    std::string filter = "osbf";
    int radius = 2;
    int iters = 10;
    double sigma = 3.0;
    int threads = 0;
};

int cmd_smooth(const SmoothOpts& o) {
    osbf::set_max_threads(o.threads);
    int maxval = 255;
    const osbf::MultiChannelImage img = osbf::read_image(o.in, &maxval);
    osbf::FilterConfig config;
    config.radius = o.radius;
    config.iterations = o.iters;
    config.sigma = o.sigma;
    config.variant = variant_from_name(o.filter);
    config.validate();

    const auto t0 = std::chrono::steady_clock::now();
    const osbf::MultiChannelImage out = osbf::filter_multichannel(img, config);
    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();

    osbf::write_image(out, o.out, maxval <= 255 ? 8 : 16);
    std::cout << o.filter << " r=" << o.radius << " iters=" << o.iters << " on " << img.width()
              << "x" << img.height() << "x" << img.channel_count() << ": " << std::setprecision(6)
              << seconds << " s\n";
    return kExitOk;
}

struct CompareOpts {
    std::string a, b;
    double peak = 255.0;
};

int cmd_compare(const CompareOpts& o) {
    const osbf::MultiChannelImage a = osbf::read_image(o.a);
    const osbf::MultiChannelImage b = osbf::read_image(o.b);
    if (a.channel_count() != b.channel_count())
        throw std::invalid_argument("channel counts differ");
    double rmse_sum = 0.0, psnr_sum = 0.0, ssim_sum = 0.0;
    std::cout << std::setprecision(6);
    for (int c = 0; c < a.channel_count(); ++c) {
        const auto report = osbf::compute_metrics(a.channel(c), b.channel(c), o.peak);
        std::cout << "channel " << c << ": rmse=" << report.rmse << " psnr=" << report.psnr
                  << " ssim=" << report.ssim << "\n";
        rmse_sum += report.rmse;
        psnr_sum += report.psnr;
        ssim_sum += report.ssim;
    }
    const double n = a.channel_count();
    std::cout << "mean: rmse=" << rmse_sum / n << " psnr=" << psnr_sum / n
              << " ssim=" << ssim_sum / n << "\n";
    return kExitOk;
}

struct GenOpts {
    std::string kind;
    std::string out;
    int width = 256, height = 256, depth = 64;
    int cell = 32;
    int edge = -1;  // default: width / 2
    double lo = 0.0, hi = 255.0;
    int x = -1, y = -1;  // impulse position, default center
    double amplitude = 255.0;
    double sigma = 20.0;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenOpts& o) {
    const int edge = o.edge >= 0 ? o.edge : o.width / 2;
    if (o.kind == "checkerboard") {
        osbf::write_image(osbf::checkerboard(o.width, o.height, o.cell, o.lo, o.hi), o.out);
    } else if (o.kind == "noisy-checkerboard") {
        const auto clean = osbf::checkerboard(o.width, o.height, o.cell, o.lo, o.hi);
        osbf::write_image(osbf::add_gaussian_noise(clean, {o.sigma, o.seed}), o.out);
    } else if (o.kind == "step") {
        osbf::write_image(osbf::step(o.width, o.height, edge, o.lo, o.hi), o.out);
    } else if (o.kind == "impulse") {
        const int px = o.x >= 0 ? o.x : o.width / 2;
        const int py = o.y >= 0 ? o.y : o.height / 2;
        osbf::write_image(osbf::impulse(o.width, o.height, px, py, o.amplitude), o.out);
    } else if (o.kind == "step-volume") {
        osbf::write_volume(osbf::step_volume(o.width, o.height, o.depth, edge, o.lo, o.hi),
                           o.out);
    } else {
        throw std::invalid_argument("unknown generator kind: " + o.kind);
    }
    std::cout << "wrote " << o.out << "\n";
    return kExitOk;
}

struct SpectrumOpts {
    int radius = 1;
    int grid = 64;
    std::string out_dir;
};

int cmd_spectrum(const SpectrumOpts& o) {
    std::filesystem::create_directories(o.out_dir);
    for (int i = 1; i <= 8; ++i) {
        osbf::ImagePlane spec = osbf::kernel_spectrum(i, o.radius, o.grid);
        for (double& v : spec.samples())
            v *= 255.0;
        const std::string path =
            (std::filesystem::path(o.out_dir) / ("spectrum_k" + std::to_string(i) + ".pgm"))
                .string();
        osbf::write_image(spec, path);
        std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
}

struct BenchOpts {
    std::vector<std::string> filters = {"box", "osbf", "fast-osbf"};
    std::vector<int> sizes = {256, 512, 1024, 2048};
    std::vector<int> radii = {2, 8, 32};
    int iters = 1;
    int repeats = 5;
    int warmup = 1;
    std::uint64_t seed = 99;
    std::string out;
    int threads = 1;
    double check_o1 = 0.0;      // max allowed max/min ratio across radii
    double check_linear = 0.0;  // allowed slack factor around time ~ pixels
};

int cmd_bench(const BenchOpts& o) {
    osbf::set_max_threads(o.threads);
    osbf::pin_allocator_for_timing();
    std::vector<osbf::BenchRecord> records;
    std::cout << std::setprecision(6);
    for (const auto& filter : o.filters)
        for (int size : o.sizes) {
            const osbf::ImagePlane input = osbf::bench_input(size, size, o.seed ^ size);
            for (int radius : o.radii) {
                const double seconds =
                    osbf::time_median_seconds(o.repeats, o.warmup, [&] {
                        volatile double sink =
                            run_named_filter(filter, input, radius, o.iters, 3.0)(0, 0);
                        (void)sink;
                    });
                records.push_back({filter, size, size, radius, o.iters, seconds});
                std::cout << filter << " " << size << "x" << size << " r=" << radius
                          << " iters=" << o.iters << ": " << seconds << " s\n";
            }
        }
    if (!o.out.empty()) {
        osbf::write_csv(records, o.out);
        std::cout << "wrote " << o.out << "\n";
    }

    auto times_for = [&](const std::string& f, int size) {
        std::vector<double> t;
        for (const auto& r : records)
            if (r.filter == f && r.width == size)
                t.push_back(r.seconds);
        return t;
    };
    auto time_at = [&](const std::string& f, int size, int radius) {
        for (const auto& r : records)
            if (r.filter == f && r.width == size && r.radius == radius)
                return r.seconds;
        return 0.0;
    };

    bool checks_ok = true;
    std::cout << "-- radius independence (max/min time over radii at fixed size)\n";
    for (const auto& filter : o.filters)
        for (int size : o.sizes) {
            const double ratio = osbf::max_min_ratio(times_for(filter, size));
            std::cout << "   " << filter << " " << size << "x" << size << ": " << ratio << "\n";
            if (o.check_o1 > 0.0 && ratio > o.check_o1) {
                std::cout << "   ^ exceeds --check-o1 " << o.check_o1 << "\n";
                checks_ok = false;
            }
        }
    std::cout << "-- pixel-count scaling (time ratio per size step; pixel ratio in parens)\n";
    for (const auto& filter : o.filters)
        for (int radius : o.radii)
            for (size_t i = 1; i < o.sizes.size(); ++i) {
                const double t0 = time_at(filter, o.sizes[i - 1], radius);
                const double t1 = time_at(filter, o.sizes[i], radius);
                if (t0 <= 0.0 || t1 <= 0.0)
                    continue;
                const double pixel_ratio = static_cast<double>(o.sizes[i]) * o.sizes[i] /
                                           (static_cast<double>(o.sizes[i - 1]) * o.sizes[i - 1]);
                const double time_ratio = t1 / t0;
                std::cout << "   " << filter << " r=" << radius << " " << o.sizes[i - 1] << "->"
                          << o.sizes[i] << ": " << time_ratio << " (" << pixel_ratio << ")\n";
                if (o.check_linear > 0.0 && (time_ratio > pixel_ratio * o.check_linear ||
                                             time_ratio < pixel_ratio / o.check_linear)) {
                    std::cout << "   ^ outside --check-linear slack " << o.check_linear << "\n";
                    checks_ok = false;
                }
            }
    const bool have_box = std::count(o.filters.begin(), o.filters.end(), "box") > 0;
    const bool have_osbf = std::count(o.filters.begin(), o.filters.end(), "osbf") > 0;
    const bool have_fast = std::count(o.filters.begin(), o.filters.end(), "fast-osbf") > 0;
    if (have_box && have_osbf) {
        std::cout << "-- osbf/box single-iteration time ratio\n";
        for (int size : o.sizes) {
            const double tb = time_at("box", size, o.radii.front());
            const double to = time_at("osbf", size, o.radii.front());
            if (tb > 0.0 && to > 0.0)
                std::cout << "   " << size << "x" << size << " r=" << o.radii.front() << ": "
                          << to / tb << "\n";
        }
    }
    if (have_osbf && have_fast) {
        std::cout << "-- fast-osbf/osbf single-iteration time ratio\n";
        for (int size : o.sizes) {
            const double to = time_at("osbf", size, o.radii.front());
            const double tf = time_at("fast-osbf", size, o.radii.front());
            if (to > 0.0 && tf > 0.0)
                std::cout << "   " << size << "x" << size << " r=" << o.radii.front() << ": "
                          << tf / to << "\n";
        }
    }
    if (!checks_ok) {
        std::cerr << "bench checks failed\n";
        return kExitBenchCheck;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-sided box filter toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> filter_names = {"box", "osbf", "fast-osbf", "os-gauss",
                                                   "gauss"};

    SmoothOpts smooth;
    auto* smooth_cmd = app.add_subcommand("smooth", "Filter an image");
    smooth_cmd->add_option("--in", smooth.in, "input PGM/PPM")->required();
    smooth_cmd->add_option("--out", smooth.out, "output image")->required();
    smooth_cmd->add_option("--filter", smooth.filter, "filter variant")
        ->check(CLI::IsMember(filter_names))
        ->capture_default_str();
    smooth_cmd->add_option("--radius", smooth.radius, "window radius")->capture_default_str();
    smooth_cmd->add_option("--iters", smooth.iters, "iteration count")->capture_default_str();
    smooth_cmd->add_option("--sigma", smooth.sigma, "Gaussian sigma")->capture_default_str();
    smooth_cmd->add_option("--threads", smooth.threads, "worker threads (0 = auto)")
        ->capture_default_str();

    CompareOpts compare;
    auto* compare_cmd = app.add_subcommand("compare", "RMSE/PSNR/SSIM between two images");
    compare_cmd->add_option("--a", compare.a, "first image")->required();
    compare_cmd->add_option("--b", compare.b, "second image")->required();
    compare_cmd->add_option("--peak", compare.peak, "peak value for PSNR/SSIM")
        ->capture_default_str();

    GenOpts gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic test data");
    gen_cmd
        ->add_option("kind", gen.kind, "one of checkerboard|step|impulse|noisy-checkerboard|step-volume")
        ->required()
        ->check(CLI::IsMember(
            {"checkerboard", "step", "impulse", "noisy-checkerboard", "step-volume"}));
    gen_cmd->add_option("--out", gen.out, "output path")->required();
    gen_cmd->add_option("--width", gen.width)->capture_default_str();
    gen_cmd->add_option("--height", gen.height)->capture_default_str();
    gen_cmd->add_option("--depth", gen.depth)->capture_default_str();
    gen_cmd->add_option("--cell", gen.cell, "checkerboard cell size")->capture_default_str();
    gen_cmd->add_option("--edge", gen.edge, "step edge column (default width/2)");
    gen_cmd->add_option("--lo", gen.lo)->capture_default_str();
    gen_cmd->add_option("--hi", gen.hi)->capture_default_str();
    gen_cmd->add_option("--x", gen.x, "impulse x (default center)");
    gen_cmd->add_option("--y", gen.y, "impulse y (default center)");
    gen_cmd->add_option("--amplitude", gen.amplitude)->capture_default_str();
    gen_cmd->add_option("--sigma", gen.sigma, "noise sigma")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "noise seed")->capture_default_str();

    SpectrumOpts spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Emit kernel spectra as PGM images");
    spectrum_cmd->add_option("--radius", spectrum.radius)->capture_default_str();
    spectrum_cmd->add_option("--grid", spectrum.grid)->capture_default_str();
    spectrum_cmd->add_option("--out-dir", spectrum.out_dir, "output directory")->required();

    BenchOpts bench;
    auto* bench_cmd = app.add_subcommand("bench", "Timing harness");
    bench_cmd->add_option("--filters", bench.filters, "filters to time")
        ->delimiter(',')
        ->check(CLI::IsMember(filter_names))
        ->capture_default_str();
    bench_cmd->add_option("--sizes", bench.sizes, "square image sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--radii", bench.radii, "window radii")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--iters", bench.iters)->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "timed runs per cell (median kept)")
        ->capture_default_str();
    bench_cmd->add_option("--warmup", bench.warmup, "discarded runs per cell")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
    bench_cmd->add_option("--out", bench.out, "CSV output path");
    bench_cmd->add_option("--threads", bench.threads, "worker threads (0 = auto)")
        ->capture_default_str();
    bench_cmd->add_option("--check-o1", bench.check_o1,
                          "fail (exit 3) if max/min over radii exceeds this");
    bench_cmd->add_option("--check-linear", bench.check_linear,
                          "fail (exit 3) if time ratio strays from pixel ratio by this factor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(smooth_cmd))
            return cmd_smooth(smooth);
        if (app.got_subcommand(compare_cmd))
            return cmd_compare(compare);
        if (app.got_subcommand(gen_cmd))
            return cmd_gen(gen);
        if (app.got_subcommand(spectrum_cmd))
            return cmd_spectrum(spectrum);
        if (app.got_subcommand(bench_cmd))
            return cmd_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
