#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace osbf {

/// Single-channel 2D grid of real samples, row-major.
class ImagePlane {
public:
    ImagePlane() = default;

    ImagePlane(int width, int height, double fill = 0.0)
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("ImagePlane: dimensions must be >= 1");
        if (!std::isfinite(fill))
            throw std::invalid_argument("ImagePlane: fill value must be finite");
        samples_.assign(static_cast<size_t>(width) * height, fill);
    }

    ImagePlane(int width, int height, std::vector<double> samples)
        : width_(width), height_(height), samples_(std::move(samples)) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("ImagePlane: dimensions must be >= 1");
        if (samples_.size() != static_cast<size_t>(width) * height)
            throw std::invalid_argument("ImagePlane: sample count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    size_t size() const { return samples_.size(); }

    // Unchecked access, flat index y*width + x.
    double operator()(int x, int y) const { return samples_[idx(x, y)]; }
    double& operator()(int x, int y) { return samples_[idx(x, y)]; }

    // Checked access.
    double get(int x, int y) const {
        check_coords(x, y);
        return samples_[idx(x, y)];
    }
    void set(int x, int y, double value) {
        check_coords(x, y);
        samples_[idx(x, y)] = value;
    }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

    bool same_size(const ImagePlane& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    size_t idx(int x, int y) const {
        return static_cast<size_t>(y) * width_ + x;
    }
    void check_coords(int x, int y) const {
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::out_of_range("ImagePlane: coordinate (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") outside " + std::to_string(width_) +
                                    "x" + std::to_string(height_));
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> samples_;
};

inline ImagePlane make_plane(int width, int height, double fill) {
    return ImagePlane(width, height, fill);
}

/// Ordered list of equally-sized planes, one per color channel.
class MultiChannelImage {
public:
    MultiChannelImage() = default;

    explicit MultiChannelImage(std::vector<ImagePlane> channels)
        : channels_(std::move(channels)) {
        if (channels_.empty() || channels_.size() > 4)
            throw std::invalid_argument("MultiChannelImage: channel count must be in [1,4]");
        for (const auto& c : channels_)
            if (!c.same_size(channels_.front()))
                throw std::invalid_argument("MultiChannelImage: channel dimensions differ");
    }

    int width() const { return channels_.front().width(); }
    int height() const { return channels_.front().height(); }
    int channel_count() const { return static_cast<int>(channels_.size()); }

    const ImagePlane& channel(int i) const { return channels_.at(i); }
    ImagePlane& channel(int i) { return channels_.at(i); }

    const std::vector<ImagePlane>& channels() const { return channels_; }

private:
    std::vector<ImagePlane> channels_;
};

/// Single-channel 3D grid, x-fastest layout: index = (z*height + y)*width + x.
class Volume {
public:
    Volume() = default;

    Volume(int width, int height, int depth, double fill = 0.0)
        : width_(width), height_(height), depth_(depth) {
        if (width < 1 || height < 1 || depth < 1)
            throw std::invalid_argument("Volume: extents must be >= 1");
        samples_.assign(static_cast<size_t>(width) * height * depth, fill);
    }

    Volume(int width, int height, int depth, std::vector<double> samples)
        : width_(width), height_(height), depth_(depth), samples_(std::move(samples)) {
        if (width < 1 || height < 1 || depth < 1)
            throw std::invalid_argument("Volume: extents must be >= 1");
        if (samples_.size() != static_cast<size_t>(width) * height * depth)
            throw std::invalid_argument("Volume: sample count does not match extents");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int depth() const { return depth_; }
    size_t size() const { return samples_.size(); }

    double operator()(int x, int y, int z) const { return samples_[idx(x, y, z)]; }
    double& operator()(int x, int y, int z) { return samples_[idx(x, y, z)]; }

    double get(int x, int y, int z) const {
        check_coords(x, y, z);
        return samples_[idx(x, y, z)];
    }
    void set(int x, int y, int z, double value) {
        check_coords(x, y, z);
        samples_[idx(x, y, z)] = value;
    }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

private:
    size_t idx(int x, int y, int z) const {
        return (static_cast<size_t>(z) * height_ + y) * width_ + x;
    }
    void check_coords(int x, int y, int z) const {
        if (x < 0 || x >= width_ || y < 0 || y >= height_ || z < 0 || z >= depth_)
            throw std::out_of_range("Volume: coordinate out of range");
    }

    int width_ = 0;
    int height_ = 0;
    int depth_ = 0;
    std::vector<double> samples_;
};

/// 1D tap vector indexed by offset u in [u_min, u_max], u_min <= 0 <= u_max.
/// Taps are non-negative and normalized to sum 1 on construction.
class SeparableKernel {
public:
    SeparableKernel(int u_min, std::vector<double> taps)
        : u_min_(u_min), taps_(std::move(taps)) {
        if (taps_.empty())
            throw std::invalid_argument("SeparableKernel: empty tap vector");
        const int u_max = u_min_ + static_cast<int>(taps_.size()) - 1;
        if (u_min_ > 0 || u_max < 0)
            throw std::invalid_argument("SeparableKernel: offset range must contain 0");
        double sum = 0.0;
        for (double t : taps_) {
            if (!(t >= 0.0))
                throw std::invalid_argument("SeparableKernel: taps must be non-negative");
            sum += t;
        }
        if (sum <= 0.0)
            throw std::invalid_argument("SeparableKernel: taps sum to zero, not normalizable");
        for (double& t : taps_)
            t /= sum;
    }

    int u_min() const { return u_min_; }
    int u_max() const { return u_min_ + static_cast<int>(taps_.size()) - 1; }
    int tap_count() const { return static_cast<int>(taps_.size()); }

    /// Weight at offset u; u must lie in [u_min, u_max].
    double tap(int u) const { return taps_[static_cast<size_t>(u - u_min_)]; }

    const std::vector<double>& taps() const { return taps_; }

private:
    int u_min_;
    std::vector<double> taps_;
};

/// One-sided sub-window of the (2r+1)^2 neighborhood: offset ranges relative
/// to the center pixel. Ids 1-4 are quarter windows, 5-8 half windows.
struct SubWindowId {
    int id;            // 1..8
    int u0, u1;        // column offset range, inclusive
    int v0, v1;        // row offset range, inclusive
};

/// The eight one-sided sub-windows for radius r, in selection order.
/// 1: left/up quarter    [-r,0]x[0,r]     5: left half   [-r,0]x[-r,r]
/// 2: right/up quarter   [0,r]x[0,r]      6: right half  [0,r]x[-r,r]
/// 3: right/down quarter [0,r]x[-r,0]     7: up half     [-r,r]x[0,r]
/// 4: left/down quarter  [-r,0]x[-r,0]    8: down half   [-r,r]x[-r,0]
inline std::array<SubWindowId, 8> sub_windows(int r) {
    if (r < 1)
        throw std::invalid_argument("sub_windows: radius must be >= 1");
    return {{
        {1, -r, 0, 0, r},
        {2, 0, r, 0, r},
        {3, 0, r, -r, 0},
        {4, -r, 0, -r, 0},
        {5, -r, 0, -r, r},
        {6, 0, r, -r, r},
        {7, -r, r, 0, r},
        {8, -r, r, -r, 0},
    }};
}

enum class FilterVariant {
    Box,
    OsbfExact,
    OsbfFast,
    OneSidedGeneric,
    Gaussian,
};

/// Single knob surface for all filters. Boundary handling is always
/// valid-count normalization (windows clipped to the domain, means divided
/// by the in-domain pixel count).
struct FilterConfig {
    int radius = 2;
    int iterations = 10;
    FilterVariant variant = FilterVariant::OsbfExact;
    double sigma = 3.0;  // Gaussian variants only

    void validate() const {
        if (radius < 1)
            throw std::invalid_argument("FilterConfig: radius must be >= 1");
        if (iterations < 0)
            throw std::invalid_argument("FilterConfig: iterations must be >= 0");
        const bool needs_sigma = variant == FilterVariant::OneSidedGeneric ||
                                 variant == FilterVariant::Gaussian;
        if (needs_sigma && !(sigma > 0.0))
            throw std::invalid_argument("FilterConfig: sigma must be > 0");
    }
};

}  // namespace osbf
