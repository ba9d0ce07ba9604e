#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "osbf/core.hpp"

namespace osbf {

/// Summed-area table with a zero border row/column: cumsum(x, y) holds the
/// sum of the source plane over [0,x) x [0,y). Any rectangular sum needs
/// four lookups, independent of the rectangle size.
class SummedAreaTable {
public:
    explicit SummedAreaTable(const ImagePlane& plane)
        : width_(plane.width()), height_(plane.height()),
          cumsum_(static_cast<size_t>(width_ + 1) * (height_ + 1), 0.0) {
        const int stride = width_ + 1;
        for (int y = 0; y < height_; ++y) {
            double row = 0.0;
            const double* src = plane.samples().data() + static_cast<size_t>(y) * width_;
            const double* above = cumsum_.data() + static_cast<size_t>(y) * stride;
            double* out = cumsum_.data() + static_cast<size_t>(y + 1) * stride;
            for (int x = 0; x < width_; ++x) {
                row += src[x];
                out[x + 1] = above[x + 1] + row;
            }
        }
    }

    int width() const { return width_; }
    int height() const { return height_; }

    double cumsum(int x, int y) const {
        return cumsum_[static_cast<size_t>(y) * (width_ + 1) + x];
    }

    /// Sum over the inclusive rectangle [x0,x1] x [y0,y1] intersected with
    /// the image domain. Empty intersection yields 0.
    double rect_sum(int x0, int y0, int x1, int y1) const {
        x0 = std::max(x0, 0);
        y0 = std::max(y0, 0);
        x1 = std::min(x1, width_ - 1);
        y1 = std::min(y1, height_ - 1);
        if (x0 > x1 || y0 > y1)
            return 0.0;
        return cumsum(x1 + 1, y1 + 1) - cumsum(x0, y1 + 1) -
               cumsum(x1 + 1, y0) + cumsum(x0, y0);
    }

    /// Number of in-domain pixels of the inclusive rectangle.
    long long rect_count(int x0, int y0, int x1, int y1) const {
        x0 = std::max(x0, 0);
        y0 = std::max(y0, 0);
        x1 = std::min(x1, width_ - 1);
        y1 = std::min(y1, height_ - 1);
        if (x0 > x1 || y0 > y1)
            return 0;
        return static_cast<long long>(x1 - x0 + 1) * (y1 - y0 + 1);
    }

    /// Valid-count mean over the clipped rectangle.
    double rect_mean(int x0, int y0, int x1, int y1) const {
        const long long n = rect_count(x0, y0, x1, y1);
        if (n == 0)
            throw std::domain_error("rect_mean: empty clipped rectangle");
        return rect_sum(x0, y0, x1, y1) / static_cast<double>(n);
    }

private:
    int width_;
    int height_;
    std::vector<double> cumsum_;
};

inline SummedAreaTable build_sat(const ImagePlane& plane) {
    return SummedAreaTable(plane);
}

inline double rect_sum(const SummedAreaTable& sat, int x0, int y0, int x1, int y1) {
    return sat.rect_sum(x0, y0, x1, y1);
}

inline double rect_mean(const SummedAreaTable& sat, int x0, int y0, int x1, int y1) {
    return sat.rect_mean(x0, y0, x1, y1);
}

/// Inclusive 3D region in voxel coordinates, possibly extending outside the
/// volume; queries clip it to the domain.
struct BoxRegion3D {
    int x0, y0, z0;
    int x1, y1, z1;
};

/// 3D prefix-sum table with a zero border slab in each axis; box sums need
/// eight lookups (inclusion-exclusion).
class SummedVolumeTable {
public:
    explicit SummedVolumeTable(const Volume& vol)
        : width_(vol.width()), height_(vol.height()), depth_(vol.depth()),
          cumsum_(static_cast<size_t>(width_ + 1) * (height_ + 1) * (depth_ + 1), 0.0) {
        for (int z = 0; z < depth_; ++z)
            for (int y = 0; y < height_; ++y) {
                double row = 0.0;
                for (int x = 0; x < width_; ++x) {
                    row += vol(x, y, z);
                    // prefix over x resolved by the running row sum; y and z by lookups
                    at(x + 1, y + 1, z + 1) = row + at(x + 1, y, z + 1) + at(x + 1, y + 1, z) -
                                              at(x + 1, y, z);
                }
            }
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int depth() const { return depth_; }

    double cumsum(int x, int y, int z) const {
        return cumsum_[(static_cast<size_t>(z) * (height_ + 1) + y) * (width_ + 1) + x];
    }

    double box_sum(BoxRegion3D r) const {
        r.x0 = std::max(r.x0, 0);
        r.y0 = std::max(r.y0, 0);
        r.z0 = std::max(r.z0, 0);
        r.x1 = std::min(r.x1, width_ - 1);
        r.y1 = std::min(r.y1, height_ - 1);
        r.z1 = std::min(r.z1, depth_ - 1);
        if (r.x0 > r.x1 || r.y0 > r.y1 || r.z0 > r.z1)
            return 0.0;
        const int ax = r.x0, bx = r.x1 + 1;
        const int ay = r.y0, by = r.y1 + 1;
        const int az = r.z0, bz = r.z1 + 1;
        return cumsum(bx, by, bz) - cumsum(ax, by, bz) - cumsum(bx, ay, bz) -
               cumsum(bx, by, az) + cumsum(ax, ay, bz) + cumsum(ax, by, az) +
               cumsum(bx, ay, az) - cumsum(ax, ay, az);
    }

    long long box_count(BoxRegion3D r) const {
        r.x0 = std::max(r.x0, 0);
        r.y0 = std::max(r.y0, 0);
        r.z0 = std::max(r.z0, 0);
        r.x1 = std::min(r.x1, width_ - 1);
        r.y1 = std::min(r.y1, height_ - 1);
        r.z1 = std::min(r.z1, depth_ - 1);
        if (r.x0 > r.x1 || r.y0 > r.y1 || r.z0 > r.z1)
            return 0;
        return static_cast<long long>(r.x1 - r.x0 + 1) * (r.y1 - r.y0 + 1) * (r.z1 - r.z0 + 1);
    }

    double box_mean(const BoxRegion3D& r) const {
        const long long n = box_count(r);
        if (n == 0)
            throw std::domain_error("box_mean: empty clipped region");
        return box_sum(r) / static_cast<double>(n);
    }

private:
    double& at(int x, int y, int z) {
        return cumsum_[(static_cast<size_t>(z) * (height_ + 1) + y) * (width_ + 1) + x];
    }
    double at(int x, int y, int z) const { return cumsum(x, y, z); }

    int width_;
    int height_;
    int depth_;
    std::vector<double> cumsum_;
};

inline SummedVolumeTable build_svt(const Volume& vol) {
    return SummedVolumeTable(vol);
}

inline double box_sum_3d(const SummedVolumeTable& svt, const BoxRegion3D& region) {
    return svt.box_sum(region);
}

inline double box_mean_3d(const SummedVolumeTable& svt, const BoxRegion3D& region) {
    return svt.box_mean(region);
}

}  // namespace osbf
