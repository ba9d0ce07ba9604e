#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "osbf/core.hpp"
#include "osbf/integral.hpp"
#include "osbf/parallel.hpp"

namespace osbf {

/// One-sided 3D sub-region: per-axis offset ranges relative to the center
/// voxel, each one of [-r,0], [0,r] or [-r,r].
struct SubRegion3D {
    int id;  // 1..14
    int u0, u1;
    int v0, v1;
    int w0, w1;
};

/// The fourteen one-sided 3D sub-regions for radius r, in selection order.
/// Ids 1-8 are octants ((r+1)^3 voxels, all axes one-sided); octants are
/// ordered by sign pattern (-,-,-), (+,-,-), (-,+,-), (+,+,-), (-,-,+),
/// (+,-,+), (-,+,+), (+,+,+). Ids 9-14 are half windows ((r+1)(2r+1)^2
/// voxels, exactly one axis one-sided): -x, +x, -y, +y, -z, +z.
inline std::array<SubRegion3D, 14> sub_regions_3d(int r) {
    if (r < 1)
        throw std::invalid_argument("sub_regions_3d: radius must be >= 1");
    std::array<SubRegion3D, 14> regions{};
    int id = 1;
    for (int sz = 0; sz < 2; ++sz)
        for (int sy = 0; sy < 2; ++sy)
            for (int sx = 0; sx < 2; ++sx) {
                regions[id - 1] = {id,
                                   sx ? 0 : -r, sx ? r : 0,
                                   sy ? 0 : -r, sy ? r : 0,
                                   sz ? 0 : -r, sz ? r : 0};
                ++id;
            }
    regions[8] = {9, -r, 0, -r, r, -r, r};
    regions[9] = {10, 0, r, -r, r, -r, r};
    regions[10] = {11, -r, r, -r, 0, -r, r};
    regions[11] = {12, -r, r, 0, r, -r, r};
    regions[12] = {13, -r, r, -r, r, -r, 0};
    regions[13] = {14, -r, r, -r, r, 0, r};
    return regions;
}

/// Classical 3D box filter: valid-count mean over the (2r+1)^3 box via the
/// summed-volume table, iterated.
inline Volume box_filter_3d(const Volume& vol, int r, int iterations) {
    if (r < 1)
        throw std::invalid_argument("box_filter_3d: radius must be >= 1");
    if (iterations < 0)
        throw std::invalid_argument("box_filter_3d: iterations must be >= 0");
    const int w = vol.width(), h = vol.height(), d = vol.depth();
    Volume cur = vol;
    for (int it = 0; it < iterations; ++it) {
        SummedVolumeTable svt(cur);
        Volume next(w, h, d);
        parallel_for_rows(d, [&](int z0, int z1) {
            for (int z = z0; z < z1; ++z)
                for (int y = 0; y < h; ++y)
                    for (int x = 0; x < w; ++x)
                        next(x, y, z) = svt.box_mean(
                            {x - r, y - r, z - r, x + r, y + r, z + r});
        });
        cur = std::move(next);
    }
    return cur;
}

/// 3D one-sided box filter: per voxel the 14 region means (8 octants, 6 half
/// windows) are candidates; the closest one replaces the voxel (ties go to
/// the smallest region id). Jacobi iterations.
inline Volume osbf_3d(const Volume& vol, int r, int iterations) {
    if (r < 1)
        throw std::invalid_argument("osbf_3d: radius must be >= 1");
    if (iterations < 0)
        throw std::invalid_argument("osbf_3d: iterations must be >= 0");
    const int w = vol.width(), h = vol.height(), d = vol.depth();
    const auto regions = sub_regions_3d(r);
    Volume cur = vol;
    for (int it = 0; it < iterations; ++it) {
        SummedVolumeTable svt(cur);
        Volume next(w, h, d);
        parallel_for_rows(d, [&](int z0, int z1) {
            for (int z = z0; z < z1; ++z) {
                for (int y = 0; y < h; ++y) {
                    for (int x = 0; x < w; ++x) {
                        const double u = cur(x, y, z);
                        double best = 0.0;
                        double best_abs = std::numeric_limits<double>::infinity();
                        for (const auto& reg : regions) {
                            const double a = svt.box_mean({x + reg.u0, y + reg.v0, z + reg.w0,
                                                           x + reg.u1, y + reg.v1, z + reg.w1});
                            const double dist = std::abs(a - u);
                            if (dist < best_abs) {
                                best_abs = dist;
                                best = a;
                            }
                        }
                        next(x, y, z) = best;
                    }
                }
            }
        });
        cur = std::move(next);
    }
    return cur;
}

}  // namespace osbf
