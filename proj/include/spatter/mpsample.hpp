#pragma once

#include <vector>

#include "spatter/segment.hpp"

namespace spatter {

/// Melt-pool cell set: metal cells with alpha_l > 0.5 restricted to the
/// composite (largest) component, plus a bitmap for O(1) membership.
struct MeltPoolSet {
    GridMeta meta;
    std::vector<std::array<int, 3>> cells;  // scan order
    std::vector<std::uint8_t> member;       // flat-indexed

    bool contains(int i, int j, int k) const {
        return meta.in_range(i, j, k) && member[meta.flatten(i, j, k)] != 0;
    }
};

MeltPoolSet meltpool_mask(const FieldBundle& bundle, const SegmentConfig& seg_cfg = {});

struct SurfaceCell {
    std::array<int, 3> index;
    Vec3 position;   // cell center, um
    double alpha_g;
};

/// One cell per (i,j) column that intersects the melt pool: the member with
/// the highest alpha_g, ties resolved to the highest k.
std::vector<SurfaceCell> surface_cells(const MeltPoolSet& mp, const FieldBundle& bundle);

struct MeltPoolSample {
    Vec3 position{};   // surface-cell center, um
    Vec3 mean_u{};     // m/s
    double speed = 0.0;
    double mean_T = 0.0;
    double mean_rho = 0.0;
    double mean_p = 0.0;
    std::size_t n_cells_used = 0;
};

/// Draws n_samples surface cells under the seeded generator (without
/// replacement unless n_samples exceeds the surface size) and averages each
/// field over melt-pool cells inside the n_r^3 cube centered on the pick.
std::vector<MeltPoolSample> sample_surface(const FieldBundle& bundle, const MeltPoolSet& mp,
                                           const std::vector<SurfaceCell>& surface, int n_r,
                                           std::size_t n_samples, std::uint64_t seed);

}  // namespace spatter
