#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spatter/field_bundle.hpp"

namespace spatter {

/// Binary metal mask: 1 = solid or liquid metal, 0 = gas/vapor.
struct PhaseMask {
    GridMeta meta;
    std::vector<std::uint8_t> bits;

    std::size_t metal_count() const;
};

/// bit(i,j,k) = 1 iff alpha_g(i,j,k) <= threshold. The boundary cell
/// (alpha_g == threshold) counts as metal so interface cells stay with the
/// surface.
PhaseMask binarize(const FieldBundle& bundle, double threshold = 0.5);

enum class Connectivity : int { faces6 = 6, edges18 = 18, corners26 = 26 };

/// One raw connected component; label order is descending size, ties broken
/// by earliest cell in scan order.
struct Component {
    int label = 0;  // 1-based, contiguous
    std::vector<std::array<int, 3>> cells;
};

struct LabeledField {
    GridMeta meta;
    std::vector<std::uint32_t> labels;  // 0 = gas
    std::vector<Component> components;
};

/// Union-find connected-component labeling (path compression + union by size).
LabeledField label_components(const PhaseMask& mask, Connectivity conn = Connectivity::faces6);

struct Blob {
    int id = 0;
    std::vector<std::array<int, 3>> cells;
    std::size_t n_cells = 0;
    double volume_um3 = 0.0;
    Vec3 centroid{};     // um
    Vec3 mean_u{};       // m/s
    double speed = 0.0;  // |mean_u|
    double mean_T = 0.0;
    double mean_rho = 0.0;
    double mean_p = 0.0;
};

/// Aggregates over a connected cell set; throws DataError on an empty list.
Blob blob_properties(const FieldBundle& bundle, const std::vector<std::array<int, 3>>& cells);

struct SegmentationResult {
    Blob composite;              // melt pool + powder bed (largest component)
    std::vector<Blob> spatter;   // descending size, n_cells >= min_cells
    std::size_t dropped_small = 0;
};

/// Largest component becomes the composite (ties -> lowest label); remaining
/// components survive as spatter when n_cells >= min_cells.
SegmentationResult classify_blobs(const std::vector<Component>& components, const FieldBundle& bundle,
                                  std::size_t min_cells = 8);

struct SegmentConfig {
    double threshold = 0.5;
    Connectivity connectivity = Connectivity::faces6;
    std::size_t min_cells = 8;
};

/// binarize + label + classify in one step.
SegmentationResult segment_bundle(const FieldBundle& bundle, const SegmentConfig& cfg = {});

Connectivity connectivity_from_int(int v);

}  // namespace spatter
