#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "spatter/learners.hpp"
#include "spatter/synthgen.hpp"

namespace spatter {

struct FlagResult {
    std::vector<std::size_t> flagged;  // flat indices of flagged melt-pool cells
    std::size_t meltpool_cells = 0;
};

/// Applies a no-spatial classifier to every melt-pool cell (alpha_g <= 0.5,
/// alpha_l > 0.5) using the cell's (vx,vy,vz,vmag,T,rho,p) record; flags
/// cells whose spatter probability exceeds the threshold.
FlagResult flag_spatter_cells(const TrainedModel& model, const FieldBundle& bundle,
                              double threshold = 0.5);

struct ProcessMapCell {
    double power_w = 0.0;
    double scan_speed_m_s = 0.0;
    double spatter_volume_um3 = 0.0;
    double flagged_fraction = 0.0;  // flagged / melt-pool cells over all frames
    int frames_used = 0;
};

struct ScreenConfig {
    SurrogateConfig surrogate;  // per-point template; seed derives per grid point
    double threshold = 0.5;
    std::uint64_t seed = 0;
};

/// One surrogate run per grid point, streaming frames through the classifier.
/// Deterministic: each point's surrogate seed derives from (seed, index).
std::vector<ProcessMapCell> screen(const std::vector<ProcessParams>& grid, const TrainedModel& model,
                                   const MaterialParams& mat, const ScreenConfig& cfg);

/// Named polylines in (velocity, power) space, supplied as input data.
struct BoundaryOverlay {
    std::map<std::string, std::vector<std::array<double, 2>>> polylines;

    void check_valid() const;
};

BoundaryOverlay load_overlay(const std::filesystem::path& path);

/// map.csv plus the echoed overlay.json.
void emit_map(const std::vector<ProcessMapCell>& cells, const BoundaryOverlay& overlay,
              const std::filesystem::path& out_dir);

struct TrendCurves {
    // volume vs power at each fixed velocity, and vs velocity at each power
    std::map<double, std::vector<std::pair<double, double>>> vs_power_at_velocity;
    std::map<double, std::vector<std::pair<double, double>>> vs_velocity_at_power;
    std::vector<std::pair<double, double>> vs_energy_density;  // P/v, ascending
};

TrendCurves trend_curves(const std::vector<ProcessMapCell>& cells);

void emit_trends(const TrendCurves& trends, const std::filesystem::path& out_dir);

struct QuadrantMeans {
    double high_p_low_v = 0.0;
    double high_p_high_v = 0.0;
    double low_p_low_v = 0.0;
    double low_p_high_v = 0.0;
};

/// Mean spatter volume per quadrant, split at the midpoint of each axis range.
QuadrantMeans quadrant_means(const std::vector<ProcessMapCell>& cells);

}  // namespace spatter
