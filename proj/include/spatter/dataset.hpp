#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "spatter/mpsample.hpp"
#include "spatter/segment.hpp"

namespace spatter {

inline constexpr int kLabelMeltpool = 0;
inline constexpr int kLabelSpatter = 1;

/// One labeled observation: position (um), velocity components and magnitude
/// (m/s), temperature (K), density (kg/m^3), pressure (Pa).
struct SampleRecord {
    double x = 0, y = 0, z = 0;
    double vx = 0, vy = 0, vz = 0;
    double vmag = 0;
    double T = 0, rho = 0, p = 0;
    int label = kLabelMeltpool;
};

SampleRecord record_from_blob(const Blob& blob);
SampleRecord record_from_sample(const MeltPoolSample& sample);

struct Provenance {
    std::vector<std::string> run_ids;
    std::vector<std::uint64_t> seeds;
};

/// Labeled dataset with a fixed feature-column order. Spatial layout is
/// (x,y,z,vx,vy,vz,vmag,T,rho,p); drop_spatial removes the first three.
struct Dataset {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> X;  // row-major
    std::vector<int> y;
    Provenance provenance;

    std::size_t size() const { return X.size(); }
    std::size_t n_features() const { return feature_names.size(); }
    std::size_t class_count(int label) const;
    bool has_spatial() const;
    int feature_index(const std::string& name) const;  // -1 when absent
};

const std::vector<std::string>& spatial_feature_names();     // 10 columns
const std::vector<std::string>& no_spatial_feature_names();  // 7 columns

Dataset dataset_from_records(const std::vector<SampleRecord>& records, Provenance provenance = {});

/// Per-frame pairing of newly born spatter blobs with melt-pool samples.
struct FrameSamples {
    int frame_index = 0;
    std::vector<Blob> new_spatter;
    std::vector<MeltPoolSample> mp_samples;
};

/// Builds the balanced dataset: one spatter record per born blob, one
/// melt-pool record per sample, with per-frame count equality enforced.
Dataset assemble(const std::vector<FrameSamples>& frames, Provenance provenance = {});

struct SplitResult {
    Dataset train;
    Dataset test;
};

/// Stratified split. Total test size is ceil((1-train_frac)*N), distributed
/// across classes by largest remainder (ties to the lower label), so a
/// balanced input stays balanced within one record.
SplitResult split(const Dataset& ds, double train_frac, std::uint64_t seed);

/// Removes the x,y,z columns; errors if they are absent.
Dataset drop_spatial(const Dataset& ds);

void to_csv(const Dataset& ds, const std::filesystem::path& path);
Dataset from_csv(const std::filesystem::path& path);

/// Linear-interpolation quantile (the numpy default) over sorted values.
double quantile_sorted(const std::vector<double>& sorted_values, double q);

struct StatsConfig {
    int bins = 32;
    double kde_bandwidth = 0.0;  // 0 = Silverman rule
    std::size_t scatter_max = 512;
    std::uint64_t seed = 0;
};

struct FeatureClassStats {
    std::vector<double> bin_edges;      // bins+1 edges shared across classes
    std::vector<std::size_t> counts;    // per bin; sums to the class count
    std::vector<double> kde_grid;       // 256 points over the feature range
    std::vector<double> kde_values;
    double bandwidth = 0.0;
    bool kde_degenerate = false;
};

struct FeatureStats {
    std::string feature;
    FeatureClassStats per_class[2];  // [meltpool, spatter]
};

struct StatsResult {
    std::vector<FeatureStats> features;
    std::vector<std::size_t> scatter_indices;  // row subsample for pairs.csv
};

StatsResult feature_stats(const Dataset& ds, const StatsConfig& cfg = {});

}  // namespace spatter
