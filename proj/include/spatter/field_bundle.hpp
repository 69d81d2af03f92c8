#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spatter/grid.hpp"

namespace spatter {

/// One timestep of per-cell multiphase fields on a structured grid.
/// Volume fractions are dimensionless, T in K, p in Pa, rho in kg/m^3,
/// velocity components in m/s. Payloads stay float32 so save/load is
/// bit-exact; downstream math promotes to double.
struct FieldBundle {
    GridMeta meta;
    std::vector<float> alpha_g, alpha_s, alpha_l;
    std::vector<float> T, p, rho;
    std::vector<float> ux, uy, uz;

    void allocate();  // sizes every field to meta.cell_count(), zero-filled

    struct CellSample {
        double alpha_g, alpha_s, alpha_l;
        double T, p, rho;
        Vec3 u;
    };
    /// All fields at one cell; throws DataError on out-of-range indices.
    CellSample cell_at(int i, int j, int k) const;
};

struct Violation {
    std::string field;
    std::size_t index;  // flat cell index
    std::string message;
};

/// Pure invariant check: empty result iff the bundle conforms.
std::vector<Violation> validate(const FieldBundle& bundle);

/// Clamp volume fractions within the load tolerance (1e-6 outside [0,1]).
/// Values further out are left for validate() to report.
void clamp_fractions(FieldBundle& bundle);

/// Directory format: meta.json plus one little-endian float32 array per field.
FieldBundle load_bundle(const std::filesystem::path& dir);
void save_bundle(const FieldBundle& bundle, const std::filesystem::path& dir);

/// Point-cloud CSV ingest onto a declared grid. Columns:
/// x_um,y_um,z_um,alpha_g,alpha_s,alpha_l,T_K,p_Pa,rho,ux,uy,uz.
/// Every cell of the grid must be covered by exactly one row.
FieldBundle ingest_csv(const std::filesystem::path& csv_path, const GridMeta& meta);

/// Canonical field order used by meta.json and the on-disk layout.
const std::vector<std::string>& bundle_field_names();

}  // namespace spatter
