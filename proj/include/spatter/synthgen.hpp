#pragma once

#include <cstdint>
#include <vector>

#include "spatter/dataset.hpp"
#include "spatter/field_bundle.hpp"

namespace spatter {

struct ProcessParams {
    double power_w = 300.0;
    double scan_speed_m_s = 1.0;
    double beam_radius_um = 50.0;  // D4sigma 100 um
    double absorptivity = 0.55;

    void check_valid() const;
};

struct CalibrationPoint {
    double power_w;
    double width_um;
    double depth_um;
};

struct MaterialParams {
    double T_liquidus_K = 1723.0;
    double T_solidus_K = 1658.0;
    double T_vapor_K = 3090.0;
    double P0_Pa = 101325.0;
    double latent_heat_vap_J_kg = 7.45e6;
    double molar_mass_kg_mol = 0.056;
    double gas_constant_J_mol_K = 8.314462618;
    double rho_metal_kg_m3 = 7618.0;       // solid, 298 K
    double rho_metal_liq_kg_m3 = 6468.0;   // liquid, 1923 K
    double rho_gas_kg_m3 = 1.17;
    std::vector<CalibrationPoint> calibration;  // (power -> width, depth) at 1 m/s

    static MaterialParams ss316l();
    void check_valid() const;
};

/// Gaussian beam power density at a lateral offset from the beam axis,
/// I = 2 xi P / (pi r^2) * exp(-2 |offset|^2 / r^2), in W/m^2.
double beam_intensity_w_m2(double offset_x_um, double offset_y_um, const ProcessParams& params);

/// Saturated-vapor recoil scalar 0.54 P0 exp[Lv M (T - Tv) / (R T Tv)], Pa.
/// Interface and density weighting excluded.
double recoil_pressure_pa(double T_K, const MaterialParams& mat);

struct PoolDims {
    double width_um = 0.0;
    double depth_um = 0.0;
    double length_um = 0.0;  // front + rear semi-axes combined
};

/// Calibrated melt-pool size: piecewise-linear in power through the anchor
/// table, scaled by sqrt(1 m/s / v) away from the calibration speed.
PoolDims pool_dims(const ProcessParams& params, const MaterialParams& mat);

struct SurrogateConfig {
    int nx = 88, ny = 56, nz = 44;
    double dx_um = 4.0, dy_um = 4.0, dz_um = 4.0;
    int frames = 8;
    double dt_us = 5.0;
    double surface_frac = 0.62;           // substrate top as a fraction of domain height
    double rate_coefficient = 4.0;        // lambda = coeff * mean surface recoil / P0
    int max_droplets_per_frame = 12;
    double eject_speed_min_m_s = 2.5;
    double eject_speed_max_m_s = 20.0;
    double droplet_radius_um = 7.0;
    double min_separation_um = 0.0;       // >0 enforces pairwise droplet spacing
    std::uint64_t seed = 0;

    void check_valid() const;
};

struct ParticleTruth {
    int id = 0;
    int birth_frame = 0;
    Vec3 birth_pos_um{};
    Vec3 velocity_m_s{};
    double radius_um = 0.0;
    double T_K = 0.0;
    double rho_kg_m3 = 0.0;
    double p_Pa = 0.0;

    Vec3 center_at_frame(int frame, double dt_us) const {
        return birth_pos_um + velocity_m_s * (static_cast<double>(frame - birth_frame) * dt_us);
    }
};

struct GroundTruth {
    std::vector<ParticleTruth> particles;
};

/// Plans the spatter ledger once (sequential, cheap), then rasterizes frames
/// on demand so screening never holds a whole run in memory.
class SurrogateGenerator {
public:
    SurrogateGenerator(const ProcessParams& params, const MaterialParams& mat,
                       const SurrogateConfig& cfg);

    FieldBundle frame(int f) const;  // deterministic, safe to call in parallel
    int frames() const { return cfg_.frames; }
    const GroundTruth& truth() const { return truth_; }

    /// Per-frame Poisson rate before the count cap (monotonicity checks).
    double spatter_rate(int f) const;

    Vec3 beam_position_um(int f) const;
    double surface_z_um() const { return surface_z_; }
    double peak_temperature_K() const { return T_peak_; }

private:
    double surface_temperature(double x_um, double y_um, int f) const;
    void plan_spatter();

    ProcessParams params_;
    MaterialParams mat_;
    SurrogateConfig cfg_;
    PoolDims dims_;
    double surface_z_ = 0.0;
    double beam_x0_ = 0.0, beam_y_ = 0.0;
    double T_peak_ = 0.0;
    GroundTruth truth_;
    std::vector<double> rate_per_frame_;
};

struct SurrogateRun {
    std::vector<FieldBundle> frames;
    GroundTruth truth;
};

SurrogateRun surrogate_run(const ProcessParams& params, const MaterialParams& mat,
                           const SurrogateConfig& cfg);

/// Measured alpha_l > 0.5 extents (cell span plus one spacing per axis).
struct MeasuredPool {
    double width_um = 0.0;
    double depth_um = 0.0;
    std::size_t cell_count = 0;
};
MeasuredPool measure_pool(const FieldBundle& bundle);

// ---------------------------------------------------------------------------
// Gaussian class-model dataset generator
// ---------------------------------------------------------------------------

/// Per-class Gaussian over the nine drawn features
/// (x,y,z,vx,vy,vz,T,rho,p); vmag is recomputed from components.
struct ClassModel {
    std::vector<double> mean[2];               // [meltpool, spatter]
    std::vector<std::vector<double>> cov[2];   // symmetric positive definite

    /// Reference LPBF class statistics: spatter carries the
    /// broader spatial and velocity spread, the melt pool the wider
    /// temperature and pressure spread.
    static ClassModel lpbf_reference();

    /// Both classes identical (indistinguishable baseline).
    static ClassModel identical();
};

Dataset gen_dataset(const ClassModel& model, std::size_t n, std::uint64_t seed);

}  // namespace spatter
