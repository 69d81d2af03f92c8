#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "spatter/errors.hpp"

namespace spatter {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

double distance(const Vec3& a, const Vec3& b);

/// Laser settings a bundle was produced under; provenance only.
struct RunParams {
    double power_w = 0.0;
    double velocity_m_s = 0.0;
};

/// Structured-grid metadata. Units: spacing/origin in um, time in us.
struct GridMeta {
    int nx = 1, ny = 1, nz = 1;
    double dx = 1.0, dy = 1.0, dz = 1.0;
    Vec3 origin{};
    double time_us = 0.0;
    std::optional<RunParams> params;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }
    double cell_volume_um3() const { return dx * dy * dz; }

    bool in_range(int i, int j, int k) const {
        return i >= 0 && j >= 0 && k >= 0 && i < nx && j < ny && k < nz;
    }

    /// x varies fastest: flat = i + nx*(j + ny*k).
    std::size_t flatten(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(nx) *
                   (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * static_cast<std::size_t>(k));
    }

    std::array<int, 3> unflatten(std::size_t flat) const {
        const int i = static_cast<int>(flat % static_cast<std::size_t>(nx));
        const std::size_t rest = flat / static_cast<std::size_t>(nx);
        const int j = static_cast<int>(rest % static_cast<std::size_t>(ny));
        const int k = static_cast<int>(rest / static_cast<std::size_t>(ny));
        return {i, j, k};
    }

    /// Center of cell (i,j,k) in um.
    Vec3 cell_center(int i, int j, int k) const {
        return {origin.x + (i + 0.5) * dx, origin.y + (j + 0.5) * dy, origin.z + (k + 0.5) * dz};
    }

    void check_valid() const {
        if (nx < 1 || ny < 1 || nz < 1) throw DataError("grid dims must be >= 1");
        if (dx <= 0 || dy <= 0 || dz <= 0) throw DataError("grid spacing must be > 0");
    }
};

}  // namespace spatter
