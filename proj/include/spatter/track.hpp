#pragma once

#include <map>
#include <vector>

#include "spatter/segment.hpp"

namespace spatter {

struct TrackerConfig {
    double dt_us = 5.0;       // frame interval
    double max_dist_um = 25.0;  // gating radius for prediction-to-blob matches

    void check_valid() const {
        if (dt_us <= 0.0) throw UsageError("tracker dt must be > 0");
        if (max_dist_um <= 0.0) throw UsageError("tracker max_dist must be > 0");
    }
};

/// Predicted centroids one frame ahead: centroid + dt * mean_u.
/// m/s times us is um, so no conversion factor appears.
std::vector<Vec3> predict_positions(const std::vector<Blob>& blobs, double dt_us);

struct LinkResult {
    std::map<int, int> continued;   // prev blob index -> next blob index
    std::vector<int> terminated;    // prev blob indices with no match
    std::vector<int> born;          // next blob indices not claimed by any prev
};

/// Prediction / correlation / assignment between two frames. Each prev blob's
/// single candidate is the nearest next centroid to its prediction (k-d tree
/// query, exact); candidates within the gate are accepted greedily by
/// ascending distance with one-to-one enforcement.
LinkResult link_frames(const std::vector<Blob>& prev, const std::vector<Blob>& next,
                       const TrackerConfig& cfg);

enum class TrajectoryStatus { active, terminated };

struct Observation {
    double time_us = 0.0;
    Blob blob;
};

struct Trajectory {
    int id = 0;
    std::vector<Observation> observations;
    TrajectoryStatus status = TrajectoryStatus::active;
};

/// Tracker state: active trajectories indexed by current-frame blob index,
/// plus everything already terminated.
struct TrackState {
    std::vector<Trajectory> trajectories;
    std::map<int, int> active_by_blob;  // current blob index -> trajectory index
    int next_id = 0;
};

/// Applies one frame's LinkResult: continued blobs extend their trajectory,
/// unmatched prev blobs terminate, unmatched next blobs open new trajectories.
void update_trajectories(TrackState& state, const LinkResult& link, const std::vector<Blob>& next,
                         double next_time_us);

struct KinematicsStep {
    Vec3 displacement_um{};
    double speed_m_s = 0.0;
    Vec3 direction{};          // unit vector; zero when undefined
    bool direction_defined = false;
};

/// Per-step displacement/speed/direction series; needs >= 2 observations.
std::vector<KinematicsStep> kinematics(const Trajectory& traj, double dt_us);

/// Convenience driver: segments every frame and tracks spatter blobs through
/// the sequence. Frames must be in ascending time order.
std::vector<Trajectory> track_frames(const std::vector<const FieldBundle*>& frames,
                                     const SegmentConfig& seg_cfg, const TrackerConfig& cfg);

}  // namespace spatter
