#pragma once

#include <vector>

#include "spatter/grid.hpp"

namespace spatter {

/// Static 3-d tree over a point set. Queries are exact: the reported
/// neighbor always equals what a brute-force scan would return, including
/// the lowest-index rule on distance ties.
class KdTree {
public:
    explicit KdTree(std::vector<Vec3> points);

    /// Index of the nearest point to q, or -1 when the tree is empty.
    /// Ties on distance resolve to the lowest point index.
    int nearest(const Vec3& q) const;

    std::size_t size() const { return points_.size(); }

private:
    struct Node {
        int point = -1;
        int axis = 0;
        int left = -1, right = -1;
    };

    int build(std::vector<int>& idx, int lo, int hi, int depth);
    void search(int node, const Vec3& q, double& best_d2, int& best_idx) const;

    std::vector<Vec3> points_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace spatter
