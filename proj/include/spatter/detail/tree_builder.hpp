#pragma once

#include <vector>

#include "spatter/learners.hpp"

namespace spatter::detail {

enum class SplitCriterion { gini, entropy, mse };

struct TreeBuildConfig {
    SplitCriterion criterion = SplitCriterion::gini;
    int max_depth = 0;  // 0 = unlimited
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    int max_features = 0;  // candidate count per node; 0 = all allowed features
    bool random_thresholds = false;  // extremely-randomized splits
};

/// Grows one tree on X[indices]. Exactly one of labels/targets is used:
/// labels for classification (leaf p_spatter), targets for regression
/// (leaf value, mse criterion). Splits go left on value <= threshold and are
/// taken only when the impurity decrease is strictly positive.
/// `allowed` is the candidate feature pool (bagging subsets).
FittedTree build_tree(const std::vector<std::vector<double>>& X, const std::vector<int>* labels,
                      const std::vector<double>* targets, const std::vector<int>& indices,
                      const TreeBuildConfig& cfg, const std::vector<int>& allowed, Rng& rng);

/// Routes every index through the tree and returns its leaf node id;
/// gboost uses this to overwrite leaf values with Newton steps.
std::vector<int> leaf_assignment(const FittedTree& tree, const std::vector<std::vector<double>>& X,
                                 const std::vector<int>& indices);

}  // namespace spatter::detail
