#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spatter/dataset.hpp"
#include "spatter/metrics.hpp"
#include "spatter/rng.hpp"

namespace spatter {

enum class Algorithm { tree, forest, extratrees, bagging, gboost, knn };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

enum class Scaling { none, standardize };

using HyperValue = std::variant<double, std::string>;
using HyperMap = std::map<std::string, HyperValue>;

/// Classifier configuration. Only keys valid for the algorithm are accepted;
/// fit() rejects anything else. Numeric keys: n_estimators, max_depth,
/// min_samples_split, min_samples_leaf, learning_rate, subsample,
/// n_neighbors, minkowski_p, max_samples, and (for bagging) a fractional
/// max_features. String keys: criterion (gini|entropy), max_features
/// (sqrt|log2|all), weights (uniform|distance).
struct ModelSpec {
    Algorithm algorithm = Algorithm::forest;
    HyperMap hyperparameters;
    std::uint64_t seed = 0;
    Scaling scaling = Scaling::none;
};

/// One node of a fitted tree, stored flat; root is node 0 and feature < 0
/// marks a leaf. Classification leaves carry p_spatter, gboost regression
/// leaves carry value. n_samples/impurity feed impurity importances.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1, right = -1;
    double p_spatter = 0.0;
    double value = 0.0;
    int n_samples = 0;
    double impurity = 0.0;
};

struct FittedTree {
    std::vector<TreeNode> nodes;

    int leaf_for(std::span<const double> row) const;
    double predict_proba(std::span<const double> row) const { return nodes[leaf_for(row)].p_spatter; }
    double predict_value(std::span<const double> row) const { return nodes[leaf_for(row)].value; }
};

struct TrainedModel {
    ModelSpec spec;
    std::vector<std::string> feature_names;
    std::size_t n_train = 0;

    std::vector<double> scale_mean, scale_sd;  // empty unless standardized

    std::vector<FittedTree> trees;      // tree ensembles and gboost stages
    double gb_intercept = 0.0;          // prior log-odds
    double gb_learning_rate = 0.0;

    std::vector<std::vector<double>> knn_X;  // stored (scaled) training rows
    std::vector<int> knn_y;

    bool is_tree_based() const { return spec.algorithm != Algorithm::knn; }

    /// P(spatter) for one feature row (training feature order).
    double prob_spatter(std::span<const double> row) const;

    /// (P(meltpool), P(spatter)) pairs for a dataset in matching column order.
    std::vector<std::array<double, 2>> predict_proba(const Dataset& ds) const;

    /// Closure form used by the explain module and synthetic tests.
    std::function<double(std::span<const double>)> prob_fn() const;
};

TrainedModel fit(const ModelSpec& spec, const Dataset& train);

MetricsReport evaluate(const TrainedModel& model, const Dataset& ds, double threshold = 0.5);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

enum class CvMetric { accuracy, f1, balanced_accuracy, roc_auc };
CvMetric cv_metric_from_string(const std::string& s);
std::string to_string(CvMetric m);

using HyperGrid = std::map<std::string, std::vector<HyperValue>>;

struct CvRow {
    HyperMap params;
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t valid_folds = 0;
};

struct GridSearchResult {
    ModelSpec best;
    std::size_t best_index = 0;
    std::vector<CvRow> table;  // enumeration order
};

/// Cartesian grid enumeration is lexicographic over sorted hyperparameter
/// names with values in declared order; all grid points share one stratified
/// k-fold partition fixed by the seed. Ties on mean metric keep the earliest
/// grid point. `base` supplies the algorithm, fixed hyperparameters, and
/// scaling; grid entries override it.
GridSearchResult grid_search(const ModelSpec& base, const HyperGrid& grid, const Dataset& train,
                             int k = 5, CvMetric metric = CvMetric::roc_auc, std::uint64_t seed = 0);

/// Stratified fold ids (0..k-1) per record, the partition grid_search uses.
std::vector<int> stratified_folds(const std::vector<int>& labels, int k, std::uint64_t seed);

/// Mean decrease in impurity, normalized to sum 1. Tree-based models only;
/// knn callers are pointed at permutation_importance.
std::map<std::string, double> feature_importance(const TrainedModel& model);

struct PermutationImportance {
    double mean = 0.0;
    double stddev = 0.0;
};

/// Mean/std drop in the metric over n_repeats seeded shuffles of one column
/// at a time.
std::map<std::string, PermutationImportance> permutation_importance(
    const TrainedModel& model, const Dataset& ds, int n_repeats, std::uint64_t seed,
    CvMetric metric = CvMetric::accuracy);

double metric_value(CvMetric metric, const MetricsReport& report);

}  // namespace spatter
