#pragma once

#include <cstddef>
#include <vector>

namespace spatter {

/// Binary-classification metrics; positive class is spatter (label 1).
struct MetricsReport {
    double accuracy = 0.0;
    double f1 = 0.0;
    double balanced_accuracy = 0.0;
    double roc_auc = 0.0;
    bool auc_defined = true;  // false when either class is absent
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

/// Rank-based AUC: probability a random positive outscores a random negative,
/// with ties credited 0.5. Returns NaN when either class is absent.
double roc_auc(const std::vector<int>& labels, const std::vector<double>& scores);

/// Hard labels from thresholding the spatter probability (strictly greater).
MetricsReport evaluate_scores(const std::vector<int>& labels, const std::vector<double>& spatter_probs,
                              double threshold = 0.5);

}  // namespace spatter
