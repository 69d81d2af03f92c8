#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spatter/dataset.hpp"

namespace spatter {

/// Spatter-class probability of a feature row. The explain module consumes
/// this closure form so tests can pass synthetic models directly.
using ProbFn = std::function<double(std::span<const double>)>;

struct Attribution {
    std::vector<double> phi;   // per feature, in predicted-probability units
    double base_value = 0.0;   // mean background prediction, f(empty set)
    double prediction = 0.0;   // f(all features) == model(x)
};

/// Exact Shapley attribution by coalition enumeration with interventional
/// background replacement: f(S) is the background mean of the model on hybrid
/// rows taking features in S from x. Cost is 2^d background sweeps, so d is
/// capped at max_features.
Attribution shapley_values(const ProbFn& model, std::span<const double> x,
                           const std::vector<std::vector<double>>& background, int max_features = 16);

/// Seeded background subsample (at most max_rows rows, preserving row order).
std::vector<std::vector<double>> subsample_background(const Dataset& ds, std::size_t max_rows,
                                                      std::uint64_t seed);

struct ShapSummary {
    std::vector<std::string> feature_names;      // dataset order
    std::vector<Attribution> per_record;         // one per dataset row
    std::vector<double> mean_abs_phi;            // dataset feature order
    std::vector<std::size_t> ranking;            // feature indices, descending mean |phi|
};

ShapSummary shap_summary(const ProbFn& model, const Dataset& ds,
                         const std::vector<std::vector<double>>& background, int max_features = 16);

struct PDPCurve {
    std::string feature;
    std::vector<double> grid;              // strictly increasing
    std::vector<double> mean_probability;  // one per grid value
};

/// Partial dependence on an explicit grid (sorted and deduplicated).
PDPCurve pdp(const ProbFn& model, const Dataset& ds, const std::string& feature,
             std::vector<double> grid);

/// Grid from evenly spaced quantiles of the observed feature values.
PDPCurve pdp_quantile(const ProbFn& model, const Dataset& ds, const std::string& feature,
                      int n_points = 50);

}  // namespace spatter
