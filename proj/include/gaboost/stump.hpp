#pragma once

#include <span>
#include <vector>

#include "gaboost/core.hpp"

namespace gaboost {

struct StumpParams {
    int polarity = +1;
    double threshold = 0.0;
};

/// polarity if value > threshold, otherwise -polarity.
inline Label stump_predict(double value, const StumpParams& p) {
    return value > p.threshold ? p.polarity : -p.polarity;
}

struct StumpFit {
    StumpParams params;
    double error = 0.0;
};

/// Weighted-optimal polarity and threshold for one feature.
///
/// Candidate thresholds are min-1, the midpoints between consecutive distinct
/// sorted values, and max+1. Among equal-error candidates the smallest threshold
/// wins, then polarity +1. The reported error is recomputed directly from the
/// chosen stump's predictions, so it is bit-identical to weighted_error().
/// O(n log n).
StumpFit learn_stump(std::span<const double> values,
                     std::span<const Label> labels,
                     std::span<const double> weights);

/// Reusable scratch space for hot loops calling learn_stump repeatedly.
class StumpLearner {
public:
    StumpFit fit(std::span<const double> values,
                 std::span<const Label> labels,
                 std::span<const double> weights);

private:
    std::vector<std::size_t> order_;
};

}  // namespace gaboost
