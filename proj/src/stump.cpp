#include "gaboost/stump.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gaboost {
namespace {

// Prefix-sum errors carry O(n * ulp) rounding; candidates closer than this are
// treated as tied so the documented tie order decides, not rounding noise.
constexpr double kTieTolerance = 1e-12;

}  // namespace

StumpFit learn_stump(std::span<const double> values,
                     std::span<const Label> labels,
                     std::span<const double> weights) {
    StumpLearner learner;
    return learner.fit(values, labels, weights);
}

StumpFit StumpLearner::fit(std::span<const double> values,
                           std::span<const Label> labels,
                           std::span<const double> weights) {
    const std::size_t n = values.size();
    if (labels.size() != n || weights.size() != n) {
        throw std::invalid_argument("learn_stump: length mismatch");
    }
    if (n == 0) throw std::invalid_argument("learn_stump: empty input");

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    double total_pos = 0.0;
    double total_neg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        (labels[i] > 0 ? total_pos : total_neg) += weights[i];
    }

    // Samples at or below the threshold are predicted -polarity.
    double below_pos = 0.0;
    double below_neg = 0.0;
    StumpParams best{+1, values[order_.front()] - 1.0};
    double best_err = 2.0;

    auto consider = [&](double threshold) {
        const double err_plus = below_pos + (total_neg - below_neg);
        const double err_minus = below_neg + (total_pos - below_pos);
        if (err_plus < best_err - kTieTolerance) {
            best_err = err_plus;
            best = {+1, threshold};
        }
        if (err_minus < best_err - kTieTolerance) {
            best_err = err_minus;
            best = {-1, threshold};
        }
    };

    consider(values[order_.front()] - 1.0);
    std::size_t i = 0;
    while (i < n) {
        const double v = values[order_[i]];
        while (i < n && values[order_[i]] == v) {
            const std::size_t k = order_[i];
            (labels[k] > 0 ? below_pos : below_neg) += weights[k];
            ++i;
        }
        const double threshold = i < n ? (v + values[order_[i]]) / 2.0 : v + 1.0;
        consider(threshold);
    }

    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (stump_predict(values[k], best) != labels[k]) err += weights[k];
    }
    return {best, err};
}

}  // namespace gaboost
