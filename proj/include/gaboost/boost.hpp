#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gaboost/core.hpp"
#include "gaboost/haar.hpp"
#include "gaboost/weak.hpp"

namespace gaboost {

struct Stage {
    double alpha = 1.0;
    WeakClassifier weak;
};

/// s(y) = sign(sum_i alpha_i * w_i(y)).
struct StrongClassifier {
    int window_w = 0;
    int window_h = 0;
    std::vector<Stage> stages;

    /// Throws std::invalid_argument if any stage violates its invariants.
    void validate() const;
};

/// Sign of the weighted vote; an exactly zero sum predicts +1.
Label strong_predict(const StrongClassifier& s, const IntegralImage& ii);

std::vector<Label> strong_predict_all(const StrongClassifier& s, const IntegralDataset& data);

/// Unweighted fraction of misclassified samples.
double classification_error(const StrongClassifier& s, const IntegralDataset& data);
double classification_error(const StrongClassifier& s, const Dataset& data);

/// Weighted errors are clamped into [kEpsilonFloor, 0.5 - kEpsilonFloor] before computing alpha.
inline constexpr double kEpsilonFloor = 1e-10;

/// alpha = 0.5 * ln((1 - eps) / eps) with eps clamped.
double stage_alpha(double epsilon);

struct RoundInfo {
    int round = 0;            // 1-based
    double epsilon = 0.0;     // weighted error before clamping
    double alpha = 0.0;
    double seconds = 0.0;     // wall time of the whole round
    std::uint64_t evaluations = 0;
    bool zero_error = false;  // round produced a perfect classifier and ended training
};

using RoundObserver = std::function<void(const RoundInfo&)>;

/// Discrete AdaBoost: uniform initial weights, alpha from the weighted error,
/// multiplicative exponential reweighting, renormalization after each round.
/// A zero-error weak classifier ends training and becomes the whole model.
StrongClassifier adaboost_train(const IntegralDataset& data, WeakLearner& learner, int rounds,
                                const RoundObserver& observer = {});

}  // namespace gaboost
