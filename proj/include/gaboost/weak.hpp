#pragma once

#include <cstdint>
#include <span>

#include "gaboost/haar.hpp"
#include "gaboost/stump.hpp"

namespace gaboost {

/// Haar-feature decision stump: geometry, type, polarity g and threshold t.
struct WeakClassifier {
    HaarGeometry geometry;
    HaarType type = HaarType::EdgeH;
    int polarity = +1;
    double threshold = 0.0;

    StumpParams stump() const { return {polarity, threshold}; }
};

/// Throws std::invalid_argument when the classifier is not usable in the given window.
void validate(const WeakClassifier& wk, int window_w, int window_h);

Label weak_predict(const WeakClassifier& wk, const IntegralImage& ii);

/// Predictions over a whole dataset.
std::vector<Label> weak_predict_all(const WeakClassifier& wk, const IntegralDataset& data);

struct WeakLearnerResult {
    WeakClassifier weak;
    double error = 0.0;             // weighted error on the training weights
    std::uint64_t evaluations = 0;  // candidates or fitness evaluations spent
};

/// One boosting round's weak learner.
class WeakLearner {
public:
    virtual ~WeakLearner() = default;

    /// `round` is 1-based and lets stochastic learners draw a fresh stream per round.
    virtual WeakLearnerResult learn(const IntegralDataset& data, std::span<const double> weights,
                                    int round) = 0;
};

}  // namespace gaboost
