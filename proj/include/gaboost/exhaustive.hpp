#pragma once

#include <cstdint>
#include <span>

#include "gaboost/haar.hpp"
#include "gaboost/weak.hpp"

namespace gaboost {

struct ExhaustiveResult {
    WeakClassifier weak;
    double error = 0.0;
    std::uint64_t candidates_evaluated = 0;
};

/// Number of (type, geometry) candidates in a window: sum over types of enumerate_geometries.
std::uint64_t candidate_count(int window_w, int window_h);

/// Scores every geometry of every feature type with an optimal stump and returns
/// the minimum weighted error classifier. Ties go to the lower type index, then
/// the earlier enumeration position. Feature values are recomputed per candidate.
ExhaustiveResult exhaustive_weak_learner(const IntegralDataset& data,
                                         std::span<const double> weights,
                                         bool parallel = false);

class ExhaustiveLearner : public WeakLearner {
public:
    explicit ExhaustiveLearner(bool parallel = false) : parallel_(parallel) {}

    WeakLearnerResult learn(const IntegralDataset& data, std::span<const double> weights,
                            int round) override;

private:
    bool parallel_;
};

}  // namespace gaboost
