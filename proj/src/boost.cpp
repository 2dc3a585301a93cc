#include "gaboost/boost.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gaboost {

void StrongClassifier::validate() const {
    if (window_w < 1 || window_h < 1) throw std::invalid_argument("model window must be at least 1x1");
    if (stages.empty()) throw std::invalid_argument("model has no stages");
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (!(stages[i].alpha > 0.0) || !std::isfinite(stages[i].alpha)) {
            throw std::invalid_argument("stage " + std::to_string(i) + ": alpha must be positive");
        }
        if (!std::isfinite(stages[i].weak.threshold)) {
            throw std::invalid_argument("stage " + std::to_string(i) + ": threshold must be finite");
        }
        gaboost::validate(stages[i].weak, window_w, window_h);
    }
}

namespace {

void require_window(const StrongClassifier& s, int w, int h) {
    if (s.window_w != w || s.window_h != h) {
        throw std::invalid_argument("model window " + std::to_string(s.window_w) + "x" +
                                    std::to_string(s.window_h) + " does not match data window " +
                                    std::to_string(w) + "x" + std::to_string(h));
    }
}

}  // namespace

Label strong_predict(const StrongClassifier& s, const IntegralImage& ii) {
    require_window(s, ii.width(), ii.height());
    double vote = 0.0;
    for (const Stage& st : s.stages) vote += st.alpha * weak_predict(st.weak, ii);
    return vote >= 0.0 ? kPositive : kNegative;
}

std::vector<Label> strong_predict_all(const StrongClassifier& s, const IntegralDataset& data) {
    require_window(s, data.window_w, data.window_h);
    std::vector<double> votes(data.size(), 0.0);
    for (const Stage& st : s.stages) {
        const std::vector<Label> p = weak_predict_all(st.weak, data);
        for (std::size_t i = 0; i < p.size(); ++i) votes[i] += st.alpha * p[i];
    }
    std::vector<Label> out(data.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = votes[i] >= 0.0 ? kPositive : kNegative;
    return out;
}

double classification_error(const StrongClassifier& s, const IntegralDataset& data) {
    if (data.size() == 0) throw std::invalid_argument("classification_error: empty dataset");
    const std::vector<Label> pred = strong_predict_all(s, data);
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) wrong += pred[i] != data.labels[i] ? 1 : 0;
    return static_cast<double>(wrong) / static_cast<double>(pred.size());
}

double classification_error(const StrongClassifier& s, const Dataset& data) {
    require_window(s, data.window_w(), data.window_h());
    return classification_error(s, integrate(data));
}

double stage_alpha(double epsilon) {
    const double eps = std::clamp(epsilon, kEpsilonFloor, 0.5 - kEpsilonFloor);
    return 0.5 * std::log((1.0 - eps) / eps);
}

StrongClassifier adaboost_train(const IntegralDataset& data, WeakLearner& learner, int rounds,
                                const RoundObserver& observer) {
    if (rounds < 1) throw std::invalid_argument("round count must be > 0");
    if (data.size() == 0) throw std::invalid_argument("training data is empty");
    const bool has_pos = std::find(data.labels.begin(), data.labels.end(), kPositive) != data.labels.end();
    const bool has_neg = std::find(data.labels.begin(), data.labels.end(), kNegative) != data.labels.end();
    if (!has_pos || !has_neg) {
        throw std::invalid_argument("training data needs at least one sample of each label");
    }

    using Clock = std::chrono::steady_clock;
    StrongClassifier model{data.window_w, data.window_h, {}};
    std::vector<double> weights = uniform_weights(data.size());

    for (int round = 1; round <= rounds; ++round) {
        const auto start = Clock::now();
        const WeakLearnerResult found = learner.learn(data, weights, round);
        const std::vector<Label> pred = weak_predict_all(found.weak, data);
        const double eps = weighted_error(pred, data.labels, weights);

        RoundInfo info;
        info.round = round;
        info.epsilon = eps;
        info.evaluations = found.evaluations;

        if (eps == 0.0) {
            model.stages.assign(1, Stage{1.0, found.weak});
            info.alpha = 1.0;
            info.zero_error = true;
            info.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            if (observer) observer(info);
            break;
        }
        // stumps never exceed 0.5; the slack absorbs summation rounding
        if (eps > 0.5 + 1e-9) throw std::runtime_error("weak learner not weak");

        const double alpha = stage_alpha(eps);
        for (std::size_t i = 0; i < weights.size(); ++i) {
            weights[i] *= std::exp(-alpha * data.labels[i] * pred[i]);
        }
        weights = normalize_weights(weights);
        model.stages.push_back({alpha, found.weak});

        info.alpha = alpha;
        info.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (observer) observer(info);
    }
    return model;
}

}  // namespace gaboost
