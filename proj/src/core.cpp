#include "gaboost/core.hpp"

#include <stdexcept>
#include <string>

namespace gaboost {

Dataset::Dataset(int window_w, int window_h, std::vector<Sample> samples)
    : window_w_(window_w), window_h_(window_h), samples_(std::move(samples)) {
    if (window_w_ < 1 || window_h_ < 1) {
        throw std::invalid_argument("dataset window must be at least 1x1");
    }
    if (samples_.empty()) {
        throw std::invalid_argument("dataset is empty");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        if (s.width != window_w_ || s.height != window_h_ ||
            s.pixels.size() != static_cast<std::size_t>(window_w_) * window_h_) {
            throw std::invalid_argument("sample " + std::to_string(i) + " does not match the " +
                                        std::to_string(window_w_) + "x" + std::to_string(window_h_) +
                                        " window");
        }
        if (!is_valid_label(s.label)) {
            throw std::invalid_argument("sample " + std::to_string(i) + " has label " +
                                        std::to_string(s.label) + ", expected -1 or +1");
        }
    }
}

std::vector<Label> Dataset::labels() const {
    std::vector<Label> out;
    out.reserve(samples_.size());
    for (const Sample& s : samples_) out.push_back(s.label);
    return out;
}

void Dataset::require_both_labels() const {
    bool pos = false;
    bool neg = false;
    for (const Sample& s : samples_) {
        pos = pos || s.label == kPositive;
        neg = neg || s.label == kNegative;
    }
    if (!pos || !neg) {
        throw std::invalid_argument("training data needs at least one sample of each label");
    }
}

Dataset Dataset::slice(std::size_t first, std::size_t count) const {
    if (first + count > samples_.size()) {
        throw std::out_of_range("dataset slice out of range");
    }
    std::vector<Sample> part(samples_.begin() + static_cast<std::ptrdiff_t>(first),
                             samples_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return Dataset(window_w_, window_h_, std::move(part));
}

bool is_valid_label(int value) { return value == kPositive || value == kNegative; }

std::vector<double> normalize_weights(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("negative weight");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("degenerate weights");

    std::vector<double> out(weights.begin(), weights.end());
    for (double& w : out) w /= total;
    return out;
}

std::vector<double> uniform_weights(std::size_t count) {
    if (count == 0) throw std::invalid_argument("degenerate weights");
    return std::vector<double>(count, 1.0 / static_cast<double>(count));
}

double weighted_error(std::span<const Label> predictions,
                      std::span<const Label> labels,
                      std::span<const double> weights) {
    if (predictions.size() != labels.size() || labels.size() != weights.size()) {
        throw std::invalid_argument("weighted_error: length mismatch");
    }
    double err = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (predictions[i] != labels[i]) err += weights[i];
    }
    return err;
}

}  // namespace gaboost
