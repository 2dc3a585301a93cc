#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gaboost {

/// Class labels are always stored as -1 / +1.
using Label = int;

inline constexpr Label kPositive = +1;
inline constexpr Label kNegative = -1;

/// A fixed-size grayscale window with its class label.
/// Pixels are row-major: pixel (x, y) lives at pixels[y * width + x].
struct Sample {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
    Label label = kPositive;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Ordered collection of samples sharing one window size.
class Dataset {
public:
    Dataset() = default;
    Dataset(int window_w, int window_h, std::vector<Sample> samples);

    int window_w() const { return window_w_; }
    int window_h() const { return window_h_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    const std::vector<Sample>& samples() const { return samples_; }
    const Sample& operator[](std::size_t i) const { return samples_[i]; }

    std::vector<Label> labels() const;

    /// Throws unless both labels occur at least once.
    void require_both_labels() const;

    /// Samples [first, first + count) as a new dataset.
    Dataset slice(std::size_t first, std::size_t count) const;

private:
    int window_w_ = 0;
    int window_h_ = 0;
    std::vector<Sample> samples_;
};

bool is_valid_label(int value);

/// Rescales so entries sum to one. Throws "degenerate weights" when no entry is positive.
std::vector<double> normalize_weights(std::span<const double> weights);

std::vector<double> uniform_weights(std::size_t count);

/// Sum of weights over indices where prediction and label disagree.
double weighted_error(std::span<const Label> predictions,
                      std::span<const Label> labels,
                      std::span<const double> weights);

}  // namespace gaboost
