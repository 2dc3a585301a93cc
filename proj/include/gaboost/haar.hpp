#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gaboost/core.hpp"

namespace gaboost {

/// 2-D prefix-sum table with a zero border row and column.
/// at(x, y) is the sum of pixels[i][j] over i < x, j < y.
class IntegralImage {
public:
    IntegralImage() = default;
    explicit IntegralImage(const Sample& sample);

    int width() const { return width_; }
    int height() const { return height_; }

    std::int64_t at(int x, int y) const {
        return table_[static_cast<std::size_t>(y) * (width_ + 1) + x];
    }

    /// Sum over the half-open rectangle [x0, x1) x [y0, y1).
    std::int64_t rect_sum(int x0, int y0, int x1, int y1) const {
        return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::int64_t> table_;
};

IntegralImage compute_integral(const Sample& sample);

enum class HaarType : int { EdgeH = 0, EdgeV = 1, LineH = 2, LineV = 3, Checker = 4 };

inline constexpr int kHaarTypeCount = 5;
inline constexpr std::array<HaarType, kHaarTypeCount> kAllHaarTypes = {
    HaarType::EdgeH, HaarType::EdgeV, HaarType::LineH, HaarType::LineV, HaarType::Checker};

/// Width and height must be multiples of these.
struct HaarDivisors {
    int w;
    int h;
};

constexpr HaarDivisors divisors(HaarType t) {
    switch (t) {
        case HaarType::EdgeH: return {2, 1};
        case HaarType::EdgeV: return {1, 2};
        case HaarType::LineH: return {3, 1};
        case HaarType::LineV: return {1, 3};
        case HaarType::Checker: return {2, 2};
    }
    return {1, 1};
}

constexpr int type_index(HaarType t) { return static_cast<int>(t); }

std::string_view type_name(HaarType t);
std::optional<HaarType> parse_type_name(std::string_view name);

struct HaarGeometry {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    friend bool operator==(const HaarGeometry&, const HaarGeometry&) = default;
    friend auto operator<=>(const HaarGeometry&, const HaarGeometry&) = default;
};

bool is_valid_geometry(const HaarGeometry& g, HaarType t, int window_w, int window_h);

/// Feature response; throws std::invalid_argument if the geometry does not fit the image.
double haar_value(const IntegralImage& ii, const HaarGeometry& g, HaarType t);

/// Unchecked variant for hot loops; caller guarantees validity.
std::int64_t haar_value_unchecked(const IntegralImage& ii, const HaarGeometry& g, HaarType t);

/// All valid geometries for a type, ordered by (y, x, height, width).
std::vector<HaarGeometry> enumerate_geometries(HaarType t, int window_w, int window_h);

/// Integral images of a dataset, precomputed once for training.
struct IntegralDataset {
    int window_w = 0;
    int window_h = 0;
    std::vector<IntegralImage> images;
    std::vector<Label> labels;

    std::size_t size() const { return images.size(); }
};

IntegralDataset integrate(const Dataset& data);

/// Feature value of one geometry on every sample, written into `out`.
void feature_values(const IntegralDataset& data, const HaarGeometry& g, HaarType t,
                    std::vector<double>& out);

}  // namespace gaboost
