#include "gaboost/haar.hpp"

#include <stdexcept>
#include <string>

namespace gaboost {

IntegralImage::IntegralImage(const Sample& sample)
    : width_(sample.width),
      height_(sample.height),
      table_(static_cast<std::size_t>(sample.width + 1) * (sample.height + 1), 0) {
    const std::size_t stride = static_cast<std::size_t>(width_) + 1;
    for (int y = 0; y < height_; ++y) {
        std::int64_t row = 0;
        for (int x = 0; x < width_; ++x) {
            row += sample.at(x, y);
            table_[(y + 1) * stride + (x + 1)] = table_[y * stride + (x + 1)] + row;
        }
    }
}

IntegralImage compute_integral(const Sample& sample) { return IntegralImage(sample); }

std::string_view type_name(HaarType t) {
    switch (t) {
        case HaarType::EdgeH: return "EdgeH";
        case HaarType::EdgeV: return "EdgeV";
        case HaarType::LineH: return "LineH";
        case HaarType::LineV: return "LineV";
        case HaarType::Checker: return "Checker";
    }
    return "?";
}

std::optional<HaarType> parse_type_name(std::string_view name) {
    for (HaarType t : kAllHaarTypes) {
        if (type_name(t) == name) return t;
    }
    return std::nullopt;
}

bool is_valid_geometry(const HaarGeometry& g, HaarType t, int window_w, int window_h) {
    const HaarDivisors d = divisors(t);
    if (g.x < 0 || g.y < 0) return false;
    if (g.width < d.w || g.height < d.h) return false;
    if (g.width % d.w != 0 || g.height % d.h != 0) return false;
    // written as subtractions so extreme ints cannot overflow
    return g.x <= window_w - g.width && g.y <= window_h - g.height;
}

std::int64_t haar_value_unchecked(const IntegralImage& ii, const HaarGeometry& g, HaarType t) {
    const int x0 = g.x;
    const int y0 = g.y;
    const int x1 = g.x + g.width;
    const int y1 = g.y + g.height;
    switch (t) {
        case HaarType::EdgeH: {
            const int xm = x0 + g.width / 2;
            return ii.rect_sum(x0, y0, xm, y1) - ii.rect_sum(xm, y0, x1, y1);
        }
        case HaarType::EdgeV: {
            const int ym = y0 + g.height / 2;
            return ii.rect_sum(x0, y0, x1, ym) - ii.rect_sum(x0, ym, x1, y1);
        }
        case HaarType::LineH: {
            const int third = g.width / 3;
            const int xa = x0 + third;
            const int xb = xa + third;
            return ii.rect_sum(x0, y0, xa, y1) + ii.rect_sum(xb, y0, x1, y1) -
                   2 * ii.rect_sum(xa, y0, xb, y1);
        }
        case HaarType::LineV: {
            const int third = g.height / 3;
            const int ya = y0 + third;
            const int yb = ya + third;
            return ii.rect_sum(x0, y0, x1, ya) + ii.rect_sum(x0, yb, x1, y1) -
                   2 * ii.rect_sum(x0, ya, x1, yb);
        }
        case HaarType::Checker: {
            const int xm = x0 + g.width / 2;
            const int ym = y0 + g.height / 2;
            return ii.rect_sum(x0, y0, xm, ym) + ii.rect_sum(xm, ym, x1, y1) -
                   ii.rect_sum(xm, y0, x1, ym) - ii.rect_sum(x0, ym, xm, y1);
        }
    }
    return 0;
}

double haar_value(const IntegralImage& ii, const HaarGeometry& g, HaarType t) {
    if (!is_valid_geometry(g, t, ii.width(), ii.height())) {
        throw std::invalid_argument("invalid " + std::string(type_name(t)) + " geometry (" +
                                    std::to_string(g.x) + "," + std::to_string(g.y) + "," +
                                    std::to_string(g.width) + "," + std::to_string(g.height) + ")");
    }
    return static_cast<double>(haar_value_unchecked(ii, g, t));
}

std::vector<HaarGeometry> enumerate_geometries(HaarType t, int window_w, int window_h) {
    const HaarDivisors d = divisors(t);
    std::vector<HaarGeometry> out;
    for (int y = 0; y < window_h; ++y) {
        for (int x = 0; x < window_w; ++x) {
            for (int h = d.h; y + h <= window_h; h += d.h) {
                for (int w = d.w; x + w <= window_w; w += d.w) {
                    out.push_back({x, y, w, h});
                }
            }
        }
    }
    return out;
}

IntegralDataset integrate(const Dataset& data) {
    IntegralDataset out;
    out.window_w = data.window_w();
    out.window_h = data.window_h();
    out.images.reserve(data.size());
    out.labels.reserve(data.size());
    for (const Sample& s : data.samples()) {
        out.images.emplace_back(s);
        out.labels.push_back(s.label);
    }
    return out;
}

void feature_values(const IntegralDataset& data, const HaarGeometry& g, HaarType t,
                    std::vector<double>& out) {
    if (!is_valid_geometry(g, t, data.window_w, data.window_h)) {
        throw std::invalid_argument("feature_values: invalid geometry for window");
    }
    out.resize(data.images.size());
    for (std::size_t i = 0; i < data.images.size(); ++i) {
        out[i] = static_cast<double>(haar_value_unchecked(data.images[i], g, t));
    }
}

}  // namespace gaboost
