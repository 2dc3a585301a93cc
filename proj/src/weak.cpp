#include "gaboost/weak.hpp"

#include <stdexcept>
#include <string>

namespace gaboost {

void validate(const WeakClassifier& wk, int window_w, int window_h) {
    if (wk.polarity != 1 && wk.polarity != -1) {
        throw std::invalid_argument("weak classifier polarity must be -1 or +1");
    }
    if (!is_valid_geometry(wk.geometry, wk.type, window_w, window_h)) {
        throw std::invalid_argument("weak classifier geometry does not fit the " +
                                    std::to_string(window_w) + "x" + std::to_string(window_h) +
                                    " window");
    }
}

Label weak_predict(const WeakClassifier& wk, const IntegralImage& ii) {
    return stump_predict(haar_value(ii, wk.geometry, wk.type), wk.stump());
}

std::vector<Label> weak_predict_all(const WeakClassifier& wk, const IntegralDataset& data) {
    validate(wk, data.window_w, data.window_h);
    std::vector<Label> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto v = static_cast<double>(haar_value_unchecked(data.images[i], wk.geometry, wk.type));
        out[i] = stump_predict(v, wk.stump());
    }
    return out;
}

}  // namespace gaboost
