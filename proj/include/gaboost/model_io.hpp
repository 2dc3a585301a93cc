#pragma once

#include <filesystem>
#include <string>

#include "gaboost/boost.hpp"

namespace gaboost {

/// JSON text: {"window_w", "window_h", "stages": [{"alpha", "x", "y", "w", "h",
/// "type", "polarity", "threshold"}, ...]} with fields in that order.
/// Reals are written in shortest round-trip form, so save/load is lossless.
std::string model_to_string(const StrongClassifier& model);

/// Parses and validates a model document.
StrongClassifier model_from_string(const std::string& text);

void save_model(const StrongClassifier& model, const std::filesystem::path& path);
StrongClassifier load_model(const std::filesystem::path& path);

}  // namespace gaboost
