#pragma once

#include <cstdint>
#include <filesystem>

#include "gaboost/core.hpp"

namespace gaboost {

inline constexpr const char* kManifestName = "manifest.txt";

/// Reads a manifest of "<relative-path> <label>" lines. Paths are relative to the
/// manifest's directory; labels are +1/-1 (1/0 are accepted and mapped to +1/-1).
/// Blank lines and lines starting with '#' are ignored.
Dataset load_dataset(const std::filesystem::path& manifest);

/// Writes img/NNNNNN.pgm files plus a manifest into `out_dir`; returns the manifest path.
std::filesystem::path write_dataset(const Dataset& data, const std::filesystem::path& out_dir);

struct SynthOptions {
    int count = 1000;
    int window = 24;
    std::uint64_t seed = 0;
    double difficulty = 0.5;  // noise amplitude, in [0, 1]
};

/// Balanced synthetic set, labels alternating +1, -1, +1, ...
///
/// Every image is mid-gray plus uniform noise. Positives additionally carry a
/// dark-left / bright-right block of random size (at least window/4 per side)
/// straddling the vertical centre line, so at difficulty 0 the full-window
/// EdgeH feature alone separates the classes.
Dataset generate_synthetic(const SynthOptions& opts);

/// generate_synthetic followed by write_dataset.
std::filesystem::path gen_data(const std::filesystem::path& out_dir, const SynthOptions& opts);

}  // namespace gaboost
