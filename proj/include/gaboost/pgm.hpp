#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace gaboost {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major
};

/// Binary PGM (P5). Maxval up to 255; comments in the header are skipped.
GrayImage read_pgm(const std::filesystem::path& path);
GrayImage parse_pgm(const std::string& bytes);

/// Writes "P5\n<w> <h>\n255\n" followed by the raw pixels.
void write_pgm(const std::filesystem::path& path, const GrayImage& image);

}  // namespace gaboost
