#include "gaboost/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaboost {
namespace {

class HeaderReader {
public:
    explicit HeaderReader(const std::string& bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto ch = static_cast<unsigned char>(bytes_[pos_]);
            if (std::isspace(ch)) {
                ++pos_;
            } else if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    int read_int() {
        skip_space_and_comments();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000) throw std::runtime_error("pgm: header value too large");
            ++pos_;
        }
        if (pos_ == start) throw std::runtime_error("pgm: malformed header");
        return static_cast<int>(value);
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    const std::string& bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw std::runtime_error("pgm: not a binary P5 file");
    }
    HeaderReader in(bytes);
    in.advance(2);
    GrayImage img;
    img.width = in.read_int();
    img.height = in.read_int();
    const int maxval = in.read_int();
    if (img.width < 1 || img.height < 1) throw std::runtime_error("pgm: empty image");
    if (maxval < 1 || maxval > 255) throw std::runtime_error("pgm: only 8-bit maxval is supported");

    // exactly one whitespace byte separates the header from the raster
    const std::size_t data = in.pos() + 1;
    const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    if (data > bytes.size() || bytes.size() - data < count) throw std::runtime_error("pgm: truncated raster");
    img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(data),
                      bytes.begin() + static_cast<std::ptrdiff_t>(data + count));
    if (maxval != 255) {
        for (auto& p : img.pixels) {
            p = static_cast<std::uint8_t>(std::min<int>(p, maxval) * 255 / maxval);
        }
    }
    return img;
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_pgm(buf.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
    if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
        throw std::invalid_argument("write_pgm: pixel count does not match dimensions");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace gaboost
