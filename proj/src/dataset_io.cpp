#include "gaboost/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gaboost/pgm.hpp"
#include "gaboost/rng.hpp"

namespace fs = std::filesystem;

namespace gaboost {
namespace {

constexpr int kBackground = 128;
constexpr int kContrast = 48;
constexpr int kMaxNoise = 80;
constexpr std::uint64_t kSynthStream = 0x73796e7468ULL;

Label parse_label(const std::string& token) {
    if (token == "+1" || token == "1") return kPositive;
    if (token == "-1" || token == "0") return kNegative;
    throw std::invalid_argument("bad label token '" + token + "'");
}

}  // namespace

Dataset load_dataset(const fs::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open manifest " + manifest.string());
    const fs::path base = manifest.parent_path();

    std::vector<Sample> samples;
    int window_w = 0;
    int window_h = 0;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const std::string where = manifest.string() + ":" + std::to_string(line_no) + ": ";
        std::istringstream fields(line);
        std::string rel;
        std::string label_token;
        if (!(fields >> rel) || rel.front() == '#') continue;
        std::string extra;
        if (!(fields >> label_token) || (fields >> extra)) {
            throw std::runtime_error(where + "expected '<path> <label>'");
        }

        Sample s;
        try {
            s.label = parse_label(label_token);
            const GrayImage img = read_pgm(base / rel);
            s.width = img.width;
            s.height = img.height;
            s.pixels = img.pixels;
        } catch (const std::exception& e) {
            throw std::runtime_error(where + e.what());
        }
        if (samples.empty()) {
            window_w = s.width;
            window_h = s.height;
        } else if (s.width != window_w || s.height != window_h) {
            throw std::runtime_error(where + rel + " is " + std::to_string(s.width) + "x" +
                                     std::to_string(s.height) + ", expected " +
                                     std::to_string(window_w) + "x" + std::to_string(window_h));
        }
        samples.push_back(std::move(s));
    }
    if (samples.empty()) throw std::runtime_error("empty manifest");
    return Dataset(window_w, window_h, std::move(samples));
}

fs::path write_dataset(const Dataset& data, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir / "img", ec);
    if (ec) throw std::runtime_error("cannot create " + (out_dir / "img").string() + ": " + ec.message());

    const fs::path manifest = out_dir / kManifestName;
    std::ofstream out(manifest, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + manifest.string());
    for (std::size_t i = 0; i < data.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "img/%06zu.pgm", i);
        const Sample& s = data[i];
        write_pgm(out_dir / name, GrayImage{s.width, s.height, s.pixels});
        out << name << ' ' << (s.label > 0 ? "+1" : "-1") << '\n';
    }
    if (!out) throw std::runtime_error("cannot write " + manifest.string());
    return manifest;
}

Dataset generate_synthetic(const SynthOptions& opts) {
    if (opts.count < 2) throw std::invalid_argument("count must be >= 2");
    if (opts.window < 8) throw std::invalid_argument("window must be >= 8");
    if (!(opts.difficulty >= 0.0 && opts.difficulty <= 1.0)) {
        throw std::invalid_argument("difficulty must be in [0, 1]");
    }

    const int win = opts.window;
    const int centre = win / 2;
    const int min_side = (win + 3) / 4;
    const int min_width = std::max(2, min_side + (min_side % 2));
    const int noise = static_cast<int>(std::lround(opts.difficulty * kMaxNoise));

    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(opts.count));
    for (int i = 0; i < opts.count; ++i) {
        Engine rng = make_engine(derive_seed(opts.seed, kSynthStream, static_cast<std::uint64_t>(i)));
        auto draw = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

        Sample s;
        s.width = win;
        s.height = win;
        s.label = i % 2 == 0 ? kPositive : kNegative;
        std::vector<int> img(static_cast<std::size_t>(win) * win, kBackground);

        if (s.label == kPositive) {
            // even width inside [0, 2*centre), crossing the centre column boundary
            const int pw = 2 * draw(min_width / 2, centre);
            const int ph = draw(min_side, win);
            const int px = draw(std::max(0, centre - pw + 1), std::min(centre - 1, 2 * centre - pw));
            const int py = draw(0, win - ph);
            for (int y = py; y < py + ph; ++y) {
                for (int x = px; x < px + pw; ++x) {
                    img[static_cast<std::size_t>(y) * win + x] += x < px + pw / 2 ? -kContrast : kContrast;
                }
            }
        }
        s.pixels.resize(img.size());
        for (std::size_t k = 0; k < img.size(); ++k) {
            const int v = img[k] + (noise > 0 ? draw(-noise, noise) : 0);
            s.pixels[k] = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
        }
        samples.push_back(std::move(s));
    }
    return Dataset(win, win, std::move(samples));
}

fs::path gen_data(const fs::path& out_dir, const SynthOptions& opts) {
    return write_dataset(generate_synthetic(opts), out_dir);
}

}  // namespace gaboost
