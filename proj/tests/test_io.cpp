#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gaboost/boost.hpp"
#include "gaboost/dataset_io.hpp"
#include "gaboost/exhaustive.hpp"
#include "gaboost/model_io.hpp"
#include "gaboost/pgm.hpp"
#include "oracles.hpp"

using namespace gaboost;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gaboost_test_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("pgm round trip and header parsing") {
    const fs::path dir = scratch("pgm");
    GrayImage img{3, 2, {0, 1, 2, 253, 254, 255}};
    write_pgm(dir / "a.pgm", img);
    CHECK(slurp(dir / "a.pgm").substr(0, 11) == "P5\n3 2\n255\n");
    const GrayImage back = read_pgm(dir / "a.pgm");
    CHECK(back.width == 3);
    CHECK(back.height == 2);
    CHECK(back.pixels == img.pixels);

    const GrayImage commented = parse_pgm(std::string("P5 # hi\n2 1\n# more\n255\n") + "\x07\x09");
    CHECK(commented.pixels == std::vector<std::uint8_t>{7, 9});

    CHECK_THROWS(parse_pgm("P2\n1 1\n255\n0"));
    CHECK_THROWS(parse_pgm("P5\n2 2\n255\n\x01"));
    CHECK_THROWS(parse_pgm("P5\n2 2\n65535\n"));
    CHECK_THROWS(read_pgm(dir / "missing.pgm"));
}

TEST_CASE("load_dataset") {
    const fs::path dir = scratch("manifest");
    fs::create_directories(dir / "img");
    write_pgm(dir / "img/a.pgm", {24, 24, std::vector<std::uint8_t>(576, 1)});
    write_pgm(dir / "img/b.pgm", {24, 24, std::vector<std::uint8_t>(576, 2)});
    write_pgm(dir / "img/c.pgm", {23, 24, std::vector<std::uint8_t>(552, 3)});

    write_text(dir / "one.txt", "img/a.pgm +1\n");
    const Dataset one = load_dataset(dir / "one.txt");
    REQUIRE(one.size() == 1);
    CHECK(one[0].label == 1);
    CHECK(one.window_w() == 24);

    write_text(dir / "mixed.txt", "# comment\nimg/a.pgm 1\n\nimg/b.pgm 0\nimg/b.pgm -1\n");
    const Dataset mixed = load_dataset(dir / "mixed.txt");
    CHECK(mixed.labels() == std::vector<Label>{1, -1, -1});
    CHECK(mixed[1].pixels[0] == 2);

    write_text(dir / "empty.txt", "");
    CHECK_THROWS_WITH(load_dataset(dir / "empty.txt"), "empty manifest");

    write_text(dir / "dims.txt", "img/a.pgm +1\nimg/c.pgm -1\n");
    try {
        load_dataset(dir / "dims.txt");
        FAIL("expected an error");
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        CHECK(msg.find("img/c.pgm") != std::string::npos);
        CHECK(msg.find(":2:") != std::string::npos);
    }

    write_text(dir / "label.txt", "img/a.pgm +1\nimg/b.pgm yes\n");
    CHECK_THROWS_WITH(load_dataset(dir / "label.txt"), doctest::Contains(":2:"));
    write_text(dir / "missing.txt", "img/zzz.pgm +1\n");
    CHECK_THROWS_WITH(load_dataset(dir / "missing.txt"), doctest::Contains(":1:"));
    write_text(dir / "fields.txt", "img/a.pgm\n");
    CHECK_THROWS(load_dataset(dir / "fields.txt"));
    CHECK_THROWS(load_dataset(dir / "nope.txt"));
}

TEST_CASE("gen_data") {
    const fs::path dir = scratch("gen");
    const fs::path m = gen_data(dir / "a", {10, 16, 3, 0.5});
    const Dataset d = load_dataset(m);
    CHECK(d.size() == 10);
    int pos = 0;
    for (const auto& s : d.samples()) pos += s.label == 1;
    CHECK(pos == 5);

    gen_data(dir / "b", {10, 16, 3, 0.5});
    CHECK(slurp(dir / "a/manifest.txt") == slurp(dir / "b/manifest.txt"));
    for (int i = 0; i < 10; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "img/%06d.pgm", i);
        CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
    }

    gen_data(dir / "c", {10, 16, 4, 0.5});
    CHECK(slurp(dir / "a/img/000000.pgm") != slurp(dir / "c/img/000000.pgm"));

    CHECK_THROWS(generate_synthetic({1, 16, 0, 0.5}));
    CHECK_THROWS(generate_synthetic({10, 7, 0, 0.5}));
    CHECK_THROWS(generate_synthetic({10, 16, 0, 1.5}));

    write_text(dir / "file", "x");
    CHECK_THROWS(gen_data(dir / "file" / "sub", {10, 16, 0, 0.5}));
}

TEST_CASE("difficulty 0 is separable by one EdgeH classifier") {
    for (int window : {8, 11, 16, 24}) {
        const Dataset d = generate_synthetic({60, window, 1234, 0.0});
        const IntegralDataset ii = integrate(d);
        const auto r = exhaustive_weak_learner(ii, uniform_weights(ii.size()));
        CHECK(r.error == 0.0);
        // the full-window EdgeH feature is one such separator
        const HaarGeometry full{0, 0, 2 * (window / 2), window};
        std::vector<double> v;
        feature_values(ii, full, HaarType::EdgeH, v);
        CHECK(learn_stump(v, ii.labels, uniform_weights(ii.size())).error == 0.0);
    }
}

TEST_CASE("model save/load") {
    const fs::path dir = scratch("model");
    std::mt19937_64 rng(21);
    StrongClassifier model{12, 10, {}};
    std::uniform_real_distribution<double> real(-1e4, 1e4);
    for (int k = 0; k < 9; ++k) {
        const HaarType t = kAllHaarTypes[k % 5];
        const auto geoms = enumerate_geometries(t, 12, 10);
        model.stages.push_back(
            {std::abs(real(rng)) / 7.0 + 1e-3, {geoms[rng() % geoms.size()], t, k % 2 ? 1 : -1, real(rng) / 3.0}});
    }
    save_model(model, dir / "m.json");
    const StrongClassifier back = load_model(dir / "m.json");
    REQUIRE(back.stages.size() == model.stages.size());
    for (std::size_t i = 0; i < model.stages.size(); ++i) {
        CHECK(back.stages[i].alpha == model.stages[i].alpha);
        CHECK(back.stages[i].weak.threshold == model.stages[i].weak.threshold);
        CHECK(back.stages[i].weak.geometry == model.stages[i].weak.geometry);
        CHECK(back.stages[i].weak.type == model.stages[i].weak.type);
        CHECK(back.stages[i].weak.polarity == model.stages[i].weak.polarity);
    }
    CHECK(model_to_string(back) == slurp(dir / "m.json"));

    std::vector<Sample> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(oracle::random_sample(rng, 12, 10, i % 2 ? 1 : -1));
    const IntegralDataset ii = integrate(Dataset(12, 10, samples));
    CHECK(strong_predict_all(model, ii) == strong_predict_all(back, ii));

    const std::string text = model_to_string(model);
    CHECK(text.find("\"window_w\"") < text.find("\"window_h\""));
    CHECK(text.find("\"alpha\"") < text.find("\"threshold\""));
}

TEST_CASE("model loading validates classifiers") {
    const std::string good =
        R"({"window_w":4,"window_h":4,"stages":[{"alpha":0.5,"x":0,"y":0,"w":2,"h":2,"type":"Checker","polarity":1,"threshold":0.5}]})";
    CHECK_NOTHROW(model_from_string(good));
    auto with = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    CHECK_THROWS(model_from_string(with("\"w\":2", "\"w\":3")));
    CHECK_THROWS(model_from_string(with("\"x\":0", "\"x\":3")));
    CHECK_THROWS(model_from_string(with("\"polarity\":1", "\"polarity\":0")));
    CHECK_THROWS(model_from_string(with("\"alpha\":0.5", "\"alpha\":-0.5")));
    CHECK_THROWS(model_from_string(with("Checker", "Diagonal")));
    CHECK_THROWS(model_from_string(with("\"threshold\":0.5", "\"thresh\":0.5")));
    CHECK_THROWS(model_from_string("{not json"));
    CHECK_THROWS(model_from_string(R"({"window_w":4,"window_h":4,"stages":[]})"));
}
