#include "gaboost/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gaboost {

using json = nlohmann::ordered_json;

std::string model_to_string(const StrongClassifier& model) {
    model.validate();
    json doc;
    doc["window_w"] = model.window_w;
    doc["window_h"] = model.window_h;
    json stages = json::array();
    for (const Stage& st : model.stages) {
        json s;
        s["alpha"] = st.alpha;
        s["x"] = st.weak.geometry.x;
        s["y"] = st.weak.geometry.y;
        s["w"] = st.weak.geometry.width;
        s["h"] = st.weak.geometry.height;
        s["type"] = std::string(type_name(st.weak.type));
        s["polarity"] = st.weak.polarity;
        s["threshold"] = st.weak.threshold;
        stages.push_back(std::move(s));
    }
    doc["stages"] = std::move(stages);
    return doc.dump(2) + "\n";
}

StrongClassifier model_from_string(const std::string& text) {
    StrongClassifier model;
    try {
        const json doc = json::parse(text);
        model.window_w = doc.at("window_w").get<int>();
        model.window_h = doc.at("window_h").get<int>();
        for (const json& s : doc.at("stages")) {
            Stage st;
            st.alpha = s.at("alpha").get<double>();
            st.weak.geometry = {s.at("x").get<int>(), s.at("y").get<int>(), s.at("w").get<int>(),
                                s.at("h").get<int>()};
            const auto name = s.at("type").get<std::string>();
            const auto type = parse_type_name(name);
            if (!type) throw std::invalid_argument("unknown feature type '" + name + "'");
            st.weak.type = *type;
            st.weak.polarity = s.at("polarity").get<int>();
            st.weak.threshold = s.at("threshold").get<double>();
            model.stages.push_back(st);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed model: ") + e.what());
    }
    model.validate();
    return model;
}

void save_model(const StrongClassifier& model, const std::filesystem::path& path) {
    const std::string text = model_to_string(model);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

StrongClassifier load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return model_from_string(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace gaboost
