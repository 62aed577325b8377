#include "sdrforge/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sdrforge/errors.hpp"

namespace sdrforge {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Style style_from_string(const std::string& name) {
    if (name == "drones_only") return Style::drones_only;
    if (name == "drones_birds") return Style::drones_birds;
    if (name == "generic_distractors") return Style::generic_distractors;
    if (name == "realistic_distractors") return Style::realistic_distractors;
    if (name == "random_backgrounds") return Style::random_backgrounds;
    throw ConfigError("style: unknown value '" + name + "'");
}

std::string style_to_string(Style style) {
    switch (style) {
        case Style::drones_only: return "drones_only";
        case Style::drones_birds: return "drones_birds";
        case Style::generic_distractors: return "generic_distractors";
        case Style::realistic_distractors: return "realistic_distractors";
        case Style::random_backgrounds: return "random_backgrounds";
    }
    return "?";
}

void GenerationConfig::validate() const {
    std::vector<std::string> problems;
    if (camera_bound_B <= 0) problems.push_back("camera_bound_B must be > 0");
    if (!(focal_min_mm < focal_max_mm)) {
        problems.push_back("focal_range min must be < max");
    }
    if (focal_min_mm <= 0) problems.push_back("focal_range must be positive");
    if (dataset_size < 1) problems.push_back("dataset_size must be >= 1");
    if (segment_length < 1) problems.push_back("segment_length must be >= 1");
    if (image_width < 1 || image_height < 1) {
        problems.push_back("image dimensions must be >= 1");
    }
    if (drones_min < 1) problems.push_back("drones_per_scene min must be >= 1");
    if (drones_max < drones_min) {
        problems.push_back("drones_per_scene max must be >= min");
    }
    if (style != Style::random_backgrounds && hdri_library.empty()) {
        problems.push_back("hdri_library must not be empty for style " +
                           style_to_string(style));
    }
    if (!problems.empty()) {
        std::string joined;
        for (size_t i = 0; i < problems.size(); ++i) {
            if (i) joined += "; ";
            joined += problems[i];
        }
        throw ConfigError(joined);
    }
}

std::string GenerationConfig::to_json() const {
    ordered_json j;
    j["style"] = style_to_string(style);
    j["camera_bound_B"] = camera_bound_B;
    j["focal_range"] = {focal_min_mm, focal_max_mm};
    j["dataset_size"] = dataset_size;
    j["segment_length"] = segment_length;
    j["master_seed"] = master_seed;
    j["image_width"] = image_width;
    j["image_height"] = image_height;
    j["drones_per_scene"] = {drones_min, drones_max};
    j["hdri_library"] = hdri_library;
    return j.dump(2) + "\n";
}

uint64_t GenerationConfig::hash() const {
    std::string canon = to_json();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

const std::set<std::string> kKnownKeys = {
    "style",         "camera_bound_B", "focal_range",
    "dataset_size",  "segment_length", "master_seed",
    "image_width",   "image_height",   "drones_per_scene",
    "hdri_library",
};

int require_int(const json& j, const std::string& key) {
    if (!j.is_number_integer()) {
        throw ConfigError(key + ": expected an integer");
    }
    return j.get<int>();
}

double require_number(const json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError(key + ": expected a number");
    return j.get<double>();
}

}  // namespace

GenerationConfig parse_generation_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config must be a JSON object");

    for (const auto& [key, _] : root.items()) {
        if (!kKnownKeys.count(key)) {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    GenerationConfig cfg;
    if (!root.contains("style")) throw ConfigError("missing key 'style'");
    if (!root["style"].is_string()) throw ConfigError("style: expected a string");
    cfg.style = style_from_string(root["style"].get<std::string>());

    if (root.contains("camera_bound_B")) {
        cfg.camera_bound_B = require_number(root["camera_bound_B"], "camera_bound_B");
    }
    if (root.contains("focal_range")) {
        const auto& fr = root["focal_range"];
        if (!fr.is_array() || fr.size() != 2) {
            throw ConfigError("focal_range: expected [min, max]");
        }
        cfg.focal_min_mm = require_number(fr[0], "focal_range[0]");
        cfg.focal_max_mm = require_number(fr[1], "focal_range[1]");
    }
    if (root.contains("dataset_size")) {
        cfg.dataset_size = require_int(root["dataset_size"], "dataset_size");
    }
    if (root.contains("segment_length")) {
        cfg.segment_length = require_int(root["segment_length"], "segment_length");
    }
    if (root.contains("master_seed")) {
        if (!root["master_seed"].is_number_unsigned() &&
            !root["master_seed"].is_number_integer()) {
            throw ConfigError("master_seed: expected an integer");
        }
        cfg.master_seed = root["master_seed"].get<uint64_t>();
        cfg.master_seed_set = true;
    }
    if (root.contains("image_width")) {
        cfg.image_width = require_int(root["image_width"], "image_width");
    }
    if (root.contains("image_height")) {
        cfg.image_height = require_int(root["image_height"], "image_height");
    }
    if (root.contains("drones_per_scene")) {
        const auto& dr = root["drones_per_scene"];
        if (!dr.is_array() || dr.size() != 2) {
            throw ConfigError("drones_per_scene: expected [min, max]");
        }
        cfg.drones_min = require_int(dr[0], "drones_per_scene[0]");
        cfg.drones_max = require_int(dr[1], "drones_per_scene[1]");
    }
    if (root.contains("hdri_library")) {
        const auto& lib = root["hdri_library"];
        if (!lib.is_array()) throw ConfigError("hdri_library: expected an array");
        for (const auto& entry : lib) {
            if (!entry.is_string()) {
                throw ConfigError("hdri_library: entries must be strings");
            }
            cfg.hdri_library.push_back(entry.get<std::string>());
        }
    }
    cfg.validate();
    return cfg;
}

GenerationConfig load_generation_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_generation_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.message());
    }
}

}  // namespace sdrforge
