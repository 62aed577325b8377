#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdrforge {

enum class Style {
    drones_only,
    drones_birds,
    generic_distractors,
    realistic_distractors,
    random_backgrounds,
};

Style style_from_string(const std::string& name);
std::string style_to_string(Style style);

// Everything the generator needs to be a pure function of (config, seed).
struct GenerationConfig {
    Style style = Style::drones_only;
    double camera_bound_B = 40.0;        // half-extent of the sampling cube, m
    double focal_min_mm = 15.0;
    double focal_max_mm = 300.0;
    int dataset_size = 1;
    int segment_length = 300;
    uint64_t master_seed = 0;
    bool master_seed_set = false;        // false -> CLI/env fallback applies
    int image_width = 640;
    int image_height = 480;
    int drones_min = 1;
    int drones_max = 5;
    std::vector<std::string> hdri_library;

    // Throws ConfigError listing every violated invariant.
    void validate() const;

    // Canonical JSON (stable key order, resolved defaults).
    std::string to_json() const;

    // FNV-1a over the canonical form; identifies a dataset for resume checks.
    uint64_t hash() const;
};

// Strict parser: unknown keys raise ConfigError naming the key path.
GenerationConfig parse_generation_config(const std::string& json_text);
GenerationConfig load_generation_config(const std::string& path);

}  // namespace sdrforge
