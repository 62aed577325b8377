#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sdrforge/coco.hpp"
#include "sdrforge/image.hpp"
#include "sdrforge/scene.hpp"

namespace sdrforge {

using IdCategoryMap = std::map<uint32_t, Category>;

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // row-major 0/1

    BinaryMask() = default;
    BinaryMask(int w, int h)
        : width(w), height(h), data(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const {
        return data[static_cast<size_t>(y) * width + x];
    }
    size_t set_pixel_count() const;
};

// One disjoint mask per distinct nonzero id, ascending id order. Throws
// UnknownId when the buffer holds an id missing from the map.
std::vector<std::pair<uint32_t, BinaryMask>> extract_instances(
    const Image<uint32_t, 1>& instance_ids, const IdCategoryMap& categories);

// Tight axis-aligned fit. Throws EmptyMask.
BBox mask_to_bbox(const BinaryMask& mask);

// Column-major RLE, zeros-first. decode(encode(m)) == m.
RleMask encode_rle(const BinaryMask& mask);
BinaryMask decode_rle(const RleMask& rle);

// Category colors: drone white, bird blue, distractor green, background
// black.
ImageRgb8 colorize_mask(const Image<uint32_t, 1>& instance_ids,
                        const IdCategoryMap& categories);

// Instances with fewer than `min_pixels` mask pixels are left out of the
// annotation list (they stay visible in the mask images).
constexpr size_t kMinAnnotationPixels = 3;

std::vector<Annotation> annotate_image(const Image<uint32_t, 1>& instance_ids,
                                       const IdCategoryMap& categories,
                                       int64_t image_id,
                                       size_t min_pixels = kMinAnnotationPixels);

// COCO ground-truth file for the manifest, with bird/distractor annotations
// included only on request (mask images always show every category).
// Returns the written path (<output_dir>/annotations.json).
std::string write_dataset(const DatasetManifest& manifest, bool include_birds,
                          bool include_distractors,
                          const std::string& output_dir);

}  // namespace sdrforge
