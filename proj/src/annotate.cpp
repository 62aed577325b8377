#include "sdrforge/annotate.hpp"

#include <algorithm>
#include <filesystem>

#include "sdrforge/errors.hpp"

namespace sdrforge {

size_t BinaryMask::set_pixel_count() const {
    size_t n = 0;
    for (uint8_t v : data) n += v != 0;
    return n;
}

std::vector<std::pair<uint32_t, BinaryMask>> extract_instances(
    const Image<uint32_t, 1>& instance_ids, const IdCategoryMap& categories) {
    std::map<uint32_t, BinaryMask> masks;  // ordered -> ascending ids out
    for (int y = 0; y < instance_ids.height; ++y) {
        for (int x = 0; x < instance_ids.width; ++x) {
            uint32_t id = instance_ids.at(x, y);
            if (id == 0) continue;
            if (!categories.count(id)) {
                throw UnknownId("instance id " + std::to_string(id) +
                                " missing from the category map");
            }
            auto [it, inserted] = masks.try_emplace(
                id, instance_ids.width, instance_ids.height);
            it->second.at(x, y) = 1;
        }
    }
    std::vector<std::pair<uint32_t, BinaryMask>> out;
    out.reserve(masks.size());
    for (auto& [id, mask] : masks) out.emplace_back(id, std::move(mask));
    return out;
}

BBox mask_to_bbox(const BinaryMask& mask) {
    int min_x = mask.width, max_x = -1, min_y = mask.height, max_y = -1;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y)) continue;
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    if (max_x < 0) throw EmptyMask("mask has no set pixels");
    return {static_cast<double>(min_x), static_cast<double>(min_y),
            static_cast<double>(max_x - min_x + 1),
            static_cast<double>(max_y - min_y + 1)};
}

RleMask encode_rle(const BinaryMask& mask) {
    RleMask rle;
    rle.width = mask.width;
    rle.height = mask.height;
    uint8_t current = 0;  // zeros-first convention
    uint64_t run = 0;
    for (int x = 0; x < mask.width; ++x) {
        for (int y = 0; y < mask.height; ++y) {
            uint8_t v = mask.at(x, y) ? 1 : 0;
            if (v == current) {
                ++run;
            } else {
                rle.counts.push_back(run);
                current = v;
                run = 1;
            }
        }
    }
    rle.counts.push_back(run);
    return rle;
}

BinaryMask decode_rle(const RleMask& rle) {
    BinaryMask mask(rle.width, rle.height);
    uint64_t total = static_cast<uint64_t>(rle.width) * rle.height;
    uint64_t pos = 0;
    uint8_t value = 0;
    for (uint64_t count : rle.counts) {
        for (uint64_t k = 0; k < count; ++k) {
            if (pos >= total) {
                throw ParseError("RLE counts exceed mask size");
            }
            int x = static_cast<int>(pos / rle.height);
            int y = static_cast<int>(pos % rle.height);
            mask.at(x, y) = value;
            ++pos;
        }
        value = value ? 0 : 1;
    }
    if (pos != total) throw ParseError("RLE counts do not cover the mask");
    return mask;
}

ImageRgb8 colorize_mask(const Image<uint32_t, 1>& instance_ids,
                        const IdCategoryMap& categories) {
    ImageRgb8 out(instance_ids.width, instance_ids.height);
    for (int y = 0; y < instance_ids.height; ++y) {
        for (int x = 0; x < instance_ids.width; ++x) {
            uint32_t id = instance_ids.at(x, y);
            if (id == 0) continue;
            auto it = categories.find(id);
            if (it == categories.end()) {
                throw UnknownId("instance id " + std::to_string(id) +
                                " missing from the category map");
            }
            uint8_t r = 0, g = 0, b = 0;
            switch (it->second) {
                case Category::drone: r = g = b = 255; break;
                case Category::bird: b = 255; break;
                case Category::distractor: g = 255; break;
            }
            out.at(x, y, 0) = r;
            out.at(x, y, 1) = g;
            out.at(x, y, 2) = b;
        }
    }
    return out;
}

std::vector<Annotation> annotate_image(const Image<uint32_t, 1>& instance_ids,
                                       const IdCategoryMap& categories,
                                       int64_t image_id, size_t min_pixels) {
    std::vector<Annotation> annotations;
    for (auto& [id, mask] : extract_instances(instance_ids, categories)) {
        size_t pixels = mask.set_pixel_count();
        if (pixels < min_pixels) continue;
        Annotation ann;
        ann.image_id = image_id;
        ann.category_id = category_id_of(categories.at(id));
        ann.bbox = mask_to_bbox(mask);
        ann.area = static_cast<double>(pixels);
        ann.rle = encode_rle(mask);
        annotations.push_back(std::move(ann));
    }
    return annotations;
}

std::string write_dataset(const DatasetManifest& manifest, bool include_birds,
                          bool include_distractors,
                          const std::string& output_dir) {
    DatasetManifest filtered;
    filtered.images = manifest.images;
    filtered.config_hash = manifest.config_hash;
    filtered.master_seed = manifest.master_seed;

    auto keep_category = [&](int id) {
        if (id == category_id_of(Category::bird)) return include_birds;
        if (id == category_id_of(Category::distractor)) return include_distractors;
        return true;
    };
    for (const auto& ann : manifest.annotations) {
        if (keep_category(ann.category_id)) filtered.annotations.push_back(ann);
    }
    for (const auto& cat : manifest.categories) {
        if (keep_category(cat.id)) filtered.categories.push_back(cat);
    }

    std::filesystem::create_directories(output_dir);
    std::string path =
        (std::filesystem::path(output_dir) / "annotations.json").string();
    write_ground_truth(filtered, path);
    return path;
}

}  // namespace sdrforge
