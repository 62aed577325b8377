#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdrforge/scene.hpp"

namespace sdrforge {

struct BBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

// COCO-style column-major run-length mask. Counts alternate runs of zeros
// and ones, zeros first; they sum to width * height.
struct RleMask {
    std::vector<uint64_t> counts;
    int height = 0;
    int width = 0;

    bool present() const { return width > 0 && height > 0; }
};

struct Annotation {
    int64_t id = 0;
    int64_t image_id = 0;
    int category_id = 0;  // 1 drone, 2 bird, 3 distractor
    BBox bbox;            // tight xywh fit of the mask, pixels
    double area = 0.0;    // mask pixel count (bbox area for box-only data)
    RleMask rle;          // may be absent when reading real datasets
    int iscrowd = 0;
};

struct ImageRecord {
    int64_t id = 0;
    std::string file_name;
    int width = 0;
    int height = 0;
};

struct CategoryRecord {
    int id = 0;
    std::string name;
};

struct DatasetManifest {
    std::vector<ImageRecord> images;
    std::vector<Annotation> annotations;
    std::vector<CategoryRecord> categories;
    // provenance, carried in the COCO "info" block
    std::string config_hash;
    uint64_t master_seed = 0;
};

struct Detection {
    int64_t image_id = 0;
    int category_id = 0;
    BBox bbox;
    double score = 0.0;
};

int category_id_of(Category c);

// Deterministic serialization: fixed key order, so identical manifests give
// identical bytes.
std::string manifest_to_json(const DatasetManifest& manifest);
void write_ground_truth(const DatasetManifest& manifest,
                        const std::string& path);

// Strict by default: nonstandard keys raise IntegrityError; `lenient`
// tolerates them (real public datasets carry extras). Both modes verify
// referential integrity, unique annotation ids, finite numbers, and
// bbox arity. Annotations without a mask get area = bbox area unless the
// file supplies one.
DatasetManifest read_ground_truth(const std::string& path,
                                  bool lenient = false);

// COCO results array: [{image_id, category_id, bbox, score}]. File order is
// preserved (it breaks score ties downstream).
std::vector<Detection> read_results(const std::string& path,
                                    bool lenient = false);
std::string results_to_json(const std::vector<Detection>& detections);
void write_results(const std::vector<Detection>& detections,
                   const std::string& path);

}  // namespace sdrforge
