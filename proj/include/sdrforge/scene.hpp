#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sdrforge/camera.hpp"
#include "sdrforge/geometry.hpp"
#include "sdrforge/hdri.hpp"
#include "sdrforge/image.hpp"
#include "sdrforge/mesh.hpp"

namespace sdrforge {

enum class Category { drone = 1, bird = 2, distractor = 3 };

std::string category_to_string(Category c);

// One animated object over a whole segment. instance_id 0 is reserved for
// the background.
struct SceneEntity {
    std::shared_ptr<const Mesh> mesh;
    Category category = Category::drone;
    std::vector<Pose> trajectory;  // one pose per frame of the segment
    uint32_t instance_id = 1;
};

// Entity with the pose resolved for a single frame.
struct PlacedEntity {
    std::shared_ptr<const Mesh> mesh;
    Category category = Category::drone;
    Pose pose;
    uint32_t instance_id = 1;
};

// Fully resolved description of one frame; everything the renderer needs
// and nothing it has to derive. Exactly one of `environment` /
// `background_image` is set.
struct SceneFrame {
    int64_t frame_index = 0;
    int64_t segment_index = 0;
    std::vector<PlacedEntity> entities;
    CameraSpec camera;
    std::shared_ptr<const HdriEnvironment> environment;  // yaw already applied
    std::shared_ptr<const ImageRgb8> background_image;
    bool target_visible = true;  // false: no drone projected into the image
    std::vector<std::pair<std::string, uint64_t>> rng_trace;
};

}  // namespace sdrforge
