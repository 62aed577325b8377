#pragma once

#include <cstdint>
#include <vector>

#include "sdrforge/config.hpp"
#include "sdrforge/rng.hpp"
#include "sdrforge/scene.hpp"

namespace sdrforge {

// The swarm flies inside a fixed 100 m box; the camera cube is centered on
// the swarm, so the box origin is arbitrary.
struct FlightBox {
    static constexpr double x_min = -50.0, x_max = 50.0;
    static constexpr double y_min = -50.0, y_max = 50.0;
    static constexpr double z_min = 5.0, z_max = 105.0;
};

// Cubic Bezier path shared by the swarm; each drone adds a constant ring
// offset so pairwise distances stay bounded away from zero. Deterministic
// in (master_seed, segment_index).
std::vector<std::vector<Pose>> generate_swarm_path(uint64_t master_seed,
                                                   int64_t segment_index,
                                                   int n_drones,
                                                   int segment_length);

// Position uniform in the cube [centroid - B, centroid + B]^3 clamped to
// altitude >= 0.5 m; focal length uniform in the configured range; look-at
// jittered inside a sphere of radius 0.1 B around the centroid.
CameraSpec sample_camera(uint64_t master_seed, int64_t segment_index,
                         int64_t frame_index, const GenerationConfig& config,
                         const Vec3& swarm_centroid);

// Per-segment environment choice: uniform library index plus uniform yaw in
// [0, 2pi). Throws EmptyLibrary.
struct EnvironmentChoice {
    size_t library_index = 0;
    double yaw = 0.0;
};
EnvironmentChoice select_environment(uint64_t master_seed,
                                     int64_t segment_index,
                                     const GenerationConfig& config);

// Style extras: static colored primitives/props, or birds flying swarm-like
// paths. Instance ids start at `first_instance_id`. Throws StyleMismatch for
// styles without extras.
std::vector<SceneEntity> place_distractors(uint64_t master_seed,
                                           int64_t segment_index, Style style,
                                           const GenerationConfig& config,
                                           uint32_t first_instance_id);

// Flat-color collage: random palette, random shapes, random blend modes.
// Deterministic in (master_seed, frame_index).
ImageRgb8 synthesize_random_background(uint64_t master_seed,
                                       int64_t frame_index, int width,
                                       int height);

// Preloaded hdri_library entries, index-aligned with the config.
using EnvironmentLibrary = std::vector<EnvironmentPtr>;
EnvironmentLibrary load_environment_library(const GenerationConfig& config,
                                            const std::string& base_dir);

// Assembles the complete frame: swarm + style extras + camera + environment.
// Re-samples the camera up to 8 times when no drone lands in the image, then
// keeps the frame flagged as empty-of-target.
SceneFrame build_frame(uint64_t master_seed, int64_t global_frame_index,
                       const GenerationConfig& config,
                       const EnvironmentLibrary& library);

}  // namespace sdrforge
