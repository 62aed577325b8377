#pragma once

#include <cstdint>

#include "sdrforge/camera.hpp"
#include "sdrforge/hdri.hpp"
#include "sdrforge/image.hpp"
#include "sdrforge/scene.hpp"

namespace sdrforge {

// RGB image plus the per-pixel instance-id and depth buffers. The id buffer
// is the segmentation ground truth: 0 is background, otherwise the winning
// entity's instance_id. Depth is meters along the view axis, +inf at
// background pixels.
struct RenderOutput {
    ImageRgb8 rgb;
    Image<uint32_t, 1> instance_ids;
    Image<double, 1> depth;
};

// Environment lookup along a unit direction (yaw handled by the map).
Rgb sample_environment(const Vec3& direction, const HdriEnvironment& env);

// Flat Lambertian: base_color * (ambient + k * max(0, n . L)) with L the
// brightest-texel direction, ambient the mean map luminance, and
// k = 1 - ambient so a light-facing surface renders at full base color.
Rgb shade(const Vec3& unit_normal, const Rgb& base_color,
          const HdriEnvironment& env);

// Z-buffered triangle rasterization of every entity; nearest depth wins,
// ties go to the lower instance_id. No anti-aliasing anywhere: the id and
// RGB buffers come from the same per-pixel-center sample, so masks are
// exact sets. Deterministic for identical frames.
RenderOutput rasterize(const SceneFrame& frame);

}  // namespace sdrforge
