#pragma once

#include <memory>
#include <string>

#include "sdrforge/geometry.hpp"
#include "sdrforge/image.hpp"

namespace sdrforge {

// Equirectangular environment map. Width must be twice the height. The +Z
// axis maps to the top row, longitude 0 (the +X axis) to the horizontal
// center of the image. Immutable after construction; lighting statistics
// are precomputed so shading never rescans the pixels.
class HdriEnvironment {
public:
    // Channels in [0, 1] (8-bit sources are normalized). Throws AspectError
    // if width != 2 * height.
    HdriEnvironment(Image<float, 3> pixels, double yaw_rotation = 0.0);

    int width() const { return pixels_.width; }
    int height() const { return pixels_.height; }
    double yaw_rotation() const { return yaw_; }
    const Image<float, 3>& pixels() const { return pixels_; }

    // Returns a copy sharing nothing; yaw changes the lookup longitude only.
    HdriEnvironment with_yaw(double yaw_rotation) const;

    // Bilinear lookup of a unit direction, yaw applied, longitude wraps,
    // latitude clamps at the poles.
    Rgb sample(const Vec3& direction) const;

    // Nearest-texel mapping (yaw ignored); exact inverses for texel centers.
    void direction_to_texel(const Vec3& direction, int& x, int& y) const;
    Vec3 texel_to_direction(int x, int y) const;

    // World direction of the brightest texel, with yaw applied.
    Vec3 dominant_light_direction() const;
    double mean_luminance() const { return mean_luminance_; }

private:
    Image<float, 3> pixels_;
    double yaw_ = 0.0;
    // stats over the raw map (yaw-independent)
    int bright_x_ = 0;
    int bright_y_ = 0;
    double mean_luminance_ = 0.0;
};

using EnvironmentPtr = std::shared_ptr<const HdriEnvironment>;

// PNG loader; any PNG convertible to RGB is accepted (no HDR float formats;
// the lighting model only needs relative luminance). Throws FileNotFound,
// AspectError.
HdriEnvironment load_hdri(const std::string& path);

}  // namespace sdrforge
