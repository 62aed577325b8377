#pragma once

#include "sdrforge/geometry.hpp"

namespace sdrforge {

// Ideal pinhole camera, focused at infinity (no defocus model). The sensor
// is 36 mm wide; vertical extent follows the pixel aspect.
struct CameraSpec {
    Vec3 position;
    Vec3 look_at;
    double focal_length_mm = 36.0;
    double sensor_width_mm = 36.0;
    int image_width = 640;
    int image_height = 480;
};

// Orthonormal view frame: forward toward look_at, up is world +Z projected
// orthogonal to forward (falls back to +X when looking straight up/down).
struct CameraBasis {
    Vec3 forward;
    Vec3 right;
    Vec3 up;

    static CameraBasis from(const CameraSpec& cam);
};

struct Projected {
    double x = 0.0;      // pixels, origin top-left
    double y = 0.0;
    double depth = 0.0;  // meters along the view axis
    bool behind = false;
};

// Pinhole projection. Points at or behind the camera plane return the
// behind-camera marker instead of coordinates.
Projected project(const Vec3& world_point, const CameraSpec& cam);
Projected project(const Vec3& world_point, const CameraSpec& cam,
                  const CameraBasis& basis);

// Unit world direction through a pixel position (fractional coordinates,
// (0,0) is the top-left image corner).
Vec3 pixel_ray_direction(const CameraSpec& cam, const CameraBasis& basis,
                         double px, double py);

}  // namespace sdrforge
